#include "spindyn/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace spindyn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool FieldSample::has_gradient() const {
    for (const auto& g : grad)
        if (!(g == AntisymTensor2{})) return true;
    return false;
}

std::string_view FieldModel::tag() const {
    return std::visit(overloaded{[](const UniformField&) { return std::string_view{"uniform"}; },
                                 [](const MagneticQuadrupole&) { return std::string_view{"magnetic-quadrupole"}; },
                                 [](const LinearEGradient&) { return std::string_view{"linear-E-gradient"}; }},
                      model_);
}

bool FieldModel::is_uniform() const { return std::holds_alternative<UniformField>(model_); }

bool FieldModel::nonphysical() const { return std::holds_alternative<LinearEGradient>(model_); }

FieldSample FieldModel::sample(const FourVector& r) const {
    const Vec3 x = r.spatial();
    return std::visit(
        overloaded{
            [](const UniformField& f) { return FieldSample{field_from_EB(f.E, f.B), {}}; },
            [&x](const MagneticQuadrupole& q) {
                FieldSample s;
                s.H = field_from_EB({}, {q.gradient * x.y, q.gradient * x.x, q.bz});
                // d/dx B = (0, b, 0), d/dy B = (b, 0, 0).
                s.grad[1] = field_from_EB({}, {0.0, q.gradient, 0.0});
                s.grad[2] = field_from_EB({}, {q.gradient, 0.0, 0.0});
                return s;
            },
            [&x](const LinearEGradient& l) {
                FieldSample s;
                s.H = field_from_EB({l.k * x.x, 0.0, 0.0}, {});
                s.grad[1] = field_from_EB({l.k, 0.0, 0.0}, {});
                return s;
            }},
        model_);
}

FourVector contract_gradient(const AntisymTensor2& t, const FieldGradient& grad) {
    return {contract_tt(t, grad[0]), contract_tt(t, grad[1]), contract_tt(t, grad[2]), contract_tt(t, grad[3])};
}

void require_on_shell(const FourVector& v, double c, double tol) {
    const double c2 = c * c;
    if (!(std::fabs(contract_vv(v, v) + c2) <= tol * c2))
        throw std::domain_error("4-velocity is off shell (v.v != -c^2)");
}

namespace {

double timelike_norm2(const FourVector& v) {
    const double n2 = -contract_vv(v, v);
    if (!(n2 > 0.0)) throw std::domain_error("projection needs a time-like 4-velocity");
    return n2;
}

FieldGradient project_gradient(const FieldSample& sample, const FourVector& v, double n2) {
    // v_lambda d^lambda H
    AntisymTensor2 along;
    for (int l = 0; l < 4; ++l) along += (metric(l) * v[l]) * sample.grad[static_cast<std::size_t>(l)];
    FieldGradient out = sample.grad;
    for (int r = 0; r < 4; ++r) out[static_cast<std::size_t>(r)] += (v[r] / n2) * along;
    return out;
}

AntisymTensor2 project_field(const AntisymTensor2& H, const FourVector& v, double n2) {
    // v_rho H^{rho beta} = -(H v)^beta
    return H - (1.0 / n2) * bracket(v, contract_tv(H, v));
}

}  // namespace

FieldGradient spacelike_derivative(const FieldSample& sample, const FourVector& v, double c) {
    require_on_shell(v, c);
    return project_gradient(sample, v, c * c);
}

AntisymTensor2 spacelike_field(const AntisymTensor2& H, const FourVector& v, double c) {
    require_on_shell(v, c);
    return project_field(H, v, c * c);
}

FieldGradient orthogonal_derivative(const FieldSample& sample, const FourVector& v) {
    return project_gradient(sample, v, timelike_norm2(v));
}

AntisymTensor2 orthogonal_field(const AntisymTensor2& H, const FourVector& v) {
    return project_field(H, v, timelike_norm2(v));
}

}  // namespace spindyn
