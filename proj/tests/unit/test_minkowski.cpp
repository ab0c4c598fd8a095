#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "spindyn/minkowski.hpp"

using namespace spindyn;

TEST_CASE("contract_vv examples") {
    const double c = 3.0;
    CHECK(contract_vv({c, 0, 0, 0}, {c, 0, 0, 0}) == -c * c);
    CHECK(contract_vv({1, 1, 0, 0}, {1, 1, 0, 0}) == 0.0);
    CHECK(contract_vv({2, 1, 0, 0}, {0, 0, 3, 0}) == 0.0);
}

TEST_CASE("contract_vv symmetric and bilinear") {
    oracle::Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        const FourVector a = gen.four(), b = gen.four();
        CHECK(contract_vv(a, b) == contract_vv(b, a));
        CHECK(contract_vv(4.0 * a, b) == 4.0 * contract_vv(a, b));
        CHECK(contract_vv(a, 0.5 * b) == 0.5 * contract_vv(a, b));
        CHECK(contract_vv(a, b) == doctest::Approx(oracle::vv(a, b)).epsilon(1e-14));
    }
}

TEST_CASE("lower and raise are inverse") {
    oracle::Gen gen(12);
    for (int i = 0; i < 20; ++i) {
        const FourVector a = gen.four();
        CHECK(a.lowered().raised() == a);
        CHECK(a.raised().lowered() == a);
    }
}

TEST_CASE("tensor storage round trip and antisymmetry") {
    oracle::Gen gen(13);
    for (int i = 0; i < 50; ++i) {
        const AntisymTensor2 t = gen.tensor();
        const auto m = t.to_matrix();
        CHECK(oracle::antisymmetry_defect(m) == 0.0);
        CHECK(AntisymTensor2::from_matrix(m) == t);
        CHECK(m == oracle::dense(t));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(t(a, b) == m[a][b]);
    }
}

TEST_CASE("contract_tv examples") {
    CHECK(contract_tv(AntisymTensor2{}, {1, 2, 3, 4}) == FourVector{});
    const double E = 0.7, c = 2.0;
    const FourVector u = contract_tv(field_from_EB({E, 0, 0}, {}), {c, 0, 0, 0});
    CHECK(u[0] == 0.0);
    CHECK(u[1] == doctest::Approx(E * c));
    CHECK(u[2] == 0.0);
    CHECK(u[3] == 0.0);
}

TEST_CASE("contract_tv matches dense oracle and is v-orthogonal") {
    oracle::Gen gen(14);
    for (int i = 0; i < 100; ++i) {
        const AntisymTensor2 t = gen.tensor();
        const FourVector v = gen.four();
        const FourVector u = contract_tv(t, v);
        CHECK(oracle::max_abs_diff(u, oracle::tv(oracle::dense(t), v)) < 1e-14);
        const double scale = oracle::max_abs(t) * component_norm(v) * component_norm(v);
        CHECK(std::fabs(contract_vv(v, u)) < 1e-13 * scale);
    }
}

TEST_CASE("contract_tt examples") {
    const AntisymTensor2 a{{}, {0, 0, 1}};
    CHECK(contract_tt(a, a) == 2.0);
    const double B0 = 1.7;
    CHECK(contract_tt(field_from_EB({}, {0, 0, B0}), a) == doctest::Approx(2 * B0));
    // e and b orthogonal: the dual pairing is 4 e.b = 0.
    const AntisymTensor2 ortho{{1, 0, 0}, {0, 2, 0}};
    CHECK(contract_tt(ortho, dual(ortho)) == 0.0);
    CHECK(oracle::tt(oracle::dense(ortho), oracle::dual(oracle::dense(ortho))) == 0.0);
}

TEST_CASE("contract_tt matches dense oracle") {
    oracle::Gen gen(15);
    for (int i = 0; i < 100; ++i) {
        const AntisymTensor2 a = gen.tensor(), b = gen.tensor();
        CHECK(contract_tt(a, b) == doctest::Approx(oracle::tt(oracle::dense(a), oracle::dense(b))).epsilon(1e-13));
    }
}

TEST_CASE("bracket examples") {
    const FourVector a{1, 2, 3, 4};
    CHECK(bracket(a, a) == AntisymTensor2{});
    const AntisymTensor2 t = bracket({1, 0, 0, 0}, {0, 1, 0, 0});
    CHECK(t(1, 0) == -1.0);
    CHECK(t.e == Vec3{-1, 0, 0});
    CHECK(t.b == Vec3{});
    oracle::Gen gen(16);
    for (int i = 0; i < 50; ++i) {
        const FourVector x = gen.four(), y = gen.four();
        CHECK(bracket(x, y) == -bracket(y, x));
        CHECK(oracle::max_abs_diff(bracket(x, y).to_matrix(), oracle::bracket(x, y)) < 1e-15);
    }
}

TEST_CASE("commutator_bracket") {
    oracle::Gen gen(17);
    SUBCASE("A with itself vanishes") {
        for (int i = 0; i < 20; ++i) {
            const AntisymTensor2 a = gen.tensor();
            CHECK(oracle::max_abs(commutator_bracket(a, a)) < 1e-15);
        }
    }
    SUBCASE("matches dense oracle") {
        for (int i = 0; i < 100; ++i) {
            const AntisymTensor2 a = gen.tensor(), b = gen.tensor();
            const auto dense = oracle::commutator(oracle::dense(a), oracle::dense(b));
            CHECK(oracle::antisymmetry_defect(dense) < 1e-15);
            CHECK(oracle::max_abs_diff(commutator_bracket(a, b).to_matrix(), dense) < 1e-14);
            const FourVector v = gen.four();
            CHECK(oracle::max_abs_diff(contract_tv(commutator_bracket(a, b), v), oracle::tv(dense, v)) < 1e-13);
        }
    }
    SUBCASE("rest-frame Larmor generator") {
        // [H, Pi] for B along z and Pi.b = x gives b-part = zeta x B.
        const double B0 = 2.5;
        const AntisymTensor2 c = commutator_bracket(field_from_EB({}, {0, 0, B0}), {{}, {1, 0, 0}});
        CHECK(c.e == Vec3{});
        const Vec3 expected = cross(Vec3{1, 0, 0}, Vec3{0, 0, B0});
        CHECK(max_abs(c.b - expected) < 1e-15);
    }
}

TEST_CASE("dual") {
    CHECK(dual(AntisymTensor2{}) == AntisymTensor2{});
    const AntisymTensor2 d = dual({{1, 0, 0}, {}});
    CHECK(d.e == Vec3{});
    CHECK(d.b == Vec3{1, 0, 0});
    CHECK(oracle::max_abs_diff(d.to_matrix(), oracle::dual(oracle::dense({{1, 0, 0}, {}}))) == 0.0);

    oracle::Gen gen(18);
    for (int i = 0; i < 100; ++i) {
        const AntisymTensor2 t = gen.tensor();
        CHECK(oracle::max_abs_diff(dual(t).to_matrix(), oracle::dual(oracle::dense(t))) < 1e-15);
        CHECK(oracle::max_abs_diff(dual(dual(t)), -t) == 0.0);
        const double pairing = oracle::tt(oracle::dense(t), oracle::dual(oracle::dense(t)));
        CHECK(contract_tt(t, dual(t)) == doctest::Approx(pairing).epsilon(1e-13));
        CHECK(contract_tt(t, dual(t)) == doctest::Approx(4.0 * dot(t.e, t.b)).epsilon(1e-13));
    }
}

TEST_CASE("field component map") {
    const AntisymTensor2 h = field_from_EB({1, 0, 0}, {});
    CHECK(h(1, 0) == -1.0);
    CHECK(field_from_EB({}, {0, 0, 1})(1, 2) == 1.0);
    oracle::Gen gen(19);
    for (int i = 0; i < 50; ++i) {
        const Vec3 E = gen.vec(), B = gen.vec();
        const auto eb = EB_from_field(field_from_EB(E, B));
        CHECK(eb.E == E);
        CHECK(eb.B == B);
    }
}

TEST_CASE("boost basics") {
    CHECK_THROWS_AS(Boost({1.0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(Boost({0.8, 0.7, 0}), std::domain_error);
    const Boost id({});
    const FourVector a{1, 2, 3, 4};
    CHECK(boost_vector(id, a) == a);
    const AntisymTensor2 t{{1, 2, 3}, {4, 5, 6}};
    CHECK(boost_tensor(id, t) == t);

    const double c = 2.0;
    const Vec3 beta{0.3, -0.4, 0.5};
    const Boost b(beta);
    CHECK(b.gamma() * b.gamma() * (1.0 - dot(beta, beta)) == doctest::Approx(1.0).epsilon(1e-15));
    const double gm = b.gamma();
    const FourVector v{c * gm, c * gm * beta};
    const FourVector rest = boost_vector(Boost::to_rest_frame_of(beta), v);
    CHECK(rest[0] == doctest::Approx(c).epsilon(1e-14));
    CHECK(max_abs(rest.spatial()) < 1e-14);
    const FourVector back = boost_vector(b, {c, 0, 0, 0});
    CHECK(oracle::max_abs_diff(back, v) < 1e-14);
}

TEST_CASE("boost field transformation example") {
    const double E = 1.3, beta = 0.6;
    const double gm = 1.0 / std::sqrt(1 - beta * beta);
    const auto rest = EB_from_field(boost_tensor(Boost::to_rest_frame_of({beta, 0, 0}), field_from_EB({0, E, 0}, {})));
    CHECK(rest.E.y == doctest::Approx(gm * E).epsilon(1e-14));
    CHECK(rest.B.z == doctest::Approx(-gm * beta * E).epsilon(1e-14));
    CHECK(std::fabs(rest.E.x) + std::fabs(rest.E.z) + std::fabs(rest.B.x) + std::fabs(rest.B.y) < 1e-15);
}

TEST_CASE("boosts agree with matrix conjugation and preserve invariants") {
    oracle::Gen gen(20);
    for (int i = 0; i < 200; ++i) {
        const Vec3 beta = gen.beta(0.99);
        const Boost b(beta);
        const auto L = oracle::boost_matrix(beta);
        const FourVector a = gen.four();
        const FourVector a2 = boost_vector(b, a);
        const double scale = b.gamma() * b.gamma() * component_norm(a) * component_norm(a);
        CHECK(oracle::max_abs_diff(a2, oracle::apply(L, a)) < 1e-12 * b.gamma() * component_norm(a));
        CHECK(std::fabs(contract_vv(a2, a2) - contract_vv(a, a)) < 1e-12 * scale);

        const AntisymTensor2 t = gen.tensor();
        const AntisymTensor2 t2 = boost_tensor(b, t);
        const double tscale = b.gamma() * b.gamma() * oracle::max_abs(t);
        CHECK(oracle::max_abs_diff(t2.to_matrix(), oracle::conjugate(L, oracle::dense(t))) < 1e-12 * tscale);
        const auto eb = EB_from_field(t), eb2 = EB_from_field(t2);
        const double inv_scale = tscale * tscale;
        CHECK(std::fabs((dot(eb2.B, eb2.B) - dot(eb2.E, eb2.E)) - (dot(eb.B, eb.B) - dot(eb.E, eb.E))) <
              1e-12 * inv_scale);
        CHECK(std::fabs(dot(eb2.E, eb2.B) - dot(eb.E, eb.B)) < 1e-12 * inv_scale);
    }
}
