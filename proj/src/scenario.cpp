#include "spindyn/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "spindyn/errors.hpp"
#include "spindyn/spin.hpp"

namespace spindyn {

using nlohmann::json;

namespace {

// Reads one JSON object, recording type errors and unknown keys under its path.
class Section {
public:
    Section(const json& j, std::string path, std::vector<std::string>& errors)
        : j_(j), path_(std::move(path)), errors_(errors) {
        if (!j_.is_object()) {
            fail(path_, "must be an object");
            ok_ = false;
        }
    }

    void allow(std::initializer_list<const char*> keys) {
        if (!ok_) return;
        for (const auto& [key, value] : j_.items()) {
            bool known = false;
            for (const char* k : keys) known = known || key == k;
            if (!known) fail(at(key), "unknown key");
        }
    }

    bool has(const char* key) const { return ok_ && j_.contains(key); }
    const json& get(const char* key) const { return j_.at(key); }
    std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    void number(const char* key, double& out) {
        if (!has(key)) return;
        const json& v = j_.at(key);
        if (v.is_number()) out = v.get<double>();
        else fail(at(key), "must be a number");
    }

    void integer(const char* key, int& out) {
        if (!has(key)) return;
        const json& v = j_.at(key);
        if (v.is_number_integer()) out = v.get<int>();
        else fail(at(key), "must be an integer");
    }

    void boolean(const char* key, bool& out) {
        if (!has(key)) return;
        const json& v = j_.at(key);
        if (v.is_boolean()) out = v.get<bool>();
        else fail(at(key), "must be true or false");
    }

    void string(const char* key, std::string& out) {
        if (!has(key)) return;
        const json& v = j_.at(key);
        if (v.is_string()) out = v.get<std::string>();
        else fail(at(key), "must be a string");
    }

    void vec3(const char* key, Vec3& out) {
        if (!has(key)) return;
        const json& v = j_.at(key);
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
            fail(at(key), "must be an array of three numbers");
            return;
        }
        out = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }

    void fail(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }

private:
    const json& j_;
    std::string path_;
    std::vector<std::string>& errors_;
    bool ok_ = true;
};

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

bool finite(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

void physical_checks(const Scenario& s, std::vector<std::string>& errors) {
    auto fail = [&](const std::string& where, const std::string& what) { errors.push_back(where + ": " + what); };
    const ParticleParams& p = s.particle;
    if (!(p.m0 > 0.0)) fail("particle.m0", "must be > 0");
    if (!(p.c > 0.0)) fail("particle.c", "must be > 0");
    if (!(p.hbar >= 0.0)) fail("particle.hbar", "must be >= 0");
    if (!(p.spin_number > 0.0)) fail("particle.s", "must be > 0");
    if (!std::isfinite(p.charge)) fail("particle.e", "must be finite");
    if (!std::isfinite(p.g)) fail("particle.g", "must be finite");

    const InitialConditions& in = s.initial;
    if (!finite(in.position)) fail("initial.position", "must be finite");
    const double speed = norm(in.beta);
    if (!(speed < 1.0)) {
        std::ostringstream msg;
        msg << "|beta| = " << speed << " must be < 1";
        fail("initial.beta", msg.str());
    }
    const double z = norm(in.zeta);
    if (!(z > 0.0 && z <= 1.0)) {
        std::ostringstream msg;
        msg << "|zeta| = " << z << " must lie in (0, 1]";
        fail("initial.zeta", msg.str());
    }

    const FieldConfig& f = s.field;
    bool known_field = true;
    if (f.type == "uniform") {
        if (!finite(f.E)) fail("field.E", "must be finite");
        if (!finite(f.B)) fail("field.B", "must be finite");
    } else if (f.type == "magnetic-quadrupole") {
        if (!std::isfinite(f.gradient)) fail("field.gradient", "must be finite");
        if (!std::isfinite(f.bz)) fail("field.Bz", "must be finite");
    } else if (f.type == "linear-E-gradient") {
        if (!std::isfinite(f.k)) fail("field.k", "must be finite");
        if (!f.nonphysical)
            fail("field.nonphysical", "linear-E-gradient violates div E = 0 and must be opted into with true");
    } else {
        fail("field.type", "unknown field type '" + f.type + "'");
        known_field = false;
    }

    if (known_field && !supports(s.formulation, f.model()))
        fail("integrator.formulation", std::string(to_string(s.formulation)) + " holds for homogeneous fields only, not " +
                                           f.type);
    if (s.formulation == Formulation::shirokov_momentum && p.hbar == 0.0)
        fail("particle.hbar", "shirokov-momentum needs hbar > 0");

    try {
        s.integrator.validate();
    } catch (const ConfigError& e) {
        errors.insert(errors.end(), e.violations().begin(), e.violations().end());
    }
    if (s.output.format != "csv") fail("output.format", "unknown format '" + s.output.format + "' (csv)");
}

}  // namespace

FieldModel FieldConfig::model() const {
    if (type == "uniform") return FieldModel::uniform(E, B);
    if (type == "magnetic-quadrupole") return FieldModel::quadrupole(gradient, bz);
    if (type == "linear-E-gradient") return FieldModel::linear_e_gradient(k);
    throw ConfigError("field.type: unknown field type '" + type + "'");
}

SpinSystem Scenario::system() const {
    return SpinSystem(formulation, particle, field.model(), integrator.shirokov_iterations);
}

Phase Scenario::initial_phase(const SpinSystem& sys) const {
    return sys.initial(FourVector{0.0, initial.position}, initial.beta, initial.zeta);
}

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario: invalid JSON: ") + e.what());
    }

    Scenario s;
    std::vector<std::string> errors;
    Section top(root, "", errors);
    top.allow({"name", "particle", "initial", "field", "integrator", "output"});
    top.string("name", s.name);

    if (top.has("particle")) {
        Section sec(top.get("particle"), "particle", errors);
        sec.allow({"m0", "e", "g", "hbar", "c", "s"});
        sec.number("m0", s.particle.m0);
        sec.number("e", s.particle.charge);
        sec.number("g", s.particle.g);
        sec.number("hbar", s.particle.hbar);
        sec.number("c", s.particle.c);
        sec.number("s", s.particle.spin_number);
    }
    if (top.has("initial")) {
        Section sec(top.get("initial"), "initial", errors);
        sec.allow({"position", "beta", "zeta"});
        sec.vec3("position", s.initial.position);
        sec.vec3("beta", s.initial.beta);
        sec.vec3("zeta", s.initial.zeta);
    }
    if (top.has("field")) {
        Section sec(top.get("field"), "field", errors);
        sec.string("type", s.field.type);
        if (s.field.type == "uniform") sec.allow({"type", "E", "B", "nonphysical"});
        else if (s.field.type == "magnetic-quadrupole") sec.allow({"type", "gradient", "Bz", "nonphysical"});
        else if (s.field.type == "linear-E-gradient") sec.allow({"type", "k", "nonphysical"});
        sec.vec3("E", s.field.E);
        sec.vec3("B", s.field.B);
        sec.number("gradient", s.field.gradient);
        sec.number("Bz", s.field.bz);
        sec.number("k", s.field.k);
        sec.boolean("nonphysical", s.field.nonphysical);
    }
    if (top.has("integrator")) {
        Section sec(top.get("integrator"), "integrator", errors);
        sec.allow({"formulation", "method", "step", "tolerance", "duration", "stride", "projection",
                   "shirokov_iterations"});
        std::string tag;
        if (sec.has("formulation")) {
            sec.string("formulation", tag);
            if (auto f = parse_formulation(tag)) s.formulation = *f;
            else if (top.get("integrator").at("formulation").is_string())
                sec.fail("integrator.formulation", "unknown formulation '" + tag + "'");
        }
        if (sec.has("method")) {
            tag.clear();
            sec.string("method", tag);
            if (auto m = parse_method(tag)) s.integrator.method = *m;
            else if (top.get("integrator").at("method").is_string())
                sec.fail("integrator.method", "unknown method '" + tag + "' (rk4-fixed, rk45-adaptive)");
        }
        sec.number("step", s.integrator.step);
        sec.number("tolerance", s.integrator.tolerance);
        sec.number("duration", s.integrator.duration);
        sec.integer("stride", s.integrator.stride);
        sec.boolean("projection", s.integrator.projection);
        sec.integer("shirokov_iterations", s.integrator.shirokov_iterations);
    }
    if (top.has("output")) {
        Section sec(top.get("output"), "output", errors);
        sec.allow({"path", "format"});
        sec.string("path", s.output.path);
        sec.string("format", s.output.format);
    }

    physical_checks(s, errors);
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return s;
}

void validate(const Scenario& s) {
    std::vector<std::string> errors;
    physical_checks(s, errors);
    if (!errors.empty()) throw ConfigError(std::move(errors));
}

std::string serialize_scenario(const Scenario& s) {
    json field = {{"type", s.field.type}};
    if (s.field.type == "uniform") {
        field["E"] = vec_json(s.field.E);
        field["B"] = vec_json(s.field.B);
    } else if (s.field.type == "magnetic-quadrupole") {
        field["gradient"] = s.field.gradient;
        field["Bz"] = s.field.bz;
    } else if (s.field.type == "linear-E-gradient") {
        field["k"] = s.field.k;
    }
    field["nonphysical"] = s.field.nonphysical;

    const json j = {
        {"name", s.name},
        {"particle",
         {{"m0", s.particle.m0},
          {"e", s.particle.charge},
          {"g", s.particle.g},
          {"hbar", s.particle.hbar},
          {"c", s.particle.c},
          {"s", s.particle.spin_number}}},
        {"initial",
         {{"position", vec_json(s.initial.position)},
          {"beta", vec_json(s.initial.beta)},
          {"zeta", vec_json(s.initial.zeta)}}},
        {"field", field},
        {"integrator",
         {{"formulation", std::string(to_string(s.formulation))},
          {"method", std::string(to_string(s.integrator.method))},
          {"step", s.integrator.step},
          {"tolerance", s.integrator.tolerance},
          {"duration", s.integrator.duration},
          {"stride", s.integrator.stride},
          {"projection", s.integrator.projection},
          {"shirokov_iterations", s.integrator.shirokov_iterations}}},
        {"output", {{"path", s.output.path}, {"format", s.output.format}}},
    };
    return j.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read scenario " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

}  // namespace spindyn
