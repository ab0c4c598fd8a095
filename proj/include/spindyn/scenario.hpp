#pragma once

// Scenario files: one JSON document with the sections
//
//   particle    {m0, e, g, hbar, c, s}
//   initial     {position, beta, zeta}
//   field       {type, ...parameters, nonphysical}
//   integrator  {formulation, method, step, tolerance, duration, stride, projection, shirokov_iterations}
//   output      {path, format}
//
// Every key is optional and unknown keys are rejected. docs/scenario-format.md
// lists the defaults.

#include <filesystem>
#include <string>
#include <string_view>

#include "spindyn/fields.hpp"
#include "spindyn/integrator.hpp"
#include "spindyn/particle.hpp"

namespace spindyn {

struct InitialConditions {
    Vec3 position;
    Vec3 beta;
    SpinVector zeta{0, 0, 1};

    friend bool operator==(const InitialConditions&, const InitialConditions&) = default;
};

struct FieldConfig {
    std::string type = "uniform";
    Vec3 E;
    Vec3 B;
    double gradient = 0.0;  // magnetic-quadrupole
    double bz = 0.0;        // magnetic-quadrupole
    double k = 0.0;         // linear-E-gradient
    bool nonphysical = false;

    /// Throws ConfigError for an unknown type.
    FieldModel model() const;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

struct OutputConfig {
    std::string path;  // empty: "<name>.csv" in the output directory
    std::string format = "csv";

    friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct Scenario {
    std::string name = "scenario";
    ParticleParams particle;
    InitialConditions initial;
    FieldConfig field;
    Formulation formulation = Formulation::frenkel_corben;
    StepConfig integrator;
    OutputConfig output;

    friend bool operator==(const Scenario&, const Scenario&) = default;

    SpinSystem system() const;
    Phase initial_phase(const SpinSystem& sys) const;
};

/// Parse and validate. Throws ConfigError carrying every violation, each
/// prefixed by its key path (e.g. "initial.beta: ...").
Scenario parse_scenario(std::string_view text);

/// Physical and cross-field checks on an already-built scenario.
void validate(const Scenario& s);

/// Pretty-printed JSON with every key written out; parse_scenario inverts it exactly.
std::string serialize_scenario(const Scenario& s);

/// Throws IoError if the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace spindyn
