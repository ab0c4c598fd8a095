#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "spindyn/batch.hpp"

using namespace spindyn;

namespace {

Scenario uniform_scenario(double beta, Formulation f = Formulation::frenkel_corben) {
    Scenario s;
    s.particle.g = 2.002;
    s.particle.hbar = 1e-6;
    s.initial.beta = {beta, 0, 0};
    s.initial.zeta = {1, 0, 0};
    s.field.B = {0, 0, 1};
    s.formulation = f;
    s.integrator.step = 2 * std::numbers::pi / 512;
    s.integrator.duration = 2 * std::numbers::pi;
    s.integrator.stride = 16;
    return s;
}

bool identical(const Trajectory& a, const Trajectory& b) {
    if (a.samples.size() != b.samples.size()) return false;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const auto &x = a.samples[i].phase, &y = b.samples[i].phase;
        if (!(x.r == y.r && x.kinetic == y.kinetic && x.spin == y.spin && x.mass == y.mass && x.tau == y.tau))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parallel derivatives match the serial reference bit for bit") {
    ParticleParams p;
    p.g = 2.002;
    const SpinSystem sys(Formulation::frenkel_corben, p, FieldModel::quadrupole(0.8, 0.3));
    oracle::Gen gen(71);
    std::vector<Phase> in;
    for (int i = 0; i < 1000; ++i) in.push_back(sys.initial(oracle::random_state(gen, 1.0, 0.9)));
    std::vector<Phase> serial, parallel;
    derivatives(sys, in, serial, Execution::serial);
    for (int threads : {0, 1, 2, 4}) {
        derivatives(sys, in, parallel, Execution::parallel, threads);
        REQUIRE(parallel.size() == serial.size());
        bool same = true;
        for (std::size_t i = 0; i < in.size(); ++i)
            same = same && parallel[i].r == serial[i].r && parallel[i].kinetic == serial[i].kinetic &&
                   parallel[i].spin == serial[i].spin && parallel[i].mass == serial[i].mass;
        CHECK(same);
    }
}

TEST_CASE("batch runs merge by index") {
    std::vector<Scenario> jobs;
    for (int i = 0; i < 6; ++i) jobs.push_back(uniform_scenario(0.1 + 0.12 * i));
    jobs[2].formulation = Formulation::bmt_zeta;
    jobs[2].field.type = "magnetic-quadrupole";  // regime violation inside the batch
    jobs[4].integrator.shirokov_iterations = 0;  // config violation
    const auto serial = run_batch(jobs, Execution::serial);
    for (int threads : {1, 3}) {
        const auto parallel = run_batch(jobs, Execution::parallel, threads);
        REQUIRE(parallel.size() == jobs.size());
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            CAPTURE(i);
            CHECK(parallel[i].error == serial[i].error);
            CHECK(identical(parallel[i].trajectory, serial[i].trajectory));
        }
    }
    CHECK(serial[2].error == ErrorKind::config);
    CHECK(serial[4].error == ErrorKind::config);
    CHECK(serial[0].ok());
    CHECK(serial[5].trajectory.samples.front().state.v[1] > serial[0].trajectory.samples.front().state.v[1]);
}

TEST_CASE("numeric failure is reported per job") {
    Scenario s = uniform_scenario(0.5);
    s.particle.hbar = 1e-2;
    s.field.B = {0, 0, 1e4};  // spin mass goes negative
    s.initial.zeta = {0, 0, 1};
    const RunOutcome r = run_scenario(s);
    CHECK(r.error == ErrorKind::numeric);
    CHECK_FALSE(r.message.empty());
}

TEST_CASE("formulation comparison") {
    const std::vector<Formulation> all(std::begin(kAllFormulations), std::end(kAllFormulations));
    const Comparison cmp = compare_formulations(uniform_scenario(std::sqrt(3.0) / 2), all, Execution::parallel);
    CHECK(cmp.pairs.size() == 6);
    for (const auto& p : cmp.pairs) {
        CAPTURE(to_string(p.a));
        CAPTURE(to_string(p.b));
        CHECK_FALSE(p.excluded);
        CHECK(p.deviation.zeta < 1e-8);
    }
    const Comparison serial = compare_formulations(uniform_scenario(std::sqrt(3.0) / 2), all, Execution::serial);
    for (std::size_t i = 0; i < cmp.pairs.size(); ++i) CHECK(cmp.pairs[i].deviation.zeta == serial.pairs[i].deviation.zeta);

    CHECK(compare_formulations(uniform_scenario(0.5), {Formulation::frenkel_corben}, Execution::serial).pairs.empty());
}

TEST_CASE("gradient field excludes the homogeneous-only pairs") {
    Scenario s = uniform_scenario(0.01);
    s.field.type = "magnetic-quadrupole";
    s.field.gradient = 0.5;
    s.initial.position = {0.1, 0.2, 0};
    s.initial.zeta = {0, 0, 1};
    s.particle.hbar = 1e-3;
    s.integrator.duration = 1.0;
    const Comparison cmp = compare_formulations(
        s, {Formulation::frenkel_corben, Formulation::shirokov_momentum, Formulation::bmt_zeta}, Execution::parallel);
    REQUIRE(cmp.pairs.size() == 3);
    CHECK_FALSE(cmp.pairs[0].excluded);
    CHECK(cmp.pairs[1].reason == "regime-excluded");
    CHECK(cmp.pairs[2].reason == "regime-excluded");
    CHECK(cmp.runs[2].message == "regime-excluded");
    CHECK(cmp.pairs[0].deviation.zeta < 1e-6);
}
