// Serial reference against the OpenMP paths: bulk derivative evaluation and
// a batch of independent runs. Usage: bench_batch [threads] [states] [runs]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>

#include <omp.h>

#include "spindyn/batch.hpp"

using namespace spindyn;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

Scenario job(int i) {
    Scenario s;
    s.name = "bench-" + std::to_string(i);
    s.particle.g = 2.002;
    s.particle.hbar = 1e-4;
    s.initial.beta = {0.2 + 0.7 * i / 64.0, 0.05, 0};
    s.initial.zeta = {0.6, 0.8, 0};
    s.field.B = {0, 0, 1};
    s.integrator.step = 2 * std::numbers::pi / 1024;
    s.integrator.duration = 2 * std::numbers::pi;
    s.integrator.stride = 64;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    const int states = argc > 2 ? std::atoi(argv[2]) : 200000;
    const int runs = argc > 3 ? std::atoi(argv[3]) : 32;

    ParticleParams p;
    p.g = 2.002;
    p.hbar = 1e-3;
    const SpinSystem sys(Formulation::frenkel_corben, p, FieldModel::quadrupole(0.8, 0.3));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<Phase> in;
    in.reserve(states);
    for (int i = 0; i < states; ++i) {
        const Vec3 r{u(rng), u(rng), u(rng)}, beta{u(rng), u(rng), u(rng)};
        in.push_back(sys.initial({0, r.x, r.y, r.z}, beta, {0, 0.6, 0.8}));
    }
    std::vector<Phase> out;
    const double ds = best_of(3, [&] { derivatives(sys, in, out, Execution::serial); });
    const double dp = best_of(3, [&] { derivatives(sys, in, out, Execution::parallel, threads); });

    std::vector<Scenario> jobs;
    for (int i = 0; i < runs; ++i) jobs.push_back(job(i));
    const double bs = best_of(1, [&] { run_batch(jobs, Execution::serial); });
    const double bp = best_of(1, [&] { run_batch(jobs, Execution::parallel, threads); });

    std::printf("threads %d (hardware %d)\n", threads, omp_get_num_procs());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
    std::printf("%-28s %12.4f %12.4f %8.2f\n", ("derivatives x" + std::to_string(states)).c_str(), ds, dp, ds / dp);
    std::printf("%-28s %12.4f %12.4f %8.2f\n", ("run_batch x" + std::to_string(runs)).c_str(), bs, bp, bs / bp);
}
