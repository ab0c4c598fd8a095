// spindyn: scenario-driven spin dynamics runs.
//
//   spindyn run      --scenario a.json [--scenario b.json ...] [--out dir] [--formulation tag] [--svg]
//   spindyn compare  --scenario a.json --formulation f1,f2,...
//   spindyn analyze  --csv run.csv --analysis precession-fit|thomas-check|invariant-summary [--scenario a.json]
//   spindyn validate --scenario a.json ...
//
// Exit codes: 0 ok, 2 configuration, 3 numeric failure, 4 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spindyn/analysis.hpp"
#include "spindyn/batch.hpp"
#include "spindyn/errors.hpp"
#include "spindyn/output.hpp"
#include "spindyn/report.hpp"
#include "spindyn/scenario.hpp"

namespace fs = std::filesystem;
using namespace spindyn;

namespace {

constexpr int kOk = 0, kConfig = 2, kNumeric = 3, kIo = 4;

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::none: return kOk;
        case ErrorKind::config: return kConfig;
        case ErrorKind::numeric: return kNumeric;
        case ErrorKind::io: return kIo;
    }
    return kConfig;
}

struct Options {
    std::vector<std::string> scenarios;
    std::string out;
    std::vector<std::string> formulations;
    int threads = 0;
    bool quiet = false;
    bool svg = false;
    std::string csv;
    std::string analysis;
};

fs::path output_dir(const Options& o) {
    fs::path dir = ".";
    if (!o.out.empty()) dir = o.out;
    else if (const char* env = std::getenv("SPINDYN_OUT_DIR"); env && *env) dir = env;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

fs::path csv_path(const Scenario& s, const fs::path& dir) {
    const fs::path p = s.output.path.empty() ? fs::path(s.name + ".csv") : fs::path(s.output.path);
    return p.is_absolute() ? p : dir / p;
}

fs::path sibling(const fs::path& csv, const std::string& suffix) {
    fs::path p = csv;
    p.replace_extension();
    return p.string() + suffix;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

Formulation formulation_tag(const std::string& tag) {
    if (auto f = parse_formulation(tag)) return *f;
    throw ConfigError("--formulation: unknown formulation '" + tag + "'");
}

Execution execution(int threads) { return threads == 1 ? Execution::serial : Execution::parallel; }

int cmd_validate(const Options& o) {
    int code = kOk;
    for (const auto& path : o.scenarios) {
        try {
            const Scenario s = load_scenario(path);
            if (!o.quiet) std::cout << path << ": ok (" << s.name << ")\n";
        } catch (const ConfigError& e) {
            std::cerr << path << ": invalid\n";
            for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
            code = std::max(code, kConfig);
        }
    }
    return code;
}

int cmd_run(const Options& o) {
    std::vector<Scenario> scenarios;
    for (const auto& path : o.scenarios) {
        Scenario s = load_scenario(path);
        if (!o.formulations.empty()) {
            s.formulation = formulation_tag(o.formulations.front());
            validate(s);
        }
        scenarios.push_back(std::move(s));
    }
    const fs::path dir = output_dir(o);
    const std::vector<RunOutcome> outcomes = run_batch(scenarios, execution(o.threads), o.threads);

    int code = kOk;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const Scenario& s = scenarios[i];
        const RunOutcome& r = outcomes[i];
        const fs::path csv = csv_path(s, dir);
        if (csv.has_parent_path()) fs::create_directories(csv.parent_path());
        if (r.ok()) {
            write_csv(csv, r.trajectory);
            if (o.svg) {
                std::ofstream svg(sibling(csv, ".svg"));
                if (!svg) throw IoError("cannot write " + sibling(csv, ".svg").string());
                write_svg(svg, r.trajectory, precession_axis(s));
            }
        }
        write_text(sibling(csv, ".report.json"), run_report(s, r, csv.string()));
        if (!r.ok()) {
            std::cerr << s.name << ": " << r.message << "\n";
            if (code == kOk) code = exit_code(r.error);
        } else if (!o.quiet) {
            std::cout << s.name << ": " << r.trajectory.samples.size() << " samples, " << r.trajectory.diagnostics.steps
                      << " steps -> " << csv.string() << "\n";
        }
    }
    return code;
}

int cmd_compare(const Options& o) {
    if (o.scenarios.size() != 1) throw ConfigError("--scenario: compare takes exactly one scenario");
    const Scenario s = load_scenario(o.scenarios.front());
    std::vector<Formulation> forms;
    for (const auto& tag : o.formulations) forms.push_back(formulation_tag(tag));
    if (forms.empty()) forms.push_back(s.formulation);

    const Comparison cmp = compare_formulations(s, forms, execution(o.threads), o.threads);
    const fs::path dir = output_dir(o);
    write_text(dir / (s.name + ".compare.json"), comparison_report(s, cmp));
    if (!o.quiet) std::cout << comparison_table(cmp);

    for (const auto& r : cmp.runs)
        if (!r.ok() && r.message != "regime-excluded") {
            std::cerr << r.message << "\n";
            return exit_code(r.error);
        }
    return kOk;
}

int cmd_analyze(const Options& o) {
    const CsvTable table = read_csv(fs::path(o.csv));
    std::optional<Scenario> scenario;
    if (!o.scenarios.empty()) scenario = load_scenario(o.scenarios.front());
    nlohmann::ordered_json j;
    j["csv"] = o.csv;
    j["analysis"] = o.analysis;

    if (o.analysis == "precession-fit") {
        const Vec3 axis = scenario ? precession_axis(*scenario) : Vec3{0, 0, 1};
        if (table.rows < 2) throw IoError("precession-fit needs at least two samples");
        const PrecessionFit fit = precession_fit(sampled(table), axis);
        auto fj = [](const LinearFit& f) {
            return nlohmann::ordered_json{{"omega", f.slope}, {"residual", f.residual}, {"samples", f.samples}};
        };
        j["axis"] = {axis.x, axis.y, axis.z};
        j["anomalous_precession"] = fj(fit.relative);
        j["velocity_rotation"] = fj(fit.velocity);
        j["spin_rotation"] = fj(fit.spin);
    } else if (o.analysis == "thomas-check") {
        if (!scenario) throw ConfigError("--scenario: thomas-check needs the scenario for the field and particle");
        const ThomasCheck t = thomas_check(sampled(table), *scenario);
        j["max_discrepancy"] = t.max_discrepancy;
        j["max_thomas"] = t.max_thomas;
        j["samples"] = t.samples;
    } else {
        nlohmann::ordered_json cols = nlohmann::ordered_json::object();
        for (const auto& c : invariant_summary(table)) cols[c.name] = {{"max", c.max}, {"last", c.last}};
        j["columns"] = cols;
        j["samples"] = table.rows;
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin dynamics of a relativistic charged particle with anomalous moment"};
    app.require_subcommand(1);
    Options o;

    auto* run = app.add_subcommand("run", "integrate scenarios and write CSV, report and optional SVG");
    run->add_option("--scenario", o.scenarios, "scenario file (repeatable)")->required();
    run->add_option("--out", o.out, "output directory (default: $SPINDYN_OUT_DIR or .)");
    run->add_option("--formulation", o.formulations, "override the scenario formulation")->expected(1);
    run->add_option("--threads", o.threads, "worker threads (1 = serial)");
    run->add_flag("--quiet", o.quiet);
    run->add_flag("--svg", o.svg, "also write an SVG plot");

    auto* cmp = app.add_subcommand("compare", "run one scenario under several formulations");
    cmp->add_option("--scenario", o.scenarios)->required()->expected(1);
    cmp->add_option("--formulation", o.formulations, "formulation tags")->delimiter(',');
    cmp->add_option("--out", o.out);
    cmp->add_option("--threads", o.threads);
    cmp->add_flag("--quiet", o.quiet);

    auto* ana = app.add_subcommand("analyze", "post-process a CSV produced by run");
    ana->add_option("--csv", o.csv)->required();
    ana->add_option("--analysis", o.analysis)
        ->required()
        ->check(CLI::IsMember({"precession-fit", "thomas-check", "invariant-summary"}));
    ana->add_option("--scenario", o.scenarios, "scenario that produced the CSV")->expected(1);
    ana->add_flag("--quiet", o.quiet);

    auto* val = app.add_subcommand("validate", "parse and check scenarios only");
    val->add_option("--scenario", o.scenarios)->required();
    val->add_flag("--quiet", o.quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*run) return cmd_run(o);
        if (*cmp) return cmd_compare(o);
        if (*ana) return cmd_analyze(o);
        return cmd_validate(o);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error\n";
        for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
        return kConfig;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    }
}
