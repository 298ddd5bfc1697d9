#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "liplab/presets.hpp"
#include "liplab/run.hpp"

namespace fs = std::filesystem;
using namespace liplab;

namespace {

enum Exit { kPass = 0, kChecksFailed = 1, kConfigError = 2, kRuntimeError = 3 };

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    return Json::parse(in);
}

void print_summary(const std::vector<CheckReport>& reports) {
    const auto failing = failing_ids(reports);
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass;
    std::cout << passed << "/" << reports.size() << " clause reports pass\n";
    if (failing.empty()) return;
    std::cout << "failing:";
    for (const auto& id : failing) std::cout << ' ' << id;
    std::cout << '\n';
    for (const auto& r : reports) {
        if (r.pass) continue;
        for (const auto& w : r.witnesses)
            std::cout << "  " << r.check_id << " n=" << r.stage << ": " << w.location << " (" << to_string(w.lhs) << " vs "
                      << to_string(w.rhs) << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-depth constructions of functions with prescribed Lipschitz behaviour"};
    app.require_subcommand(1);

    RunConfig flags;
    std::string config_path, threshold;

    auto* build = app.add_subcommand("build", "build a construction, run every check, write trace/report/samples");
    build->add_option("--config", config_path, "JSON config; flags given on the command line override it");
    auto* o_pipeline = build->add_option("--pipeline", flags.pipeline, "trim or monotone");
    auto* o_preset = build->add_option("--preset", flags.preset, "preset target, e.g. fat_cantor:1/4,4 (see `presets`)");
    auto* o_levels = build->add_option("--levels", flags.levels_file, "JSON level file instead of a preset");
    auto* o_depth = build->add_option("--depth", flags.depth, "number of stages N");
    auto* o_trunc = build->add_option("--truncation", flags.truncation, "minimum truncation J of each n-close sequence");
    auto* o_ann = build->add_option("--annulus-depth", flags.annulus_depth, "processed annuli per side of an n-small set");
    auto* o_samples = build->add_option("--samples", flags.samples, "equispaced rows in samples.csv (breakpoints are added)");
    auto* o_deep = build->add_option("--deep-points", flags.deep_points, "points sampled from the finest target level");
    auto* o_out = build->add_option("--out-dir", flags.out_dir, "directory for trace.json, report.json, samples.csv");
    auto* o_literal = build->add_flag("--paper-literal-ramp", flags.paper_literal_ramp,
                                      "use the uncorrected ramp coefficient (expected to fail the endpoint check)");
    auto* o_threshold =
        build->add_option("--measure-zero-threshold", threshold, "largest finest-level measure accepted as measure zero");

    std::string trace_path, report_out;
    auto* verify = app.add_subcommand("verify", "re-run every check on a serialized trace");
    verify->add_option("--trace", trace_path, "trace.json to check")->required();
    verify->add_option("--out", report_out, "write the report here");

    std::string sample_out;
    std::size_t sample_count = 257;
    auto* sample = app.add_subcommand("sample", "write CSV samples of the final function of a trace");
    sample->add_option("--trace", trace_path, "trace.json to sample")->required();
    sample->add_option("--samples", sample_count, "equispaced rows (breakpoints are added)");
    sample->add_option("--out", sample_out, "CSV path; stdout when omitted");

    auto* presets = app.add_subcommand("presets", "list the preset targets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            RunConfig config;
            if (!config_path.empty()) {
                try {
                    config = apply_config_json(read_json(config_path), config);
                } catch (const Json::exception& e) {
                    throw ConfigError(std::string("config: ") + e.what());
                }
            }
            if (o_pipeline->count()) config.pipeline = flags.pipeline;
            if (o_preset->count()) {
                config.preset = flags.preset;
                if (!o_levels->count()) config.levels_file.clear();
            }
            if (o_levels->count()) {
                config.levels_file = flags.levels_file;
                if (!o_preset->count()) config.preset.clear();
            }
            if (o_depth->count()) config.depth = flags.depth;
            if (o_trunc->count()) config.truncation = flags.truncation;
            if (o_ann->count()) config.annulus_depth = flags.annulus_depth;
            if (o_samples->count()) config.samples = flags.samples;
            if (o_deep->count()) config.deep_points = flags.deep_points;
            if (o_out->count()) config.out_dir = flags.out_dir;
            if (o_literal->count()) config.paper_literal_ramp = true;
            if (o_threshold->count()) {
                try {
                    config.measure_zero_threshold = parse_rational(threshold);
                } catch (const ContractViolation& e) {
                    throw ConfigError(e.what());
                }
            }

            resolve_target(config);
            const RunOutput out = run_pipeline(config);
            const fs::path dir(config.out_dir);
            fs::create_directories(dir);
            write_file(dir / "trace.json", dump(out.trace));
            write_file(dir / "report.json", dump(out.report));
            write_file(dir / "samples.csv", out.samples_csv);
            print_summary(reports_from_json(out.report));
            std::cout << "wrote " << (dir / "trace.json").string() << ", report.json, samples.csv\n";
            return out.pass ? kPass : kChecksFailed;
        }
        if (*verify) {
            const Json trace = read_json(trace_path);
            const auto reports = verify_trace(trace);
            if (!report_out.empty()) write_file(report_out, dump(to_json(reports, trace_pipeline(trace))));
            print_summary(reports);
            return all_pass(reports) ? kPass : kChecksFailed;
        }
        if (*sample) {
            const auto f = final_function(read_json(trace_path));
            if (sample_out.empty()) {
                write_samples_csv(std::cout, f, sample_count);
            } else {
                std::ofstream out(sample_out, std::ios::binary);
                if (!out) throw Error("cannot write " + sample_out);
                write_samples_csv(out, f, sample_count);
            }
            return kPass;
        }
        if (*presets) {
            for (const auto& p : preset_catalog())
                std::cout << p.name << (p.params.empty() ? "" : ":" + p.params) << "\n    " << p.description << '\n';
            return kPass;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kPass;
}
