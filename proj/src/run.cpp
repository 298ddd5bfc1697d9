#include "liplab/run.hpp"

#include <fstream>
#include <sstream>

#include "liplab/presets.hpp"

namespace liplab {

namespace {

int as_int(const Json& v, const char* key) {
    if (!v.is_number_integer()) throw ConfigError(std::string("config field '") + key + "' must be an integer");
    return v.get<int>();
}

std::size_t as_count(const Json& v, const char* key) {
    const int n = as_int(v, key);
    if (n < 0) throw ConfigError(std::string("config field '") + key + "' must be non-negative");
    return static_cast<std::size_t>(n);
}

std::string as_text(const Json& v, const char* key) {
    if (!v.is_string()) throw ConfigError(std::string("config field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

RunConfig apply_config_json(const Json& j, RunConfig c) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "pipeline") c.pipeline = as_text(v, "pipeline");
        else if (key == "preset") c.preset = as_text(v, "preset");
        else if (key == "levels") c.levels_file = as_text(v, "levels");
        else if (key == "depth") c.depth = as_int(v, "depth");
        else if (key == "truncation") c.truncation = as_int(v, "truncation");
        else if (key == "annulus_depth") c.annulus_depth = as_int(v, "annulus_depth");
        else if (key == "samples") c.samples = as_count(v, "samples");
        else if (key == "deep_points") c.deep_points = as_count(v, "deep_points");
        else if (key == "out_dir") c.out_dir = as_text(v, "out_dir");
        else if (key == "paper_literal_ramp") {
            if (!v.is_boolean()) throw ConfigError("config field 'paper_literal_ramp' must be a boolean");
            c.paper_literal_ramp = v.get<bool>();
        } else if (key == "measure_zero_threshold") {
            try {
                c.measure_zero_threshold = parse_rational(as_text(v, "measure_zero_threshold"));
            } catch (const ContractViolation& e) {
                throw ConfigError(e.what());
            }
        } else {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    return c;
}

TargetGDelta resolve_target(const RunConfig& c) {
    if (c.pipeline != "trim" && c.pipeline != "monotone")
        throw ConfigError("pipeline must be 'trim' or 'monotone', got '" + c.pipeline + "'");
    if (c.depth < 2) throw ConfigError("depth must be >= 2");
    if (c.truncation < 1) throw ConfigError("truncation must be >= 1");
    if (c.annulus_depth < 1) throw ConfigError("annulus depth must be >= 1");
    if (c.samples < 2) throw ConfigError("samples must be >= 2");
    if (c.deep_points < 1) throw ConfigError("deep points must be >= 1");
    if (c.preset.empty() == c.levels_file.empty()) throw ConfigError("give exactly one of a preset or a levels file");
    if (c.paper_literal_ramp && c.pipeline != "monotone") throw ConfigError("--paper-literal-ramp applies to the monotone pipeline only");

    TargetGDelta t;
    try {
        if (!c.preset.empty()) {
            t = preset(c.preset, c.depth);
        } else {
            std::ifstream in(c.levels_file);
            if (!in) throw ConfigError("cannot read levels file '" + c.levels_file + "'");
            t = target_from_level_file(Json::parse(in));
        }
        validate_target(t, c.measure_zero_threshold);
    } catch (const ContractViolation& e) {
        throw ConfigError(e.what());
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("levels file: ") + e.what());
    }
    if (c.pipeline == "monotone" && t.kind != TargetKind::measure_zero)
        throw ConfigError("target '" + t.name + "' is not measure zero; the monotone pipeline needs a measure-zero target");
    if (static_cast<int>(t.levels.size()) < c.depth)
        throw ConfigError("target '" + t.name + "' has " + std::to_string(t.levels.size()) + " levels, fewer than depth " +
                          std::to_string(c.depth));
    return t;
}

RunOutput run_pipeline(const RunConfig& c) {
    const TargetGDelta target = resolve_target(c);
    RunOutput out;
    std::vector<CheckReport> reports;
    std::ostringstream csv;
    if (c.pipeline == "trim") {
        const auto trace = build_trim(target, TrimConfig{c.depth, c.truncation, c.deep_points});
        reports = check_all_trim(trace);
        out.trace = to_json(trace);
        write_samples_csv(csv, trace.f(), c.samples);
    } else {
        const auto trace =
            build_monotone(target, MonotoneConfig{c.depth, c.annulus_depth, c.deep_points, c.paper_literal_ramp});
        reports = check_all_monotone(trace);
        out.trace = to_json(trace);
        write_samples_csv(csv, trace.f(), c.samples);
    }
    out.report = to_json(reports, c.pipeline);
    out.samples_csv = csv.str();
    out.pass = all_pass(reports);
    out.failing = failing_ids(reports);
    return out;
}

std::vector<CheckReport> verify_trace(const Json& trace) {
    const auto pipeline = trace_pipeline(trace);
    if (pipeline == "trim") return check_all_trim(trim_trace_from_json(trace));
    if (pipeline == "monotone") return check_all_monotone(monotone_trace_from_json(trace));
    throw Error("unknown pipeline '" + pipeline + "' in trace");
}

PiecewiseLinear final_function(const Json& trace) {
    const auto pipeline = trace_pipeline(trace);
    if (pipeline == "trim") return trim_trace_from_json(trace).f();
    if (pipeline == "monotone") return monotone_trace_from_json(trace).f();
    throw Error("unknown pipeline '" + pipeline + "' in trace");
}

}  // namespace liplab
