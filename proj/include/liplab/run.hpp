#ifndef LIPLAB_RUN_HPP
#define LIPLAB_RUN_HPP

#include <string>
#include <vector>

#include "liplab/serialize.hpp"

namespace liplab {

/// Bad configuration, detected before any construction starts.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string pipeline = "trim";
    std::string preset;       ///< "name" or "name:p1,p2,..."
    std::string levels_file;  ///< alternative to preset
    int depth = 4;
    int truncation = 8;
    int annulus_depth = 6;
    std::size_t samples = 257;
    std::size_t deep_points = 12;
    std::string out_dir = ".";
    bool paper_literal_ramp = false;
    Rational measure_zero_threshold = make_rational(1, 3);
};

/// Overlays the fields present in a JSON config document onto `base`.
/// Unknown keys are rejected.
RunConfig apply_config_json(const Json& j, RunConfig base);

/// Field-level checks plus target resolution, validation and the
/// pipeline/kind match. Throws ConfigError.
TargetGDelta resolve_target(const RunConfig& config);

struct RunOutput {
    Json trace;
    Json report;
    std::string samples_csv;
    bool pass = false;
    std::vector<std::string> failing;
};

RunOutput run_pipeline(const RunConfig& config);

/// Re-runs the checks on a serialized trace.
std::vector<CheckReport> verify_trace(const Json& trace);

/// Final f of a serialized trace of either pipeline.
PiecewiseLinear final_function(const Json& trace);

}  // namespace liplab

#endif  // LIPLAB_RUN_HPP
