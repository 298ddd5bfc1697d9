#ifndef LIPLAB_PIPELINES_HPP
#define LIPLAB_PIPELINES_HPP

#include <string>
#include <vector>

#include "liplab/construction.hpp"

namespace liplab {

enum class TargetKind { trim, measure_zero };

/// Finite-depth description V_1 ⊇ V_2 ⊇ ... ⊇ V_L of a G_δ target inside (0,1).
/// V_1 is always (0,1).
struct TargetGDelta {
    std::string name;
    std::vector<OpenSet> levels;
    TargetKind kind = TargetKind::trim;

    const OpenSet& finest() const { return levels.back(); }
};

/// Nesting, V_1 = (0,1), and the kind-specific finite-scale check
/// (dyadic trim probes, or |V_L| <= threshold). Throws ContractViolation.
void validate_target(const TargetGDelta& t, const Rational& measure_zero_threshold);

/// Probe grid used for trim targets: dyadic intervals down to the finest
/// scale still longer than every component of the finest level (capped).
std::vector<ClosedInterval> trim_probe_grid(const TargetGDelta& t);

/// Midpoints of the finest-level components, then points at odd multiples
/// of len/4, len/8, ... inside each component until `count` points exist.
/// Returned in increasing order. Throws on an empty finest level.
std::vector<Rational> sample_deep_points(const TargetGDelta& t, std::size_t count);

struct Certificate {
    enum class Kind { big_lip_lower, lip_upper };
    Rational x;
    int stage;
    Kind kind;
    Rational radius;
    Rational bound;
    Rational measured;
};

/// Finite bound on one-sided Lip at an end of [0,1] from g_1 <= f <= h_1.
struct BoundaryCertificate {
    Rational x;
    Side side;
    Rational bound;
};

struct TrimStage {
    int n;
    OpenSet u;
    std::vector<NCloseSequence> z;  ///< one per component of u, same order
    std::vector<ClosedInterval> family;
    PiecewiseLinear f;
    PiecewiseLinear g;
    PiecewiseLinear h;
};

struct TrimConfig {
    int depth = 4;
    int truncation = 8;
    std::size_t deep_points = 12;
};

struct TrimTrace {
    TargetGDelta target;
    TrimConfig config;
    std::vector<Rational> deep_points;
    std::vector<TrimStage> stages;
    std::vector<Certificate> certificates;
    std::vector<BoundaryCertificate> boundary;
    Rational z_separation;  ///< min distance from any Z point to a deep point

    const PiecewiseLinear& f() const { return stages.back().f; }
};

/// One call of the ramp on a U_n component, producing f_{n+1} there.
struct RampRecord {
    ClosedInterval interval;
    Rational h_start;
    Rational slope;
    int order;
    OpenSet v;
    PiecewiseLinear f;
};

struct MonotoneStage {
    int n;
    OpenSet v;
    OpenSet u;
    PiecewiseLinear f;
    PiecewiseLinear g;
    std::vector<RampRecord> ramps;  ///< builds the next stage's f; empty on the last stage
};

struct MonotoneConfig {
    int depth = 4;
    int annulus_depth = 6;
    std::size_t deep_points = 12;
    bool paper_literal_ramp = false;
};

struct MonotoneTrace {
    TargetGDelta target;
    MonotoneConfig config;
    std::vector<Rational> deep_points;
    std::vector<MonotoneStage> stages;
    std::vector<Certificate> certificates;

    const PiecewiseLinear& f() const { return stages.back().f; }
};

/// Builds f_1..f_N with lip f = 0 / Lip f = ∞ certificates on the deep points.
TrimTrace build_trim(const TargetGDelta& target, const TrimConfig& config);

/// Builds the monotone f_1..f_N for a measure-zero target.
MonotoneTrace build_monotone(const TargetGDelta& target, const MonotoneConfig& config);

}  // namespace liplab

#endif  // LIPLAB_PIPELINES_HPP
