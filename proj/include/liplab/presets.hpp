#ifndef LIPLAB_PRESETS_HPP
#define LIPLAB_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liplab/pipelines.hpp"

namespace liplab {

struct PresetInfo {
    std::string name;
    std::string params;
    std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

/// V_k = (p - 4^-k, p + 4^-k) for k >= 2.
TargetGDelta point_target(const Rational& p, int levels);
/// Union of point targets; points must be separated enough to stay disjoint.
TargetGDelta points_target(const std::vector<Rational>& ps, int levels);
/// Middle-thirds Cantor set on [1/4, 3/4]; V_k is the 3^-k/4 neighbourhood of
/// the depth-k cover for k = 2..depth.
TargetGDelta cantor_target(int depth);
/// Positive-measure Cantor set on [1/8, 7/8]: step k removes a centred gap of
/// length (3/4) ratio^k from every interval; V_k is the (3/16) ratio^k
/// neighbourhood of the step k-1 cover for k = 2..depth.
TargetGDelta fat_cantor_target(const Rational& ratio, int depth);
TargetGDelta empty_target(int levels);

/// Parses "name" or "name:p1,p2,...". Presets without a depth parameter get
/// `default_levels` levels.
TargetGDelta preset(std::string_view spec, int default_levels);

/// Affine image of open sets on [lo, hi] in [0, 1].
OpenSet normalize_to_unit(const OpenSet& s, const Rational& lo, const Rational& hi);

}  // namespace liplab

#endif  // LIPLAB_PRESETS_HPP
