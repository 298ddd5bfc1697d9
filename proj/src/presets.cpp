#include "liplab/presets.hpp"

#include <algorithm>

namespace liplab {

namespace {

constexpr int kMaxPresetDepth = 16;

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_depth(const std::string& s) {
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || r < 2 || r > kMaxPresetDepth)
        throw ContractViolation("preset depth must be an integer in [2, " + std::to_string(kMaxPresetDepth) + "], got '" +
                                s + "'");
    return static_cast<int>(r.get_num().get_si());
}

void check_levels(int levels) {
    if (levels < 2 || levels > kMaxPresetDepth)
        throw ContractViolation("preset level count must lie in [2, " + std::to_string(kMaxPresetDepth) + "]");
}

OpenSet neighbourhood(const std::vector<ClosedInterval>& cover, const Rational& radius) {
    std::vector<OpenInterval> out;
    for (const auto& c : cover) out.push_back({c.lo() - radius, c.hi() + radius});
    return OpenSet(std::move(out));
}

}  // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog{
        {"point", "p", "single point p in [1/16, 15/16]; V_k = (p - 4^-k, p + 4^-k); measure zero"},
        {"points", "p1,p2,...", "finite union of point targets; measure zero"},
        {"cantor", "depth", "middle-thirds Cantor set on [1/4, 3/4]; measure zero"},
        {"fat_cantor", "ratio,depth", "positive-measure Cantor set on [1/8, 7/8]; trim, not measure zero"},
        {"empty", "", "empty target; every level past V_1 is empty"},
    };
    return catalog;
}

TargetGDelta point_target(const Rational& p, int levels) { return points_target({p}, levels); }

TargetGDelta points_target(const std::vector<Rational>& ps, int levels) {
    check_levels(levels);
    if (ps.empty()) throw ContractViolation("points preset needs at least one point");
    std::vector<Rational> sorted = ps;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted)
        if (p < make_rational(1, 16) || p > make_rational(15, 16))
            throw ContractViolation("point " + to_string(p) + " outside [1/16, 15/16]");
    TargetGDelta t{"points", {OpenSet::single(0, 1)}, TargetKind::measure_zero};
    if (sorted.size() == 1) t.name = "point";
    for (int k = 2; k <= levels; ++k) {
        const Rational r = pow2(-2 * k);
        std::vector<OpenInterval> comps;
        for (const auto& p : sorted) comps.push_back({p - r, p + r});
        t.levels.emplace_back(std::move(comps));
    }
    return t;
}

TargetGDelta cantor_target(int depth) {
    check_levels(depth);
    TargetGDelta t{"cantor", {OpenSet::single(0, 1)}, TargetKind::measure_zero};
    std::vector<ClosedInterval> cover{ClosedInterval(make_rational(1, 4), make_rational(3, 4))};
    for (int k = 1; k <= depth; ++k) {
        std::vector<ClosedInterval> next;
        for (const auto& c : cover) {
            const Rational third = c.length() / 3;
            next.emplace_back(c.lo(), c.lo() + third);
            next.emplace_back(c.hi() - third, c.hi());
        }
        cover = std::move(next);
        if (k >= 2) t.levels.push_back(neighbourhood(cover, power(make_rational(1, 3), k) / 4));
    }
    return t;
}

TargetGDelta fat_cantor_target(const Rational& ratio, int depth) {
    check_levels(depth);
    if (ratio <= 0 || ratio >= make_rational(1, 2)) throw ContractViolation("fat_cantor ratio must lie in (0, 1/2)");
    TargetGDelta t{"fat_cantor", {OpenSet::single(0, 1)}, TargetKind::trim};
    const Rational base = make_rational(3, 4);
    std::vector<ClosedInterval> cover{ClosedInterval(make_rational(1, 8), make_rational(7, 8))};
    for (int k = 1; k < depth; ++k) {
        const Rational gap = base * power(ratio, static_cast<unsigned>(k));
        std::vector<ClosedInterval> next;
        for (const auto& c : cover) {
            if (!(gap < c.length())) throw ContractViolation("fat_cantor ratio too large for the requested depth");
            const Rational side = (c.length() - gap) / 2;
            next.emplace_back(c.lo(), c.lo() + side);
            next.emplace_back(c.hi() - side, c.hi());
        }
        cover = std::move(next);
        t.levels.push_back(neighbourhood(cover, base * power(ratio, static_cast<unsigned>(k + 1)) / 4));
    }
    return t;
}

TargetGDelta empty_target(int levels) {
    check_levels(levels);
    TargetGDelta t{"empty", {OpenSet::single(0, 1)}, TargetKind::measure_zero};
    for (int k = 2; k <= levels; ++k) t.levels.emplace_back();
    return t;
}

TargetGDelta preset(std::string_view spec, int default_levels) {
    const auto colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    std::vector<std::string> params;
    if (colon != std::string_view::npos) params = split(spec.substr(colon + 1), ',');
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw ContractViolation("preset '" + name + "' expects " + std::to_string(count) + " parameter(s)");
    };
    if (name == "point") {
        expect(1);
        return point_target(parse_rational(params[0]), default_levels);
    }
    if (name == "points") {
        if (params.empty()) throw ContractViolation("preset 'points' expects at least one point");
        std::vector<Rational> ps;
        for (const auto& p : params) ps.push_back(parse_rational(p));
        return points_target(ps, default_levels);
    }
    if (name == "cantor") {
        expect(1);
        return cantor_target(parse_depth(params[0]));
    }
    if (name == "fat_cantor") {
        expect(2);
        return fat_cantor_target(parse_rational(params[0]), parse_depth(params[1]));
    }
    if (name == "empty") {
        if (!params.empty()) expect(0);
        return empty_target(default_levels);
    }
    throw ContractViolation("unknown preset '" + name + "'");
}

OpenSet normalize_to_unit(const OpenSet& s, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw ContractViolation("normalization interval is degenerate");
    std::vector<OpenInterval> out;
    for (const auto& c : s.components()) out.push_back({(c.lo - lo) / (hi - lo), (c.hi - lo) / (hi - lo)});
    return OpenSet(std::move(out));
}

}  // namespace liplab
