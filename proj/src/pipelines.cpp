#include "liplab/pipelines.hpp"

#include <algorithm>

namespace liplab {

namespace {

const ClosedInterval kUnit(0, 1);
constexpr int kAnchorAttempts = 11;
constexpr int kMaxTruncation = 20000;

std::vector<Rational> points_inside(const std::vector<Rational>& pts, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (const auto& p : pts)
        if (lo < p && p < hi) out.push_back(p);
    return out;
}

// Anchor offsets 0, +1/67, -1/67, +2/67, ... keep the geometric scheme n-close.
Rational anchor(int attempt) {
    const long step = (attempt + 1) / 2;
    const long sign = attempt % 2 == 1 ? 1 : -1;
    return make_rational(1, 2) + make_rational(sign * step, 67);
}

// Smallest J >= J0 whose outermost points enclose every deep point.
int covering_truncation(int n, const ClosedInterval& i, int j0, const Rational& theta, const std::vector<Rational>& pts) {
    if (pts.empty()) return j0;
    const Rational lambda = n_close_ratio(n);
    const Rational c = i.lo() + theta * i.length();
    const Rational need_left = (pts.front() - i.lo()) / (c - i.lo());
    const Rational need_right = (i.hi() - pts.back()) / (i.hi() - c);
    const Rational need = min_of(need_left, need_right);
    Rational pw = power(lambda, static_cast<unsigned>(j0));
    int j = j0;
    while (!(pw < need)) {
        if (++j > kMaxTruncation)
            throw Error("truncation too coarse: deep points sit too close to the ends of [" + to_string(i.lo()) + ", " +
                        to_string(i.hi()) + "]");
        pw *= lambda;
    }
    return j;
}

// An n-close sequence on I whose hull contains the deep points and which
// avoids every one of them.
NCloseSequence choose_sequence(int n, const ClosedInterval& i, int truncation, const std::vector<Rational>& pts) {
    for (int attempt = 0; attempt < kAnchorAttempts; ++attempt) {
        const Rational theta = anchor(attempt);
        const int j = covering_truncation(n, i, truncation, theta, pts);
        auto z = generate_n_close(n, i, j, theta);
        const bool collides = std::any_of(pts.begin(), pts.end(), [&](const Rational& p) {
            return std::binary_search(z.points.begin(), z.points.end(), p);
        });
        if (!collides && is_n_close(z.points, n, i)) return z;
    }
    throw Error("could not place an n-close sequence avoiding the deep points on [" + to_string(i.lo()) + ", " +
                to_string(i.hi()) + "]");
}

// Next-stage open set: inside each host interval, the components of V that
// carry deep points, pulled in so their closure stays clear of the host ends.
OpenSet select_inside(const std::vector<ClosedInterval>& hosts, const OpenSet& v, const std::vector<Rational>& deep) {
    std::vector<OpenInterval> out;
    std::size_t covered = 0;
    for (const auto& host : hosts) {
        const auto pts = points_inside(deep, host.lo(), host.hi());
        if (pts.empty()) continue;
        const OpenSet local = restrict(v, host);
        for (const auto& c : local.components()) {
            const auto mine = points_inside(pts, c.lo, c.hi);
            if (mine.empty()) continue;
            covered += mine.size();
            const Rational w = dyadic_floor(min_of(mine.front() - host.lo(), host.hi() - mine.back()) / 2);
            out.push_back({max_of(c.lo, mine.front() - w), min_of(c.hi, mine.back() + w)});
        }
    }
    if (covered != deep.size()) throw Error("deep points escaped the next-stage open set");
    return OpenSet::from_unsorted(std::move(out));
}

OpenSet deep_cover(int n, const ClosedInterval& i, int annulus_depth, const std::vector<Rational>& deep) {
    const auto pts = points_inside(deep, i.lo(), i.hi());
    if (pts.empty()) return {};
    Rational bound = i.length() * pow2(-(2 * n + annulus_depth + 1)) / (4 * static_cast<long>(pts.size()));
    bound = min_of(bound, (pts.front() - i.lo()) / 4);
    bound = min_of(bound, (i.hi() - pts.back()) / 4);
    for (std::size_t k = 1; k < pts.size(); ++k) bound = min_of(bound, (pts[k] - pts[k - 1]) / 4);
    const Rational rho = dyadic_floor(bound);
    std::vector<OpenInterval> parts;
    for (const auto& p : pts) parts.push_back({p - rho, p + rho});
    return OpenSet(std::move(parts));
}

std::vector<ClosedInterval> closures(const OpenSet& s) {
    std::vector<ClosedInterval> out;
    for (const auto& c : s.components()) out.push_back(c.closure());
    return out;
}

}  // namespace

void validate_target(const TargetGDelta& t, const Rational& measure_zero_threshold) {
    if (t.levels.empty()) throw ContractViolation("target '" + t.name + "' has no levels");
    if (!(t.levels.front() == OpenSet::single(0, 1))) throw ContractViolation("target level V_1 must be (0,1)");
    for (std::size_t k = 1; k < t.levels.size(); ++k)
        if (!t.levels[k].is_subset_of(t.levels[k - 1]))
            throw ContractViolation("target levels not nested at V_" + std::to_string(k + 1));
    if (t.kind == TargetKind::trim) {
        if (!is_trim_set_probe(t.finest(), trim_probe_grid(t)))
            throw ContractViolation("target '" + t.name + "' is not trim on the dyadic probe grid");
    } else if (measure(t.finest()) > measure_zero_threshold) {
        throw ContractViolation("target '" + t.name + "' finest level has measure " + to_string(measure(t.finest())) +
                                " above the measure-zero threshold " + to_string(measure_zero_threshold));
    }
}

std::vector<ClosedInterval> trim_probe_grid(const TargetGDelta& t) {
    constexpr int kMaxLevel = 12;
    Rational longest = 0;
    for (const auto& c : t.finest().components()) longest = max_of(longest, c.length());
    int level = 0;
    while (level < kMaxLevel && pow2(-(level + 1)) > longest) ++level;
    return dyadic_probes(level);
}

std::vector<Rational> sample_deep_points(const TargetGDelta& t, std::size_t count) {
    if (count < 1) throw ContractViolation("sample count must be >= 1");
    const auto& comps = t.finest().components();
    if (comps.empty()) throw ContractViolation("cannot sample deep points from an empty level");
    std::vector<Rational> out;
    if (count <= comps.size()) {
        for (std::size_t k = 0; k < count; ++k) out.push_back(comps[k * comps.size() / count].lo + comps[k * comps.size() / count].length() / 2);
    } else {
        for (int round = 0; out.size() < count; ++round) {
            const long slots = 1L << round;
            for (const auto& c : comps) {
                for (long s = 0; s < slots && out.size() < count; ++s) {
                    out.push_back(c.lo + c.length() * make_rational(2 * s + 1, 2 * slots));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TrimTrace build_trim(const TargetGDelta& target, const TrimConfig& config) {
    const int depth = config.depth;
    if (depth < 2) throw ContractViolation("depth must be >= 2");
    if (config.truncation < 1) throw ContractViolation("truncation must be >= 1");
    if (static_cast<int>(target.levels.size()) < depth)
        throw ContractViolation("target '" + target.name + "' has " + std::to_string(target.levels.size()) +
                                " levels, fewer than depth " + std::to_string(depth));

    TrimTrace trace{target, config, {}, {}, {}, {}, 0};
    if (!target.finest().empty()) trace.deep_points = sample_deep_points(target, config.deep_points);
    const auto& deep = trace.deep_points;

    OpenSet u = OpenSet::single(0, 1);
    PiecewiseLinear g = PiecewiseLinear::constant(kUnit, 0);
    bool have_separation = false;
    for (int n = 1; n <= depth; ++n) {
        std::vector<NCloseSequence> zs;
        std::vector<PiecewiseLinear> teeth;
        std::vector<ClosedInterval> family;
        PiecewiseLinear h = g;
        for (const auto& comp : u.components()) {
            const ClosedInterval i = comp.closure();
            auto z = choose_sequence(n, i, config.truncation, points_inside(deep, comp.lo, comp.hi));
            teeth.push_back(zigzag(z, g.eval(i.lo())));
            h = add(h, extend_by_zero(scale(phi(n, i), 2), kUnit));
            for (std::size_t k = 0; k + 1 < z.points.size(); ++k) family.emplace_back(z.points[k], z.points[k + 1]);
            for (const auto& zp : z.points)
                for (const auto& p : deep) {
                    Rational d = abs_of(zp - p);
                    if (!have_separation || d < trace.z_separation) {
                        trace.z_separation = d;
                        have_separation = true;
                    }
                }
            zs.push_back(std::move(z));
        }
        PiecewiseLinear f = splice(g, teeth);
        trace.stages.push_back(TrimStage{n, u, std::move(zs), family, f, g, h});

        if (n == depth) break;
        OpenSet next = select_inside(family, target.levels[n], deep);
        std::vector<PiecewiseLinear> flat;
        for (const auto& i : family)
            if (!restrict(next, i).empty()) flat.push_back(flatten(f.eval(i.lo()), f.eval(i.hi()), i, next));
        g = splice(f, flat);
        u = std::move(next);
    }

    const auto& f = trace.f();
    for (const auto& x : deep) {
        for (const auto& st : trace.stages) {
            for (const auto& i : st.family) {
                if (!i.contains_interior(x)) continue;
                const Rational r = i.length();
                trace.certificates.push_back(
                    {x, st.n, Certificate::Kind::big_lip_lower, r, pow2(st.n - 1), m_f(f, x, r)});
            }
            if (st.n < 2) continue;
            if (auto k = st.u.component_containing(x)) {
                const auto& c = st.u.components()[*k];
                const Rational s = min_of(x - c.lo, c.hi - x);
                trace.certificates.push_back({x, st.n, Certificate::Kind::lip_upper, s, pow2(2 - st.n), m_f(f, x, s)});
            }
        }
    }
    const auto& first = trace.stages.front();
    trace.boundary.push_back({0, Side::plus, sandwich_certificate(first.g, first.h, f, 0)});
    trace.boundary.push_back({1, Side::minus, sandwich_certificate(first.g, first.h, f, 1)});
    return trace;
}

MonotoneTrace build_monotone(const TargetGDelta& target, const MonotoneConfig& config) {
    const int depth = config.depth;
    if (depth < 2) throw ContractViolation("depth must be >= 2");
    if (config.annulus_depth < 1) throw ContractViolation("annulus depth must be >= 1");
    if (target.kind != TargetKind::measure_zero)
        throw ContractViolation("monotone pipeline needs a measure-zero target; '" + target.name + "' is not");
    if (static_cast<int>(target.levels.size()) < depth)
        throw ContractViolation("target '" + target.name + "' has " + std::to_string(target.levels.size()) +
                                " levels, fewer than depth " + std::to_string(depth));

    const auto mode = config.paper_literal_ramp ? RampCoefficient::paper_literal : RampCoefficient::corrected;
    MonotoneTrace trace{target, config, {}, {}, {}};
    if (!target.finest().empty()) trace.deep_points = sample_deep_points(target, config.deep_points);
    const auto& deep = trace.deep_points;

    OpenSet v = OpenSet::single(0, 1);
    PiecewiseLinear f = PiecewiseLinear::line(kUnit, 0, make_rational(1, 2));
    for (int n = 1; n <= depth; ++n) {
        std::vector<OpenInterval> u_parts;
        std::vector<PiecewiseLinear> lifts;
        for (const auto& comp : v.components()) {
            const ClosedInterval i = comp.closure();
            const OpenSet local = generate_n_small(n, i, deep_cover(n, i, config.annulus_depth, deep), config.annulus_depth);
            u_parts.insert(u_parts.end(), local.components().begin(), local.components().end());
            lifts.push_back(add_constant(monotone_h(n, local, i), f.eval(i.lo())));
        }
        OpenSet u(std::move(u_parts));
        PiecewiseLinear g = splice(f, lifts);
        trace.stages.push_back(MonotoneStage{n, v, u, f, g, {}});
        if (n == depth) break;

        OpenSet next = select_inside(closures(u), target.levels[n], deep);
        auto& stage = trace.stages.back();
        std::vector<PiecewiseLinear> pieces;
        for (const auto& comp : u.components()) {
            const ClosedInterval j = comp.closure();
            const OpenSet local = restrict(next, j);
            const Rational m = (g.eval(j.hi()) - g.eval(j.lo())) / j.length();
            auto piece = ramp(g.eval(j.lo()), m, j, local, n + 1, mode);
            stage.ramps.push_back(RampRecord{j, g.eval(j.lo()), m, n + 1, local, piece});
            pieces.push_back(std::move(piece));
        }
        f = splice(g, pieces, config.paper_literal_ramp ? SpliceMode::background_wins : SpliceMode::strict);
        v = std::move(next);
    }

    const auto& final_f = trace.f();
    for (const auto& x : deep) {
        for (const auto& st : trace.stages) {
            if (st.n < depth) {
                if (auto k = st.u.component_containing(x)) {
                    const auto& c = st.u.components()[*k];
                    const Rational r = max_of(x - c.lo, c.hi - x);
                    trace.certificates.push_back(
                        {x, st.n, Certificate::Kind::big_lip_lower, r, pow2(st.n - 1), m_f(final_f, x, r)});
                }
            }
            if (auto k = st.v.component_containing(x)) {
                const auto& c = st.v.components()[*k];
                const Rational r = min_of(x - c.lo, c.hi - x);
                trace.certificates.push_back(
                    {x, st.n, Certificate::Kind::lip_upper, r, pow2(2 - st.n), m_f(final_f, x, r)});
            }
        }
    }
    return trace;
}

}  // namespace liplab
