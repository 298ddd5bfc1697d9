#include "liplab/construction.hpp"

#include <algorithm>

namespace liplab {

namespace {

void push_point(std::vector<Breakpoint>& out, const Rational& x, const Rational& y) {
    if (!out.empty() && out.back().x == x) return;
    out.push_back({x, y});
}

// Abscissae a, every component endpoint of U strictly inside (a, b), b.
std::vector<Rational> grid_with_components(const OpenSet& u, const ClosedInterval& i) {
    std::vector<Rational> xs{i.lo()};
    const OpenSet inside = restrict(u, i);
    for (const auto& c : inside.components()) {
        if (c.lo > xs.back()) xs.push_back(c.lo);
        if (c.hi > xs.back()) xs.push_back(c.hi);
    }
    if (xs.back() < i.hi()) xs.push_back(i.hi());
    return xs;
}

}  // namespace

PiecewiseLinear phi(int n, const ClosedInterval& i) {
    return PiecewiseLinear({{i.lo(), 0}, {i.midpoint(), pow2(-n) * i.length() / 2}, {i.hi(), 0}});
}

Rational n_close_ratio(int n) {
    Rational two_4n = pow2(2 * n + 1);
    return two_4n / (two_4n + 1);
}

NCloseSequence generate_n_close(int n, const ClosedInterval& i, int truncation, const Rational& theta) {
    if (n < 1) throw ContractViolation("n-close order must be positive");
    if (truncation < 1) throw ContractViolation("n-close truncation must be >= 1");
    if (theta <= 0 || theta >= 1) throw ContractViolation("n-close anchor must lie inside the interval");
    const Rational lambda = n_close_ratio(n);
    const Rational c = i.lo() + theta * i.length();
    std::vector<Rational> left, right;
    Rational pw = 1;
    for (int j = 0; j <= truncation; ++j) {
        right.push_back(i.hi() - (i.hi() - c) * pw);
        if (j > 0) left.push_back(i.lo() + (c - i.lo()) * pw);
        pw *= lambda;
    }
    std::vector<Rational> points(left.rbegin(), left.rend());
    points.insert(points.end(), right.begin(), right.end());
    return NCloseSequence{i, n, -truncation, std::move(points)};
}

bool is_n_close(const std::vector<Rational>& points, int n, const ClosedInterval& i) {
    const Rational factor = pow2(-2 * n);
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (!i.contains_interior(points[k])) return false;
        if (k == 0) continue;
        const Rational& zj = points[k - 1];
        const Rational& zj1 = points[k];
        if (!(zj < zj1)) return false;
        if (!(zj1 - zj < factor * min_of(zj - i.lo(), i.hi() - zj1))) return false;
    }
    return true;
}

PiecewiseLinear zigzag(const NCloseSequence& z, const Rational& base) {
    const auto tent = phi(z.order, z.interval);
    std::vector<Breakpoint> out{{z.interval.lo(), base}};
    for (std::size_t k = 0; k < z.points.size(); ++k) {
        const bool odd = z.index_of(k) % 2 != 0;
        out.push_back({z.points[k], odd ? Rational(base + tent.eval(z.points[k])) : base});
    }
    out.push_back({z.interval.hi(), base});
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear flatten(const Rational& f_a, const Rational& f_b, const ClosedInterval& i, const OpenSet& u) {
    if (!is_trim_in(u, i))
        throw ContractViolation("flatten requires U trim in [" + to_string(i.lo()) + ", " + to_string(i.hi()) + "]");
    const Rational beta = i.length() - measure(restrict(u, i));
    const Rational rise = f_b - f_a;
    std::vector<Breakpoint> out;
    for (const auto& x : grid_with_components(u, i))
        out.push_back({x, f_a + complement_left_measure(u, i.lo(), x) / beta * rise});
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear envelope_h(const PiecewiseLinear& g, int n, const std::vector<ClosedInterval>& components,
                           const ClosedInterval& i) {
    PiecewiseLinear h = g;
    for (const auto& c : components) {
        if (c.lo() < i.lo() || c.hi() > i.hi()) throw ContractViolation("envelope component outside the interval");
        h = add(h, extend_by_zero(phi(n, c), g.domain()));
    }
    return h;
}

std::vector<AnnulusRegion> annulus_regions(int n, const ClosedInterval& i, int depth, bool with_tails) {
    if (depth < 1) throw ContractViolation("annulus depth must be >= 1");
    const Rational a = i.lo(), b = i.hi(), len = i.length();
    auto quota = [&](int j) -> Rational { return len * pow2(-(2 * n + j + 1)); };
    std::vector<AnnulusRegion> left, right;
    for (int j = 1; j <= depth; ++j) {
        left.push_back({j, true, ClosedInterval(a + len * pow2(-(j + 1)), a + len * pow2(-j)), quota(j)});
        right.push_back({j, false, ClosedInterval(b - len * pow2(-j), b - len * pow2(-(j + 1))), quota(j)});
    }
    std::vector<AnnulusRegion> out;
    const Rational tail_len = len * pow2(-(depth + 1));
    // the tail absorbs Σ_{j>depth} quota(j) = quota(depth)
    if (with_tails) out.push_back({0, true, ClosedInterval(a, a + tail_len), quota(depth)});
    out.insert(out.end(), left.rbegin(), left.rend());
    out.insert(out.end(), right.begin(), right.end());
    if (with_tails) out.push_back({0, false, ClosedInterval(b - tail_len, b), quota(depth)});
    return out;
}

OpenSet generate_n_small(int n, const ClosedInterval& i, const OpenSet& cover, int depth, TailPolicy tails) {
    const OpenSet e = restrict(cover, i);
    const auto regions = annulus_regions(n, i, depth, tails == TailPolicy::fill);
    std::vector<OpenInterval> parts = e.components();

    if (tails == TailPolicy::empty) {
        const Rational inner_lo = regions.front().region.lo(), inner_hi = regions.back().region.hi();
        for (const auto& c : e.components())
            if (c.lo < inner_lo || c.hi > inner_hi)
                throw BudgetViolation("cover reaches beyond the processed annuli", 0, c.lo < inner_lo);
    }

    for (const auto& r : regions) {
        const Rational used = measure(restrict(e, r.region));
        auto where = [&] {
            return std::string(r.left ? "left" : "right") + (r.index == 0 ? " tail" : " annulus " + std::to_string(r.index));
        };
        if (used > r.quota)
            throw BudgetViolation("cover measure " + to_string(used) + " exceeds quota " + to_string(r.quota) +
                                      " in " + where(),
                                  r.index, r.left);
        const Rational pad = r.quota - used;
        if (pad == 0) continue;

        // largest gap of the region not touched by the cover; first one wins ties
        Rational cursor = r.region.lo();
        Rational best_lo = 0, best_len = -1;
        auto consider = [&](const Rational& lo, const Rational& hi) {
            if (hi - lo > best_len) {
                best_len = hi - lo;
                best_lo = lo;
            }
        };
        for (const auto& c : e.components()) {
            if (c.hi <= r.region.lo() || c.lo >= r.region.hi()) continue;
            if (c.lo > cursor) consider(cursor, c.lo);
            cursor = max_of(cursor, c.hi);
        }
        if (cursor < r.region.hi()) consider(cursor, r.region.hi());
        if (!(pad < best_len))
            throw BudgetViolation("no room for padding of length " + to_string(pad) + " in " + where(), r.index, r.left);
        const Rational lo = best_lo + (best_len - pad) / 2;
        parts.push_back({lo, lo + pad});
    }
    return OpenSet::from_unsorted(std::move(parts));
}

PiecewiseLinear monotone_h(int n, const OpenSet& u, const ClosedInterval& i) {
    const Rational slope = pow2(n);
    std::vector<Breakpoint> out;
    for (const auto& x : grid_with_components(u, i)) out.push_back({x, slope * left_measure(u, i.lo(), x)});
    return PiecewiseLinear(std::move(out));
}

Rational ramp_coefficient(const Rational& m, const ClosedInterval& i, const OpenSet& v, int n, RampCoefficient mode) {
    const Rational alpha = i.length() - measure(restrict(v, i));
    const Rational shift = mode == RampCoefficient::corrected ? pow2(-n) : pow2(-n + 1);
    return (m - shift) * i.length() / alpha + pow2(-n);
}

PiecewiseLinear ramp(const Rational& h_start, const Rational& m, const ClosedInterval& i, const OpenSet& v, int n,
                     RampCoefficient mode) {
    if (!is_trim_in(v, i))
        throw ContractViolation("ramp requires V trim in [" + to_string(i.lo()) + ", " + to_string(i.hi()) + "]");
    if (!(m > pow2(-n))) throw ContractViolation("ramp requires slope m > 2^-n");
    const Rational steep = ramp_coefficient(m, i, v, n, mode);
    const Rational gentle = pow2(-n);
    std::vector<Breakpoint> out;
    for (const auto& x : grid_with_components(v, i))
        push_point(out, x,
                   h_start + steep * complement_left_measure(v, i.lo(), x) + gentle * left_measure(v, i.lo(), x));
    return PiecewiseLinear(std::move(out));
}

}  // namespace liplab
