#include "liplab/pwl.hpp"

#include <algorithm>

namespace liplab {

namespace {

// Appends unless x repeats the last abscissa.
void push_point(std::vector<Breakpoint>& out, const Rational& x, const Rational& y) {
    if (!out.empty() && out.back().x == x) return;
    out.push_back({x, y});
}

std::vector<Rational> window_candidates(const PiecewiseLinear& f, const Rational& lo, const Rational& hi) {
    std::vector<Rational> ys{lo, hi};
    const auto& pts = f.breakpoints();
    auto it = std::upper_bound(pts.begin(), pts.end(), lo,
                               [](const Rational& v, const Breakpoint& p) { return v < p.x; });
    for (; it != pts.end() && it->x < hi; ++it) ys.push_back(it->x);
    return ys;
}

Rational max_deviation(const PiecewiseLinear& f, const Rational& x, const Rational& lo, const Rational& hi) {
    Rational fx = f.eval(x);
    Rational best = 0;
    for (const auto& y : window_candidates(f, lo, hi)) best = max_of(best, abs_of(fx - f.eval(y)));
    return best;
}

void require_same_domain(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    if (!(f.domain() == g.domain())) throw ContractViolation("piecewise-linear functions have different domains");
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw ContractViolation("piecewise-linear function needs at least two breakpoints");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1].x < points_[i].x))
            throw ContractViolation("breakpoints must be strictly increasing in x (at x = " +
                                    to_string(points_[i].x) + ")");
}

PiecewiseLinear PiecewiseLinear::constant(const ClosedInterval& domain, const Rational& value) {
    return PiecewiseLinear({{domain.lo(), value}, {domain.hi(), value}});
}

PiecewiseLinear PiecewiseLinear::line(const ClosedInterval& domain, const Rational& start, const Rational& slope) {
    return PiecewiseLinear({{domain.lo(), start}, {domain.hi(), start + slope * domain.length()}});
}

Rational PiecewiseLinear::eval(const Rational& x) const {
    if (x < points_.front().x || x > points_.back().x)
        throw ContractViolation("evaluation point " + to_string(x) + " outside the domain");
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Breakpoint& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const auto& right = *it;
    const auto& left = *(it - 1);
    return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

Rational PiecewiseLinear::slope(std::size_t k) const {
    return (points_[k + 1].y - points_[k].y) / (points_[k + 1].x - points_[k].x);
}

std::vector<Rational> RadiusSchedule::radii() const {
    if (count < 1 || r_max <= 0 || ratio <= 0 || ratio >= 1) throw ContractViolation("invalid radius schedule");
    std::vector<Rational> out;
    Rational r = r_max;
    for (int k = 0; k < count; ++k) {
        out.push_back(r);
        r *= ratio;
    }
    return out;
}

RadiusSchedule RadiusSchedule::for_depth(int depth) { return {make_rational(1, 4), make_rational(1, 2), depth + 4}; }

Rational m_f(const PiecewiseLinear& f, const Rational& x, const Rational& r) {
    if (r <= 0) throw ContractViolation("m_f requires r > 0");
    const auto dom = f.domain();
    return max_deviation(f, x, max_of(x - r, dom.lo()), min_of(x + r, dom.hi())) / r;
}

Rational m_f_one_sided(const PiecewiseLinear& f, const Rational& x, const Rational& r, Side side) {
    if (r <= 0) throw ContractViolation("m_f requires r > 0");
    const auto dom = f.domain();
    if (!dom.contains(x)) throw ContractViolation("m_f point outside the domain");
    if (side == Side::plus) return max_deviation(f, x, x, min_of(x + r, dom.hi())) / r;
    return max_deviation(f, x, max_of(x - r, dom.lo()), x) / r;
}

Rational big_lip_estimate(const PiecewiseLinear& f, const Rational& x, const RadiusSchedule& sched) {
    Rational best = 0;
    for (const auto& r : sched.radii()) best = max_of(best, m_f(f, x, r));
    return best;
}

Rational small_lip_estimate(const PiecewiseLinear& f, const Rational& x, const RadiusSchedule& sched) {
    auto radii = sched.radii();
    Rational best = m_f(f, x, radii.front());
    for (const auto& r : radii) best = min_of(best, m_f(f, x, r));
    return best;
}

Rational one_sided_lip_estimate(const PiecewiseLinear& f, const Rational& x, Side side,
                                const RadiusSchedule& sched) {
    Rational best = 0;
    for (const auto& r : sched.radii()) best = max_of(best, m_f_one_sided(f, x, r, side));
    return best;
}

std::vector<Rational> union_grid(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    require_same_domain(f, g);
    std::vector<Rational> xs;
    xs.reserve(f.size() + g.size());
    const auto& a = f.breakpoints();
    const auto& b = g.breakpoints();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const Rational* next;
        if (j == b.size() || (i < a.size() && a[i].x <= b[j].x)) {
            next = &a[i].x;
            if (j < b.size() && b[j].x == a[i].x) ++j;
            ++i;
        } else {
            next = &b[j].x;
            ++j;
        }
        xs.push_back(*next);
    }
    return xs;
}

Rational uniform_distance(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    Rational best = 0;
    for (const auto& x : union_grid(f, g)) best = max_of(best, abs_of(f.eval(x) - g.eval(x)));
    return best;
}

Rational lipschitz_constant(const PiecewiseLinear& f) {
    Rational best = 0;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) best = max_of(best, abs_of(f.slope(k)));
    return best;
}

bool is_monotone_nondecreasing(const PiecewiseLinear& f) {
    const auto& p = f.breakpoints();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i].y < p[i - 1].y) return false;
    return true;
}

std::optional<Violation> first_exceedance(const PiecewiseLinear& lower, const PiecewiseLinear& upper) {
    for (const auto& x : union_grid(lower, upper)) {
        Rational l = lower.eval(x), u = upper.eval(x);
        if (l > u) return Violation{x, l, u};
    }
    return std::nullopt;
}

Rational sandwich_certificate(const PiecewiseLinear& g, const PiecewiseLinear& h, const PiecewiseLinear& f,
                              const Rational& x) {
    if (auto v = first_exceedance(g, f))
        throw ContractViolation("sandwich violated: g > f at x = " + to_string(v->x));
    if (auto v = first_exceedance(f, h))
        throw ContractViolation("sandwich violated: f > h at x = " + to_string(v->x));
    if (g.eval(x) != h.eval(x)) throw ContractViolation("sandwich requires g(x) = h(x) at x = " + to_string(x));
    return max_of(lipschitz_constant(g), lipschitz_constant(h));
}

PiecewiseLinear add(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Breakpoint> out;
    for (const auto& x : union_grid(f, g)) out.push_back({x, f.eval(x) + g.eval(x)});
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear scale(const PiecewiseLinear& f, const Rational& c) {
    std::vector<Breakpoint> out = f.breakpoints();
    for (auto& p : out) p.y *= c;
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear add_constant(const PiecewiseLinear& f, const Rational& c) {
    std::vector<Breakpoint> out = f.breakpoints();
    for (auto& p : out) p.y += c;
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear restrict_to(const PiecewiseLinear& f, const ClosedInterval& sub) {
    const auto dom = f.domain();
    if (sub.lo() < dom.lo() || sub.hi() > dom.hi()) throw ContractViolation("restriction outside the domain");
    std::vector<Breakpoint> out{{sub.lo(), f.eval(sub.lo())}};
    const auto& pts = f.breakpoints();
    auto it = std::upper_bound(pts.begin(), pts.end(), sub.lo(),
                               [](const Rational& v, const Breakpoint& p) { return v < p.x; });
    for (; it != pts.end() && it->x < sub.hi(); ++it) out.push_back(*it);
    out.push_back({sub.hi(), f.eval(sub.hi())});
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear extend_by_zero(const PiecewiseLinear& f, const ClosedInterval& domain) {
    const auto sub = f.domain();
    if (sub.lo() < domain.lo() || sub.hi() > domain.hi()) throw ContractViolation("extension domain too small");
    if (f.breakpoints().front().y != 0 || f.breakpoints().back().y != 0)
        throw ContractViolation("extend_by_zero needs a function vanishing at its ends");
    std::vector<Breakpoint> out;
    push_point(out, domain.lo(), 0);
    for (const auto& p : f.breakpoints()) push_point(out, p.x, p.y);
    push_point(out, domain.hi(), 0);
    return PiecewiseLinear(std::move(out));
}

PiecewiseLinear splice(const PiecewiseLinear& background, const std::vector<PiecewiseLinear>& pieces,
                       SpliceMode mode) {
    std::vector<const PiecewiseLinear*> order;
    for (const auto& p : pieces) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const PiecewiseLinear* a, const PiecewiseLinear* b) { return a->domain().lo() < b->domain().lo(); });

    const auto dom = background.domain();
    const auto& bg = background.breakpoints();
    std::vector<Breakpoint> out;
    std::size_t bi = 0;
    Rational cursor = dom.lo();
    auto endpoint_value = [&](const PiecewiseLinear& piece, const Rational& x) {
        Rational b = background.eval(x);
        Rational p = piece.eval(x);
        if (mode == SpliceMode::strict && b != p)
            throw ContractViolation("spliced piece disagrees with background at x = " + to_string(x) + " (" +
                                    to_string(p) + " vs " + to_string(b) + ")");
        return b;
    };
    for (const auto* piece : order) {
        const auto pd = piece->domain();
        if (pd.lo() < cursor || pd.hi() > dom.hi()) throw ContractViolation("spliced pieces overlap or leave the domain");
        while (bi < bg.size() && bg[bi].x < pd.lo()) {
            push_point(out, bg[bi].x, bg[bi].y);
            ++bi;
        }
        push_point(out, pd.lo(), endpoint_value(*piece, pd.lo()));
        for (const auto& p : piece->breakpoints())
            if (pd.lo() < p.x && p.x < pd.hi()) push_point(out, p.x, p.y);
        push_point(out, pd.hi(), endpoint_value(*piece, pd.hi()));
        while (bi < bg.size() && bg[bi].x <= pd.hi()) ++bi;
        cursor = pd.hi();
    }
    for (; bi < bg.size(); ++bi) push_point(out, bg[bi].x, bg[bi].y);
    return PiecewiseLinear(std::move(out));
}

}  // namespace liplab
