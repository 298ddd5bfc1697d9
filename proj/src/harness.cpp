#include "liplab/harness.hpp"

#include <algorithm>
#include <map>

namespace liplab {

namespace {

std::string at(const Rational& x) { return "x=" + to_string(x); }

std::string on(const ClosedInterval& i) { return "[" + to_string(i.lo()) + ", " + to_string(i.hi()) + "]"; }

class Clause {
public:
    explicit Clause(CheckReport& r) : r_(r) {}

    void fail(std::string location, const Rational& lhs, const Rational& rhs) {
        r_.pass = false;
        ++r_.failures;
        if (r_.witnesses.size() < CheckReport::kMaxWitnesses) r_.witnesses.push_back({std::move(location), lhs, rhs});
    }
    void le(const Rational& lhs, const Rational& rhs, const std::string& location) {
        if (lhs > rhs) fail(location, lhs, rhs);
    }
    void lt(const Rational& lhs, const Rational& rhs, const std::string& location) {
        if (!(lhs < rhs)) fail(location, lhs, rhs);
    }
    void eq(const Rational& lhs, const Rational& rhs, const std::string& location) {
        if (lhs != rhs) fail(location, lhs, rhs);
    }
    // Membership failures carry the offending point on both sides.
    void member(bool ok, const Rational& x, const std::string& location) {
        if (!ok) fail(location, x, x);
    }
    // lower <= upper everywhere; both PWL so the union grid suffices.
    void le_fn(const PiecewiseLinear& lower, const PiecewiseLinear& upper, const std::string& label) {
        for (const auto& x : union_grid(lower, upper)) le(lower.eval(x), upper.eval(x), label + " " + at(x));
    }
    void nondecreasing(const PiecewiseLinear& f, const std::string& label) {
        const auto& p = f.breakpoints();
        for (std::size_t i = 1; i < p.size(); ++i) le(p[i - 1].y, p[i].y, label + " descends after " + at(p[i - 1].x));
    }

private:
    CheckReport& r_;
};

class Collector {
public:
    explicit Collector(const std::vector<std::string>& ids) : ids_(ids) {}

    Clause open(const std::string& id, int stage) {
        auto pos = std::find(ids_.begin(), ids_.end(), id);
        if (pos == ids_.end()) throw Error("unregistered check id " + id);
        auto key = std::make_pair(static_cast<int>(pos - ids_.begin()), stage);
        auto it = reports_.find(key);
        if (it == reports_.end()) it = reports_.emplace(key, CheckReport{id, stage, true, 0, {}}).first;
        return Clause(it->second);
    }

    std::vector<CheckReport> finish() {
        std::vector<CheckReport> out;
        for (auto& [key, r] : reports_) out.push_back(std::move(r));
        return out;
    }

private:
    const std::vector<std::string>& ids_;
    std::map<std::pair<int, int>, CheckReport> reports_;
};

// Evenly spaced subsample of at most `cap` elements.
template <typename T>
std::vector<T> thin(const std::vector<T>& xs, std::size_t cap) {
    if (xs.size() <= cap) return xs;
    std::vector<T> out;
    for (std::size_t k = 0; k < cap; ++k) out.push_back(xs[k * xs.size() / cap]);
    return out;
}

std::vector<Rational> breakpoints_in(const PiecewiseLinear& f, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (const auto& p : f.breakpoints())
        if (lo <= p.x && p.x <= hi) out.push_back(p.x);
    return out;
}

const ClosedInterval kUnit(0, 1);

void check_certificate(Clause& clause, const PiecewiseLinear& f, const Certificate& c) {
    const Rational measured = m_f(f, c.x, c.radius);
    const std::string loc = at(c.x) + " r=" + to_string(c.radius);
    clause.eq(c.measured, measured, loc + " recorded measurement");
    if (c.kind == Certificate::Kind::big_lip_lower)
        clause.le(c.bound, measured, loc);
    else
        clause.le(measured, c.bound, loc);
}

}  // namespace

const std::vector<std::string>& trim_check_ids() {
    static const std::vector<std::string> ids{
        "L2.2.sandwich",     "L2.8.endpoints",   "L2.8.constant_on_U",   "L2.8.fg_close",
        "L2.8.lipschitz",    "L2.9.F_steep",     "L2.9.G_endpoints",     "L2.9.H_le",
        "S3.Z_n_close",      "S3.U_nesting",     "S3.U_trim",            "S3.cauchy_fn_gn",
        "S3.cauchy_gn_fn1",  "S3.squeeze",       "S3.envelope_monotone", "S3.stage_agreement",
        "S3.big_lip_cert",   "S3.lip_cert",      "S3.boundary_lip",
    };
    return ids;
}

const std::vector<std::string>& monotone_check_ids() {
    static const std::vector<std::string> ids{
        "L4.3.f_est",       "L4.3.Mf",           "L4.4.increasing",   "L4.4.endpoints",
        "L4.4.slope_on_V",  "L4.4.lipschitz",    "L4.5.lipschitz",    "L4.5.increasing",
        "L4.5.gn_squeeze",  "L4.5.fn_squeeze",   "S4.nesting",        "S4.V_trim",
        "S4.n_small",       "S4.stage_squeeze",  "S4.norm",           "S4.endpoints",
        "S4.big_lip_cert",  "S4.lip_cert",
    };
    return ids;
}

std::vector<CheckReport> check_all_trim(const TrimTrace& trace) {
    Collector out(trim_check_ids());
    const auto& stages = trace.stages;
    const int depth = static_cast<int>(stages.size());
    const auto& f = trace.f();
    const auto& deep = trace.deep_points;
    const auto sched = RadiusSchedule::for_depth(depth);

    for (int n = 1; n <= depth; ++n) {
        const auto& st = stages[n - 1];

        {
            auto c = out.open("S3.Z_n_close", n);
            c.eq(st.z.size(), st.u.size(), "one sequence per U_n component");
            for (std::size_t k = 0; k < std::min(st.z.size(), st.u.size()); ++k) {
                const auto& z = st.z[k];
                const auto& comp = st.u.components()[k];
                c.member(z.interval == comp.closure(), z.interval.lo(), "sequence interval differs from U component");
                const Rational factor = pow2(-2 * n);
                for (std::size_t i = 0; i < z.points.size(); ++i) {
                    c.member(z.interval.contains_interior(z.points[i]), z.points[i], "point outside its interval");
                    c.member(!std::binary_search(deep.begin(), deep.end(), z.points[i]), z.points[i],
                             "point coincides with a deep point");
                    if (i == 0) continue;
                    const Rational gap = z.points[i] - z.points[i - 1];
                    c.lt(0, gap, "points not increasing at " + at(z.points[i]));
                    c.lt(gap, factor * min_of(z.points[i - 1] - z.interval.lo(), z.interval.hi() - z.points[i]),
                         "gap after " + at(z.points[i - 1]));
                }
            }
        }
        {
            auto c = out.open("S3.U_nesting", n);
            for (const auto& x : deep) c.member(st.u.contains(x), x, "deep point outside U_n");
            const auto& v = n == 1 ? OpenSet::single(0, 1) : trace.target.levels.at(n - 1);
            c.member(st.u.is_subset_of(v), 0, "U_n not inside V_n");
        }
        {
            auto c = out.open("S3.cauchy_fn_gn", n);
            c.le(uniform_distance(st.f, st.g), pow2(-n), "||f_n - g_n||");
        }
        {
            auto c = out.open("S3.squeeze", n);
            c.le_fn(st.g, st.f, "g_n <= f_n");
            c.le_fn(st.f, st.h, "f_n <= h_n");
            c.le_fn(st.g, f, "g_n <= f_N");
            c.le_fn(f, st.h, "f_N <= h_n");
        }
        {
            auto c = out.open("L2.9.F_steep", n);
            const Rational steep = pow2(n);
            for (const auto& z : st.z)
                for (std::size_t i = 0; i + 1 < z.points.size(); ++i) {
                    const Rational rise = abs_of(st.f.eval(z.points[i + 1]) - st.f.eval(z.points[i]));
                    c.le(steep * (z.points[i + 1] - z.points[i]), rise, "pair at " + at(z.points[i]));
                }
        }
        {
            auto c = out.open("S3.big_lip_cert", n);
            std::size_t count = 0;
            for (const auto& cert : trace.certificates) {
                if (cert.stage != n || cert.kind != Certificate::Kind::big_lip_lower) continue;
                ++count;
                check_certificate(c, f, cert);
                auto host = std::find_if(st.family.begin(), st.family.end(),
                                         [&](const ClosedInterval& i) { return i.contains_interior(cert.x); });
                if (host == st.family.end())
                    c.member(false, cert.x, "no family interval contains the point");
                else
                    c.eq(cert.radius, host->length(), "radius vs family interval at " + at(cert.x));
            }
            for (const auto& x : deep)
                c.member(std::any_of(trace.certificates.begin(), trace.certificates.end(),
                                     [&](const Certificate& q) {
                                         return q.stage == n && q.x == x && q.kind == Certificate::Kind::big_lip_lower;
                                     }),
                         x, "deep point without a certificate");
            (void)count;
        }

        if (n >= 2) {
            const auto& prev = stages[n - 2];
            {
                auto c = out.open("S3.cauchy_gn_fn1", n);
                c.le(uniform_distance(st.g, prev.f), pow2(-(n - 1)), "||g_n - f_{n-1}||");
            }
            {
                auto c = out.open("S3.U_trim", n);
                for (const auto& i : prev.family) {
                    c.member(!st.u.contains(i.lo()), i.lo(), "family endpoint inside U_n");
                    c.member(!st.u.contains(i.hi()), i.hi(), "family endpoint inside U_n");
                    c.lt(measure(restrict(st.u, i)), i.length(), "measure in " + on(i));
                }
            }
            auto endpoints = out.open("L2.8.endpoints", n);
            auto constant = out.open("L2.8.constant_on_U", n);
            auto close = out.open("L2.8.fg_close", n);
            auto lip = out.open("L2.8.lipschitz", n);
            for (const auto& i : prev.family) {
                const Rational fa = prev.f.eval(i.lo()), fb = prev.f.eval(i.hi());
                endpoints.eq(st.g.eval(i.lo()), fa, "g(a) on " + on(i));
                endpoints.eq(st.g.eval(i.hi()), fb, "g(b) on " + on(i));
                const auto gi = restrict_to(st.g, i);
                close.le(uniform_distance(gi, restrict_to(prev.f, i)), abs_of(fb - fa), "on " + on(i));
                const Rational beta = i.length() - measure(restrict(st.u, i));
                if (beta > 0) lip.le(lipschitz_constant(gi), abs_of(fb - fa) / beta, "on " + on(i));
                else lip.fail("no complement left in " + on(i), 0, 0);
                for (const auto& comp : st.u.components_within(i.lo(), i.hi())) {
                    const Rational base = st.g.eval(comp.lo);
                    for (const auto& x : breakpoints_in(st.g, comp.lo, comp.hi))
                        constant.eq(st.g.eval(x), base, "component (" + to_string(comp.lo) + ", " + to_string(comp.hi) + ") " + at(x));
                    constant.eq(st.g.eval(comp.hi), base, "component end " + at(comp.hi));
                }
            }
            {
                auto c = out.open("S3.stage_agreement", n);
                std::vector<Rational> pins;
                for (const auto& z : prev.z) pins.insert(pins.end(), z.points.begin(), z.points.end());
                for (const auto& comp : prev.u.components()) {
                    pins.push_back(comp.lo);
                    pins.push_back(comp.hi);
                }
                for (int k = n; k <= depth; ++k) {
                    const auto& fk = stages[k - 1].f;
                    for (const auto& x : pins) c.eq(fk.eval(x), st.f.eval(x), "f_" + std::to_string(k) + " vs f_n " + at(x));
                    for (const auto& x : union_grid(fk, st.f))
                        if (!prev.u.contains(x)) c.eq(fk.eval(x), st.f.eval(x), "f_" + std::to_string(k) + " vs f_n " + at(x));
                }
            }
            {
                auto c = out.open("L2.2.sandwich", n);
                Rational bound = 0;
                bool ok = true;
                try {
                    bound = sandwich_certificate(st.g, st.h, f, 0);
                } catch (const ContractViolation&) {
                    ok = false;
                }
                if (!ok) {
                    auto v = first_exceedance(st.g, f);
                    if (!v) v = first_exceedance(f, st.h);
                    c.fail("sandwich g_n <= f_N <= h_n broken at " + (v ? at(v->x) : std::string("x=0")),
                           v ? v->lhs : Rational(0), v ? v->rhs : Rational(0));
                } else {
                    std::vector<Rational> sites;
                    for (const auto& comp : st.u.components()) {
                        sites.push_back(comp.lo);
                        sites.push_back(comp.hi);
                    }
                    std::vector<Rational> zpts;
                    for (const auto& z : prev.z) zpts.insert(zpts.end(), z.points.begin(), z.points.end());
                    for (const auto& x : thin(zpts, 48)) sites.push_back(x);
                    for (const auto& x : sites) {
                        c.eq(st.g.eval(x), st.h.eval(x), "g_n = h_n " + at(x));
                        for (const auto& r : sched.radii()) c.le(m_f(f, x, r), bound, at(x) + " r=" + to_string(r));
                    }
                }
            }
            {
                auto c = out.open("S3.lip_cert", n);
                for (const auto& cert : trace.certificates) {
                    if (cert.stage != n || cert.kind != Certificate::Kind::lip_upper) continue;
                    check_certificate(c, f, cert);
                    auto k = st.u.component_containing(cert.x);
                    if (!k) {
                        c.member(false, cert.x, "certificate point outside U_n");
                        continue;
                    }
                    const auto& comp = st.u.components()[*k];
                    c.eq(cert.radius, min_of(cert.x - comp.lo, comp.hi - cert.x), "radius s_n " + at(cert.x));
                }
                for (const auto& x : deep)
                    c.member(std::any_of(trace.certificates.begin(), trace.certificates.end(),
                                         [&](const Certificate& q) {
                                             return q.stage == n && q.x == x && q.kind == Certificate::Kind::lip_upper;
                                         }),
                             x, "deep point without a certificate");
            }
        }

        if (n < depth) {
            const auto& next = stages[n];
            {
                auto c = out.open("S3.envelope_monotone", n);
                c.le_fn(next.h, st.h, "h_{n+1} <= h_n");
                c.le_fn(st.g, next.g, "g_n <= g_{n+1}");
            }
            auto gend = out.open("L2.9.G_endpoints", n);
            auto hle = out.open("L2.9.H_le", n);
            for (const auto& comp : st.u.components()) {
                const ClosedInterval i = comp.closure();
                const Rational fa = st.f.eval(i.lo());
                gend.eq(next.g.eval(i.lo()), fa, "G(a) on " + on(i));
                gend.eq(next.g.eval(i.hi()), fa, "G(b) on " + on(i));
                std::vector<ClosedInterval> inner;
                for (const auto& w : next.u.components_within(i.lo(), i.hi())) inner.push_back(w.closure());
                const auto big_g = restrict_to(next.g, i);
                const auto h = envelope_h(big_g, n, inner, i);
                const auto cap = add_constant(scale(phi(n, i), 2), big_g.eval(i.lo()));
                hle.le_fn(h, cap, "H <= G(a) + 2 Phi on " + on(i));
            }
        }
    }

    {
        auto c = out.open("S3.boundary_lip", 1);
        const auto& first = stages.front();
        for (const auto& b : trace.boundary) {
            Rational recomputed = -1;
            try {
                recomputed = sandwich_certificate(first.g, first.h, f, b.x);
            } catch (const ContractViolation&) {
                c.fail("sandwich g_1 <= f <= h_1 broken near " + at(b.x), b.x, b.x);
                continue;
            }
            c.eq(b.bound, recomputed, "recorded bound " + at(b.x));
            c.le(b.bound, 2, "one-sided Lip bound " + at(b.x));
            for (const auto& r : sched.radii()) c.le(m_f_one_sided(f, b.x, r, b.side), b.bound, at(b.x) + " r=" + to_string(r));
        }
        c.member(trace.boundary.size() == 2, 0, "expected boundary certificates at 0 and 1");
    }
    return out.finish();
}

std::vector<CheckReport> check_all_monotone(const MonotoneTrace& trace) {
    Collector out(monotone_check_ids());
    const auto& stages = trace.stages;
    const int depth = static_cast<int>(stages.size());
    const int annuli = trace.config.annulus_depth;
    const auto& f = trace.f();
    const auto& deep = trace.deep_points;

    for (int n = 1; n <= depth; ++n) {
        const auto& st = stages[n - 1];
        const Rational step = pow2(-n);

        {
            auto c = out.open("S4.nesting", n);
            c.member(st.u.is_subset_of(st.v), 0, "U_n not inside V_n");
            c.member(st.v.is_subset_of(trace.target.levels.at(n - 1)), 0, "V_n not inside the target level");
            if (n < depth) c.member(stages[n].v.is_subset_of(st.u), 0, "V_{n+1} not inside U_n");
            for (const auto& x : deep) {
                c.member(st.v.contains(x), x, "deep point outside V_n");
                c.member(st.u.contains(x), x, "deep point outside U_n");
            }
        }
        {
            auto c = out.open("S4.n_small", n);
            for (const auto& comp : st.v.components()) {
                const ClosedInterval i = comp.closure();
                const auto local = restrict(st.u, i);
                Rational processed = 0, expected = 0;
                for (const auto& r : annulus_regions(n, i, annuli, true)) {
                    const Rational got = measure(restrict(local, r.region));
                    c.eq(got, r.quota, std::string(r.left ? "left" : "right") + (r.index == 0 ? " tail" : " annulus " + std::to_string(r.index)) + " of " + on(i));
                    if (r.index > 0) {
                        processed += got;
                        expected += r.quota;
                    }
                }
                c.eq(processed, expected, "processed annuli of " + on(i));
                c.eq(measure(local), pow2(-2 * n) * i.length(), "total measure on " + on(i));
            }
        }
        {
            auto c = out.open("L4.3.f_est", n);
            auto mf = out.open("L4.3.Mf", n);
            const Rational two_step = pow2(-n + 1);
            for (const auto& comp : st.v.components()) {
                const Rational lo = comp.lo, hi = comp.hi, mid = (lo + hi) / 2;
                auto grid = breakpoints_in(f, lo, hi);
                grid.push_back(lo);
                grid.push_back(mid);
                grid.push_back(hi);
                std::sort(grid.begin(), grid.end());
                grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
                const Rational base = f.eval(lo);
                for (const auto& x : grid) {
                    const Rational val = f.eval(x) - base;
                    c.le(max_of(0, two_step * (x - mid)), val, "lower " + at(x));
                    c.le(val, min_of(two_step * (x - lo), step * (hi - lo)), "upper " + at(x));
                }
                std::vector<Rational> sites = thin(breakpoints_in(f, lo, hi), 32);
                for (const auto& x : deep)
                    if (comp.contains(x)) sites.push_back(x);
                for (const auto& x : sites) {
                    if (!comp.contains(x)) continue;
                    mf.le(m_f(f, x, min_of(x - lo, hi - x)), pow2(2 - n), at(x));
                }
            }
        }
        {
            auto c = out.open("L4.5.increasing", n);
            c.nondecreasing(st.f, "f_n");
            c.nondecreasing(st.g, "g_n");
        }
        {
            auto c = out.open("L4.5.lipschitz", n);
            c.le(lipschitz_constant(st.g), max_of(pow2(n), lipschitz_constant(st.f)), "Lip g_n");
            if (n >= 2) {
                Rational bound = lipschitz_constant(stages[n - 2].g);
                for (const auto& r : stages[n - 2].ramps)
                    bound = max_of(bound, max_of(pow2(-r.order), ramp_coefficient(r.slope, r.interval, r.v, r.order)));
                c.le(lipschitz_constant(st.f), bound, "Lip f_n");
            }
        }
        {
            auto c = out.open("L4.5.gn_squeeze", n);
            for (const auto& comp : st.v.components()) {
                const Rational lo = st.f.eval(comp.lo), hi = st.f.eval(comp.hi);
                for (const auto& x : breakpoints_in(st.g, comp.lo, comp.hi)) {
                    c.le(lo, st.g.eval(x), "lower " + at(x));
                    c.le(st.g.eval(x), hi, "upper " + at(x));
                }
            }
        }
        {
            auto c = out.open("S4.stage_squeeze", n);
            for (const auto& comp : st.v.components()) {
                const Rational lo = st.f.eval(comp.lo);
                const Rational top = lo + comp.length() * step;
                c.eq(st.f.eval(comp.hi), top, "f_n(d) on (" + to_string(comp.lo) + ", " + to_string(comp.hi) + ")");
                for (int k = n; k <= depth; ++k) {
                    const auto& fk = stages[k - 1].f;
                    for (const auto& x : breakpoints_in(fk, comp.lo, comp.hi)) {
                        c.le(lo, fk.eval(x), "f_" + std::to_string(k) + " lower " + at(x));
                        c.le(fk.eval(x), top, "f_" + std::to_string(k) + " upper " + at(x));
                    }
                }
            }
        }
        {
            auto c = out.open("S4.norm", n);
            Rational widest = 0;
            for (const auto& comp : st.v.components()) widest = max_of(widest, comp.length());
            for (int j = n; j <= depth; ++j)
                for (int k = j + 1; k <= depth; ++k)
                    c.le(uniform_distance(stages[j - 1].f, stages[k - 1].f), widest * step,
                         "||f_" + std::to_string(k) + " - f_" + std::to_string(j) + "||");
        }
        {
            auto c = out.open("S4.lip_cert", n);
            for (const auto& cert : trace.certificates) {
                if (cert.stage != n || cert.kind != Certificate::Kind::lip_upper) continue;
                check_certificate(c, f, cert);
                auto k = st.v.component_containing(cert.x);
                if (!k) {
                    c.member(false, cert.x, "certificate point outside V_n");
                    continue;
                }
                const auto& comp = st.v.components()[*k];
                c.eq(cert.radius, min_of(cert.x - comp.lo, comp.hi - cert.x), "radius r_x " + at(cert.x));
            }
        }

        if (n < depth) {
            const auto& next = stages[n];
            {
                auto c = out.open("S4.V_trim", n);
                for (const auto& comp : st.u.components()) {
                    const ClosedInterval i = comp.closure();
                    c.member(!next.v.contains(i.lo()), i.lo(), "U_n component end inside V_{n+1}");
                    c.member(!next.v.contains(i.hi()), i.hi(), "U_n component end inside V_{n+1}");
                    c.lt(measure(restrict(next.v, i)), i.length(), "measure in " + on(i));
                }
            }
            {
                auto c = out.open("L4.5.fn_squeeze", n);
                for (const auto& comp : st.u.components()) {
                    const Rational lo = st.g.eval(comp.lo), hi = st.g.eval(comp.hi);
                    for (const auto& x : breakpoints_in(next.f, comp.lo, comp.hi)) {
                        c.le(lo, next.f.eval(x), "lower " + at(x));
                        c.le(next.f.eval(x), hi, "upper " + at(x));
                    }
                }
            }
            auto inc = out.open("L4.4.increasing", n);
            auto ends = out.open("L4.4.endpoints", n);
            auto slope = out.open("L4.4.slope_on_V", n);
            auto lip = out.open("L4.4.lipschitz", n);
            for (const auto& r : st.ramps) {
                const auto& i = r.interval;
                const std::string where = " on " + on(i);
                inc.nondecreasing(r.f, "ramp" + where);
                ends.eq(r.h_start, st.g.eval(i.lo()), "h(a) vs g_n" + where);
                ends.eq(r.slope * i.length(), st.g.eval(i.hi()) - st.g.eval(i.lo()), "slope of g_n" + where);
                ends.eq(r.f.eval(i.lo()), r.h_start, "f(a) = h(a)" + where);
                ends.eq(r.f.eval(i.hi()), r.h_start + r.slope * i.length(), "f(b) = h(b)" + where);
                const Rational gentle = pow2(-r.order);
                for (const auto& comp : r.v.components()) {
                    for (const auto& x : breakpoints_in(r.f, comp.lo, comp.hi))
                        slope.eq(r.f.eval(x) - r.f.eval(comp.lo), gentle * (x - comp.lo), "ramp " + at(x));
                }
                lip.le(lipschitz_constant(r.f), max_of(gentle, ramp_coefficient(r.slope, i, r.v, r.order)), "ramp" + where);
            }
            {
                auto c = out.open("S4.big_lip_cert", n);
                for (const auto& cert : trace.certificates) {
                    if (cert.stage != n || cert.kind != Certificate::Kind::big_lip_lower) continue;
                    check_certificate(c, f, cert);
                    auto k = st.u.component_containing(cert.x);
                    if (!k) {
                        c.member(false, cert.x, "certificate point outside U_n");
                        continue;
                    }
                    const auto& comp = st.u.components()[*k];
                    c.eq(cert.radius, max_of(cert.x - comp.lo, comp.hi - cert.x), "radius r_n " + at(cert.x));
                    c.eq(st.g.eval(comp.hi) - st.g.eval(comp.lo), pow2(n) * comp.length(), "g_n rise " + at(cert.x));
                }
            }
        }
    }
    {
        auto c = out.open("S4.endpoints", depth);
        c.eq(f.eval(0), 0, "f(0)");
        c.eq(f.eval(1), make_rational(1, 2), "f(1)");
    }
    return out.finish();
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

std::vector<std::string> failing_ids(const std::vector<CheckReport>& reports) {
    std::vector<std::string> out;
    for (const auto& r : reports)
        if (!r.pass && std::find(out.begin(), out.end(), r.check_id) == out.end()) out.push_back(r.check_id);
    return out;
}

Rational brute_force_mf_oracle(const PiecewiseLinear& f, const Rational& x, const Rational& r, int grid_count) {
    if (grid_count < 2) throw ContractViolation("oracle grid needs at least two points");
    const auto dom = f.domain();
    const Rational lo = max_of(x - r, dom.lo()), hi = min_of(x + r, dom.hi());
    const Rational fx = f.eval(x);
    Rational best = 0;
    for (int k = 0; k < grid_count; ++k) {
        const Rational y = lo + (hi - lo) * k / (grid_count - 1);
        best = max_of(best, abs_of(fx - f.eval(y)));
    }
    return best / r;
}

}  // namespace liplab
