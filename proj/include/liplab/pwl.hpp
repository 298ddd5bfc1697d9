#ifndef LIPLAB_PWL_HPP
#define LIPLAB_PWL_HPP

#include <optional>
#include <vector>

#include "liplab/interval.hpp"

namespace liplab {

struct Breakpoint {
    Rational x;
    Rational y;

    friend bool operator==(const Breakpoint& a, const Breakpoint& b) { return a.x == b.x && a.y == b.y; }
};

/// Continuous piecewise-linear function on a closed interval, given by its
/// breakpoints (x strictly increasing, first/last at the domain ends).
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(std::vector<Breakpoint> points);

    static PiecewiseLinear constant(const ClosedInterval& domain, const Rational& value);
    /// Line through (domain.lo, start) with the given slope.
    static PiecewiseLinear line(const ClosedInterval& domain, const Rational& start, const Rational& slope);

    ClosedInterval domain() const { return {points_.front().x, points_.back().x}; }
    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    std::size_t size() const { return points_.size(); }

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;
    /// Slope of segment k, between breakpoints k and k+1.
    Rational slope(std::size_t k) const;

    friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) { return a.points_ == b.points_; }

private:
    std::vector<Breakpoint> points_;
};

/// Radii r_max * ratio^k for k = 0..count-1.
struct RadiusSchedule {
    Rational r_max;
    Rational ratio;
    int count;

    std::vector<Rational> radii() const;
    /// r_max = 1/4, ratio = 1/2, count = depth + 4.
    static RadiusSchedule for_depth(int depth);
};

enum class Side { plus, minus };

/// M_f(x, r) = max |f(x) - f(y)| / r over y in [x-r, x+r] clipped to the domain.
/// Exact: |f(x) - f(y)| is convex on each linear piece, so the max sits on a
/// breakpoint inside the window or on a window edge.
Rational m_f(const PiecewiseLinear& f, const Rational& x, const Rational& r);

/// Same with y restricted to [x, x+r] (plus) or [x-r, x] (minus).
Rational m_f_one_sided(const PiecewiseLinear& f, const Rational& x, const Rational& r, Side side);

/// Max of m_f over the schedule: a finite-scale lower estimator of Lip f(x).
Rational big_lip_estimate(const PiecewiseLinear& f, const Rational& x, const RadiusSchedule& sched);
/// Min of m_f over the schedule: a finite-scale upper estimator of lip f(x).
Rational small_lip_estimate(const PiecewiseLinear& f, const Rational& x, const RadiusSchedule& sched);
Rational one_sided_lip_estimate(const PiecewiseLinear& f, const Rational& x, Side side,
                                const RadiusSchedule& sched);

/// Sorted union of both breakpoint grids (identical domains required).
std::vector<Rational> union_grid(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Exact sup |f - g|.
Rational uniform_distance(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Max |slope| over segments.
Rational lipschitz_constant(const PiecewiseLinear& f);

bool is_monotone_nondecreasing(const PiecewiseLinear& f);

/// Location where lower(x) > upper(x), if any, scanning the union grid.
struct Violation {
    Rational x;
    Rational lhs;
    Rational rhs;
};
std::optional<Violation> first_exceedance(const PiecewiseLinear& lower, const PiecewiseLinear& upper);

/// Finite-Lip certificate from g <= f <= h with g(x) = h(x): returns
/// max(Lip g, Lip h), which dominates m_f(f, x, r) for every r.
Rational sandwich_certificate(const PiecewiseLinear& g, const PiecewiseLinear& h, const PiecewiseLinear& f,
                              const Rational& x);

PiecewiseLinear add(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear scale(const PiecewiseLinear& f, const Rational& c);
PiecewiseLinear add_constant(const PiecewiseLinear& f, const Rational& c);

/// f restricted to a sub-interval of its domain.
PiecewiseLinear restrict_to(const PiecewiseLinear& f, const ClosedInterval& sub);

/// Extends f (on a sub-interval) by zero to `domain`. f must vanish at its ends.
PiecewiseLinear extend_by_zero(const PiecewiseLinear& f, const ClosedInterval& domain);

/// Replaces `background` on each piece's domain by the piece. Piece domains
/// must be non-overlapping. In strict mode each piece must agree with the
/// background at its endpoints; otherwise the background value wins there.
enum class SpliceMode { strict, background_wins };
PiecewiseLinear splice(const PiecewiseLinear& background, const std::vector<PiecewiseLinear>& pieces,
                       SpliceMode mode = SpliceMode::strict);

}  // namespace liplab

#endif  // LIPLAB_PWL_HPP
