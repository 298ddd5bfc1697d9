#ifndef LIPLAB_CONSTRUCTION_HPP
#define LIPLAB_CONSTRUCTION_HPP

#include <optional>
#include <vector>

#include "liplab/interval.hpp"
#include "liplab/pwl.hpp"

namespace liplab {

/// Raised when an n-small set cannot absorb the cover it must contain.
class BudgetViolation : public Error {
public:
    BudgetViolation(const std::string& what, int annulus, bool left_side)
        : Error(what), annulus_(annulus), left_side_(left_side) {}
    /// Annulus index j >= 1, or 0 for an endpoint tail region.
    int annulus() const { return annulus_; }
    bool left_side() const { return left_side_; }

private:
    int annulus_;
    bool left_side_;
};

/// Tent on I with peak 2^-n (b-a)/2 at the midpoint, slopes ±2^-n.
PiecewiseLinear phi(int n, const ClosedInterval& i);

/// Truncated n-close sequence z_j, j = first_index .. first_index + size - 1.
struct NCloseSequence {
    ClosedInterval interval;
    int order;
    int first_index;
    std::vector<Rational> points;

    int truncation() const { return -first_index; }
    int index_of(std::size_t k) const { return first_index + static_cast<int>(k); }
};

/// Ratio 2·4^n / (2·4^n + 1) of the canonical geometric scheme.
Rational n_close_ratio(int n);

/// Geometric scheme anchored at c = a + theta (b - a):
///   z_j = b - (b - c) λ^j for j >= 0, z_j = a + (c - a) λ^-j for j < 0,
/// emitted for j = -J..J. theta = 1/2 is the canonical symmetric scheme.
NCloseSequence generate_n_close(int n, const ClosedInterval& i, int truncation,
                                const Rational& theta = make_rational(1, 2));

/// Strictly increasing, inside (a, b), and z_{j+1} - z_j < 4^-n min(z_j - a, b - z_{j+1}).
bool is_n_close(const std::vector<Rational>& points, int n, const ClosedInterval& i);

/// Zig-zag of order Z.order: `base` at a, b and even-index points; base + Φ at
/// odd-index points; linear in between.
PiecewiseLinear zigzag(const NCloseSequence& z, const Rational& base);

/// The flattening operator g(f, [a,b], U) for a linear f given by its
/// endpoint values. Requires U trim in I.
PiecewiseLinear flatten(const Rational& f_a, const Rational& f_b, const ClosedInterval& i, const OpenSet& u);

/// G + Σ Φ_{n, component} over the listed components (all inside I).
PiecewiseLinear envelope_h(const PiecewiseLinear& g, int n, const std::vector<ClosedInterval>& components,
                           const ClosedInterval& i);

/// One of the dyadic annuli of an n-small set, or an endpoint tail.
struct AnnulusRegion {
    int index;  ///< j >= 1 for annuli, 0 for the tail next to the endpoint
    bool left;
    ClosedInterval region;
    Rational quota;
};

/// Regions in left-to-right order: left tail, left annuli j = depth..1,
/// right annuli j = 1..depth, right tail. Tails (the union of all annuli
/// j > depth) are included only when `with_tails`.
std::vector<AnnulusRegion> annulus_regions(int n, const ClosedInterval& i, int depth, bool with_tails);

enum class TailPolicy {
    fill,  ///< tails receive the aggregated quota of the unprocessed annuli
    empty  ///< nothing outside the processed annuli
};

/// Open U inside I with |U ∩ annulus_j| = (b-a)/2^(2n+j+1) exactly on both
/// sides for j = 1..depth, containing restrict(cover, I). With
/// TailPolicy::fill the total is exactly 2^-2n (b-a).
OpenSet generate_n_small(int n, const ClosedInterval& i, const OpenSet& cover, int depth,
                         TailPolicy tails = TailPolicy::fill);

/// x ↦ 2^n |U ∩ [a, x]| on I.
PiecewiseLinear monotone_h(int n, const OpenSet& u, const ClosedInterval& i);

enum class RampCoefficient {
    corrected,     ///< (m - 2^-n)(b-a)/α + 2^-n, which makes f(b) = h(b)
    paper_literal  ///< (m - 2^-n+1)(b-a)/α + 2^-n, kept for documentation runs
};

/// Steep-slope coefficient of the ramp off V.
Rational ramp_coefficient(const Rational& m, const ClosedInterval& i, const OpenSet& v, int n,
                          RampCoefficient mode = RampCoefficient::corrected);

/// Nondecreasing Lipschitz interpolant starting at h_start with slope 2^-n
/// on every component of V and the steep coefficient elsewhere.
PiecewiseLinear ramp(const Rational& h_start, const Rational& m, const ClosedInterval& i, const OpenSet& v, int n,
                     RampCoefficient mode = RampCoefficient::corrected);

}  // namespace liplab

#endif  // LIPLAB_CONSTRUCTION_HPP
