#ifndef LIPLAB_INTERVAL_HPP
#define LIPLAB_INTERVAL_HPP

#include <optional>
#include <vector>

#include "liplab/rational.hpp"

namespace liplab {

/// Non-degenerate closed interval [lo, hi].
class ClosedInterval {
public:
    ClosedInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational length() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_interior(const Rational& x) const { return lo_ < x && x < hi_; }

    friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_;
    Rational hi_;
};

/// One component (lo, hi) of an OpenSet.
struct OpenInterval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }
    ClosedInterval closure() const { return {lo, hi}; }

    friend bool operator==(const OpenInterval& a, const OpenInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Finite disjoint union of bounded open intervals. Components are sorted
/// and may touch (hi_i == lo_{i+1}); touching components are never merged
/// because the shared endpoint is not a member of the set.
class OpenSet {
public:
    OpenSet() = default;
    /// Components must already be sorted and pairwise disjoint.
    explicit OpenSet(std::vector<OpenInterval> components);
    /// Sorts first; still rejects overlaps.
    static OpenSet from_unsorted(std::vector<OpenInterval> components);
    static OpenSet single(Rational lo, Rational hi);

    const std::vector<OpenInterval>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }

    bool contains(const Rational& x) const;
    /// Index of the component containing x, if any.
    std::optional<std::size_t> component_containing(const Rational& x) const;
    /// Every component lies inside a single component of `other`.
    bool is_subset_of(const OpenSet& other) const;
    /// Components wholly inside the open interval (lo, hi).
    std::vector<OpenInterval> components_within(const Rational& lo, const Rational& hi) const;

    friend bool operator==(const OpenSet& a, const OpenSet& b) { return a.components_ == b.components_; }

private:
    std::vector<OpenInterval> components_;
};

Rational measure(const OpenSet& s);

/// S ∩ (I.lo, I.hi).
OpenSet restrict(const OpenSet& s, const ClosedInterval& i);

/// |S ∩ (a, x)|; requires a <= x.
Rational left_measure(const OpenSet& s, const Rational& a, const Rational& x);

/// (x - a) - |S ∩ (a, x)|; requires a <= x.
Rational complement_left_measure(const OpenSet& s, const Rational& a, const Rational& x);

/// |U ∩ [a,b]| < b - a and neither endpoint lies in U.
bool is_trim_in(const OpenSet& u, const ClosedInterval& i);

/// is_trim_in for every interval of a non-overlapping family.
bool is_trim_on_family(const OpenSet& u, const std::vector<ClosedInterval>& family);

/// Finite-scale trimness: |E ∩ (a,b)| < b - a on every probe.
bool is_trim_set_probe(const OpenSet& e, const std::vector<ClosedInterval>& probes);

/// All dyadic intervals [k 2^-m, (k+1) 2^-m] ⊂ [0,1] for m = 0..max_level.
std::vector<ClosedInterval> dyadic_probes(int max_level);

}  // namespace liplab

#endif  // LIPLAB_INTERVAL_HPP
