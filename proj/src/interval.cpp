#include "liplab/interval.hpp"

#include <algorithm>

namespace liplab {

ClosedInterval::ClosedInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_))
        throw ContractViolation("degenerate closed interval [" + to_string(lo_) + ", " + to_string(hi_) + "]");
}

OpenSet::OpenSet(std::vector<OpenInterval> components) : components_(std::move(components)) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (!(c.lo < c.hi))
            throw ContractViolation("empty open component (" + to_string(c.lo) + ", " + to_string(c.hi) + ")");
        if (i > 0 && components_[i - 1].hi > c.lo)
            throw ContractViolation("open components overlap or are unsorted at (" + to_string(c.lo) + ", " +
                                    to_string(c.hi) + ")");
    }
}

OpenSet OpenSet::from_unsorted(std::vector<OpenInterval> components) {
    std::sort(components.begin(), components.end(),
              [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
    return OpenSet(std::move(components));
}

OpenSet OpenSet::single(Rational lo, Rational hi) { return OpenSet({OpenInterval{std::move(lo), std::move(hi)}}); }

std::optional<std::size_t> OpenSet::component_containing(const Rational& x) const {
    auto it = std::upper_bound(components_.begin(), components_.end(), x,
                               [](const Rational& v, const OpenInterval& c) { return v < c.lo; });
    if (it == components_.begin()) return std::nullopt;
    --it;
    if (it->contains(x)) return static_cast<std::size_t>(it - components_.begin());
    return std::nullopt;
}

bool OpenSet::contains(const Rational& x) const { return component_containing(x).has_value(); }

bool OpenSet::is_subset_of(const OpenSet& other) const {
    for (const auto& c : components_) {
        bool inside = false;
        for (const auto& o : other.components_) {
            if (o.lo <= c.lo && c.hi <= o.hi) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

std::vector<OpenInterval> OpenSet::components_within(const Rational& lo, const Rational& hi) const {
    std::vector<OpenInterval> out;
    for (const auto& c : components_)
        if (lo <= c.lo && c.hi <= hi) out.push_back(c);
    return out;
}

Rational measure(const OpenSet& s) {
    Rational total = 0;
    for (const auto& c : s.components()) total += c.length();
    return total;
}

OpenSet restrict(const OpenSet& s, const ClosedInterval& i) {
    std::vector<OpenInterval> out;
    for (const auto& c : s.components()) {
        Rational lo = max_of(c.lo, i.lo());
        Rational hi = min_of(c.hi, i.hi());
        if (lo < hi) out.push_back({lo, hi});
    }
    return OpenSet(std::move(out));
}

Rational left_measure(const OpenSet& s, const Rational& a, const Rational& x) {
    if (a > x) throw ContractViolation("left_measure requires a <= x");
    Rational total = 0;
    for (const auto& c : s.components()) {
        if (c.lo >= x) break;
        Rational lo = max_of(c.lo, a);
        Rational hi = min_of(c.hi, x);
        if (lo < hi) total += hi - lo;
    }
    return total;
}

Rational complement_left_measure(const OpenSet& s, const Rational& a, const Rational& x) {
    return (x - a) - left_measure(s, a, x);
}

bool is_trim_in(const OpenSet& u, const ClosedInterval& i) {
    if (u.contains(i.lo()) || u.contains(i.hi())) return false;
    return measure(restrict(u, i)) < i.length();
}

bool is_trim_on_family(const OpenSet& u, const std::vector<ClosedInterval>& family) {
    std::vector<ClosedInterval> sorted = family;
    std::sort(sorted.begin(), sorted.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo() < b.lo(); });
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k - 1].hi() > sorted[k].lo()) throw ContractViolation("family intervals overlap");
    return std::all_of(sorted.begin(), sorted.end(), [&](const ClosedInterval& i) { return is_trim_in(u, i); });
}

bool is_trim_set_probe(const OpenSet& e, const std::vector<ClosedInterval>& probes) {
    return std::all_of(probes.begin(), probes.end(),
                       [&](const ClosedInterval& p) { return measure(restrict(e, p)) < p.length(); });
}

std::vector<ClosedInterval> dyadic_probes(int max_level) {
    std::vector<ClosedInterval> out;
    for (int m = 0; m <= max_level; ++m) {
        Rational w = pow2(-m);
        long count = 1L << m;
        for (long k = 0; k < count; ++k) out.emplace_back(w * k, w * (k + 1));
    }
    return out;
}

}  // namespace liplab
