#ifndef LIPLAB_TESTS_SUPPORT_HPP
#define LIPLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "liplab/pwl.hpp"

namespace liplab::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

// Fixed-seed source of small random rationals, open sets and PWL functions.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // k / den with k uniform in [lo*den, hi*den].
    Rational rational(const Rational& lo, const Rational& hi, long den = 97) {
        const Rational a = lo * den, b = hi * den;
        const long ka = static_cast<long>(mpz_class(a.get_num() / a.get_den()).get_si());
        const long kb = static_cast<long>(mpz_class(b.get_num() / b.get_den()).get_si());
        Rational r = make_rational(integer(ka, kb), den);
        return max_of(lo, min_of(hi, r));
    }

    std::vector<Rational> distinct_sorted(std::size_t count, const Rational& lo, const Rational& hi, long den) {
        std::vector<Rational> xs;
        while (xs.size() < count) {
            Rational x = rational(lo, hi, den);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());
        return xs;
    }

    // Random PWL on [lo, hi] with `inner` interior breakpoints and values in [-2, 2].
    PiecewiseLinear pwl(const Rational& lo, const Rational& hi, std::size_t inner) {
        std::vector<Rational> xs{lo};
        for (const auto& x : distinct_sorted(inner, lo, hi, 1009))
            if (lo < x && x < hi) xs.push_back(x);
        xs.push_back(hi);
        std::vector<Breakpoint> pts;
        for (const auto& x : xs) pts.push_back({x, rational(q(-2), q(2), 61)});
        return PiecewiseLinear(std::move(pts));
    }

    // Disjoint open intervals inside (lo, hi) built from an even number of distinct cut points.
    OpenSet open_set(const Rational& lo, const Rational& hi, std::size_t components) {
        auto cuts = distinct_sorted(2 * components, lo, hi, 1013);
        std::vector<OpenInterval> out;
        for (std::size_t k = 0; k + 1 < cuts.size(); k += 2) out.push_back({cuts[k], cuts[k + 1]});
        return OpenSet(std::move(out));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace liplab::testing

#endif  // LIPLAB_TESTS_SUPPORT_HPP
