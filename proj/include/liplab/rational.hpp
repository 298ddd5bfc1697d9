#ifndef LIPLAB_RATIONAL_HPP
#define LIPLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liplab {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

Rational make_rational(long num, long den = 1);

/// 2^k for any integer k (negative k gives 2^-|k|).
Rational pow2(int k);

/// r^k for k >= 0.
Rational power(const Rational& r, unsigned k);

/// Largest power of two (possibly negative exponent) that is <= x. Requires x > 0.
Rational dyadic_floor(const Rational& x);

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

/// Decimal rendering rounded half away from zero to `places` digits.
std::string to_decimal(const Rational& r, int places = 12);

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Rational min_of(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace liplab

#endif  // LIPLAB_RATIONAL_HPP
