#include "liplab/rational.hpp"

#include <cctype>

namespace liplab {

Rational make_rational(long num, long den) {
    if (den == 0) throw ContractViolation("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow2(int k) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
    if (k >= 0) return Rational(p);
    Rational r(mpz_class(1), p);
    r.canonicalize();
    return r;
}

Rational power(const Rational& r, unsigned k) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), k);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational dyadic_floor(const Rational& x) {
    if (x <= 0) throw ContractViolation("dyadic_floor of a non-positive value");
    // floor(log2(num)) - floor(log2(den)) is within one of the answer
    int k = static_cast<int>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
            static_cast<int>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    while (pow2(k) > x) --k;
    while (pow2(k + 1) <= x) ++k;
    return pow2(k);
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw ContractViolation("malformed rational: '" + std::string(text) + "'");
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw ContractViolation("malformed rational (zero denominator): '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& r, int places) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
    mpz_class den = r.get_den() * 2;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = (r < 0 && q != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

}  // namespace liplab
