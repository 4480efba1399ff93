#include "defbin/rational.hpp"

#include <cctype>

namespace defbin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("rational: expected \"n\" or \"n/d\", got \"" +
                                    std::string(text) + "\"");
    Rational r{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational pochhammer(const Rational& z, unsigned long n) {
    Rational acc(1);
    for (unsigned long i = 0; i < n; ++i) acc *= z + static_cast<long>(i);
    return acc;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r = exp > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

}  // namespace defbin
