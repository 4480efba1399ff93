#pragma once

#include <vector>

#include "defbin/rational.hpp"

namespace defbin {

// Polynomial in the win probability eta with exact rational coefficients.
// Coefficients are stored ascending; the representation is trimmed, so
// degree() is meaningful and the zero polynomial is {0}.
class EtaPolynomial {
public:
    EtaPolynomial() : coeffs_{Rational(0)} {}
    explicit EtaPolynomial(std::vector<Rational> coeffs);

    static EtaPolynomial constant(const Rational& c);
    // c * eta^k
    static EtaPolynomial monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    // Zero beyond the stored degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    EtaPolynomial& operator+=(const EtaPolynomial& o);
    EtaPolynomial& operator-=(const EtaPolynomial& o);
    EtaPolynomial& operator*=(const Rational& s);

    friend EtaPolynomial operator+(EtaPolynomial a, const EtaPolynomial& b) { return a += b; }
    friend EtaPolynomial operator-(EtaPolynomial a, const EtaPolynomial& b) { return a -= b; }
    friend EtaPolynomial operator*(EtaPolynomial a, const Rational& s) { return a *= s; }
    friend EtaPolynomial operator*(const Rational& s, EtaPolynomial a) { return a *= s; }
    friend EtaPolynomial operator*(const EtaPolynomial& a, const EtaPolynomial& b);

    bool operator==(const EtaPolynomial& o) const { return coeffs_ == o.coeffs_; }

    EtaPolynomial derivative() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Horner evaluation.
Rational poly_eval(const EtaPolynomial& p, const Rational& x);
double poly_eval(const EtaPolynomial& p, double x);

// p(eta + s) expanded in eta.
EtaPolynomial poly_shift(const EtaPolynomial& p, const Rational& s);

// p(1 - eta) expanded in eta.
EtaPolynomial poly_reflect(const EtaPolynomial& p);

// integral of p over [0,1], exactly.
Rational poly_integral_unit(const EtaPolynomial& p);

}  // namespace defbin
