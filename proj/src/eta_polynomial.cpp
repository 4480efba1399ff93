#include "defbin/eta_polynomial.hpp"

#include <stdexcept>

namespace defbin {

EtaPolynomial::EtaPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    trim();
}

EtaPolynomial EtaPolynomial::constant(const Rational& c) {
    return EtaPolynomial({c});
}

EtaPolynomial EtaPolynomial::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return EtaPolynomial(std::move(v));
}

const Rational& EtaPolynomial::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

void EtaPolynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

EtaPolynomial& EtaPolynomial::operator+=(const EtaPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

EtaPolynomial& EtaPolynomial::operator-=(const EtaPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

EtaPolynomial& EtaPolynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

EtaPolynomial operator*(const EtaPolynomial& a, const EtaPolynomial& b) {
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return EtaPolynomial(std::move(out));
}

EtaPolynomial EtaPolynomial::derivative() const {
    if (coeffs_.size() == 1) return EtaPolynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return EtaPolynomial(std::move(out));
}

Rational poly_eval(const EtaPolynomial& p, const Rational& x) {
    Rational acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const EtaPolynomial& p, double x) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

EtaPolynomial poly_reflect(const EtaPolynomial& p) {
    // Horner in (1 - eta)
    EtaPolynomial acc;
    EtaPolynomial lin({Rational(1), Rational(-1)});
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + EtaPolynomial::constant(*it);
    }
    return acc;
}

Rational poly_integral_unit(const EtaPolynomial& p) {
    Rational total(0);
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) total += c[i] / static_cast<long>(i + 1);
    return total;
}

EtaPolynomial poly_shift(const EtaPolynomial& p, const Rational& s) {
    // Horner in (eta + s): acc <- acc*(eta+s) + c_i, exact at every step.
    EtaPolynomial acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        std::vector<Rational> next(static_cast<size_t>(acc.degree()) + 2, Rational(0));
        const auto& ac = acc.coeffs();
        for (size_t i = 0; i < ac.size(); ++i) {
            next[i + 1] += ac[i];
            next[i] += ac[i] * s;
        }
        next[0] += *it;
        acc = EtaPolynomial(std::move(next));
    }
    return acc;
}

}  // namespace defbin
