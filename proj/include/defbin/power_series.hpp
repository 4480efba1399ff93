#pragma once

#include <vector>

#include "defbin/eta_polynomial.hpp"
#include "defbin/rational.hpp"

namespace defbin {

// Truncated formal power series in t over Rational. The truncation order
// is the index of the last stored coefficient; arithmetic on two series
// truncates to the smaller order.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("power series: negative order");
    }
    explicit PowerSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    void set_coeff(int n, const Rational& v) { coeffs_.at(static_cast<size_t>(n)) = v; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PowerSeries truncated(int order) const;
    PowerSeries derivative() const;  // same order, top coefficient dropped

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& s, PowerSeries a);

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// exp(f) for f with zero constant term, via n g_n = sum_{k=1..n} k f_k g_{n-k}.
PowerSeries series_exp(const PowerSeries& f);

// log(g) for g with constant term 1; inverse of series_exp.
PowerSeries series_log(const PowerSeries& g);

// Coefficients of exp(eta*f) as polynomials in eta, f with zero constant term.
// c[0] = 1 and n c_n(eta) = eta * sum_{k=1..n} k f_k c_{n-k}(eta).
struct EtaPowerSeries {
    std::vector<EtaPolynomial> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

EtaPowerSeries series_exp_eta(const PowerSeries& f);

}  // namespace defbin
