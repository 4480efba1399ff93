#include "defbin/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace defbin {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("power series: no coefficients");
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order < 0 || order > this->order())
        throw std::invalid_argument("power series: bad truncation order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries out(order());
    for (int n = 1; n <= order(); ++n) out.coeffs_[n - 1] = coeffs_[n] * n;
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int n = 0; n <= order; ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int n = 0; n <= order; ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

PowerSeries series_exp(const PowerSeries& f) {
    if (f.coeff(0) != 0) throw std::domain_error("series_exp: nonzero constant term");
    PowerSeries g(f.order());
    g.set_coeff(0, Rational(1));
    for (int n = 1; n <= f.order(); ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) {
            const Rational& fk = f.coeff(k);
            if (fk == 0) continue;
            acc += Rational(k) * fk * g.coeff(n - k);
        }
        g.set_coeff(n, acc / n);
    }
    return g;
}

PowerSeries series_log(const PowerSeries& g) {
    if (g.coeff(0) != 1) throw std::domain_error("series_log: constant term must be 1");
    PowerSeries f(g.order());
    for (int n = 1; n <= g.order(); ++n) {
        Rational acc = Rational(n) * g.coeff(n);
        for (int k = 1; k < n; ++k) {
            const Rational& fk = f.coeff(k);
            if (fk == 0) continue;
            acc -= Rational(k) * fk * g.coeff(n - k);
        }
        f.set_coeff(n, acc / n);
    }
    return f;
}

EtaPowerSeries series_exp_eta(const PowerSeries& f) {
    if (f.coeff(0) != 0) throw std::domain_error("series_exp_eta: nonzero constant term");
    EtaPowerSeries out;
    out.c.reserve(static_cast<size_t>(f.order()) + 1);
    out.c.push_back(EtaPolynomial::constant(Rational(1)));
    for (int n = 1; n <= f.order(); ++n) {
        EtaPolynomial acc;
        for (int k = 1; k <= n; ++k) {
            const Rational& fk = f.coeff(k);
            if (fk == 0) continue;
            acc += (Rational(k) * fk) * out.c[static_cast<size_t>(n - k)];
        }
        // multiply by eta/n
        std::vector<Rational> shifted(static_cast<size_t>(acc.degree()) + 2, Rational(0));
        for (int i = 0; i <= acc.degree(); ++i)
            shifted[static_cast<size_t>(i) + 1] = acc.coeff(i) / n;
        out.c.emplace_back(std::move(shifted));
    }
    return out;
}

}  // namespace defbin
