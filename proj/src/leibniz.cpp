#include "defbin/leibniz.hpp"

#include <cmath>
#include <stdexcept>

namespace defbin {

std::vector<Rational> varpi(const QFamily& qf, int n, const Rational& eta) {
    DistributionTable t = pmf(qf, n, eta);
    std::vector<Rational> w(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        w[static_cast<size_t>(k)] = t.p[static_cast<size_t>(k)] /
                                    binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    }
    return w;
}

namespace {

template <typename Value>
Value row_residual(const std::vector<Value>& prev, const std::vector<Value>& cur, int n) {
    using std::abs;
    Value worst = Value(0);
    for (int k = 0; k < n; ++k) {
        Value d = prev[static_cast<size_t>(k)] - cur[static_cast<size_t>(k)] - cur[static_cast<size_t>(k) + 1];
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace

LeibnizReport leibniz_residuals(const QFamily& qf, int nmax, const Rational& eta) {
    if (nmax < 1 || nmax > qf.order()) throw std::invalid_argument("leibniz: nmax must lie in [1, order]");
    LeibnizReport rep;
    rep.family = family_name(qf.model.family);
    rep.eta = eta;
    std::vector<Rational> prev = varpi(qf, 0, eta);
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Rational> cur = varpi(qf, n, eta);
        Rational r = row_residual(prev, cur, n);
        rep.n.push_back(n);
        rep.exact_zero.push_back(r == 0);
        if (r != 0) rep.all_exact_zero = false;
        rep.residual.push_back(std::move(r));
        prev = std::move(cur);
    }
    return rep;
}

LeibnizFloatReport leibniz_residuals_float(const GeneratingFamily& fam, int nmax, double eta) {
    if (nmax < 1) throw std::invalid_argument("leibniz: nmax must be >= 1");
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("leibniz: eta must lie in [0,1]");
    LeibnizFloatReport rep;
    rep.family = family_name(fam);
    rep.eta = eta;
    rep.n.resize(static_cast<size_t>(nmax));
    rep.residual.assign(static_cast<size_t>(nmax), 0.0);
    for (int n = 1; n <= nmax; ++n) rep.n[static_cast<size_t>(n) - 1] = n;
    if (eta == 0.0 || eta == 1.0) return rep;  // degenerate rows telescope exactly

    auto varpi_row = [&](int n, const QFamily* qf) {
        std::vector<double> w(static_cast<size_t>(n) + 1);
        if (n == 0) {
            w[0] = 1.0;
            return w;
        }
        if (qf != nullptr) {
            DistributionTable t = pmf_double(*qf, n, eta);
            for (int k = 0; k <= n; ++k) {
                w[static_cast<size_t>(k)] =
                    t.p_f[static_cast<size_t>(k)] /
                    to_double(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
            }
        } else {
            std::vector<double> lnp = log_pmf(fam, n, eta);
            for (int k = 0; k <= n; ++k) {
                double lnc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
                w[static_cast<size_t>(k)] = std::exp(lnp[static_cast<size_t>(k)] - lnc);
            }
        }
        return w;
    };

    QFamily qf;
    const QFamily* qfp = nullptr;
    if (std::holds_alternative<CustomSeed>(fam)) {
        qf = q_polynomials(build_model(fam, nmax));
        qfp = &qf;
    }

    std::vector<double> prev = varpi_row(0, qfp);
    for (int n = 1; n <= nmax; ++n) {
        std::vector<double> cur = varpi_row(n, qfp);
        rep.residual[static_cast<size_t>(n) - 1] = row_residual(prev, cur, n);
        prev = std::move(cur);
    }
    return rep;
}

bool leibniz_unique_family(const Rational& alpha, int nmax) {
    if (alpha <= 0) throw std::invalid_argument("leibniz: alpha must be positive");
    if (nmax < 1) throw std::invalid_argument("leibniz: nmax must be >= 1");
    QFamily qf = q_polynomials(build_model(QExponential{alpha}, nmax));

    // (i) the product formula reproduces every q_n
    EtaPolynomial prod = EtaPolynomial::constant(1);
    for (int k = 1; k <= nmax; ++k) {
        Rational denom = alpha + (k - 1);
        prod = prod * EtaPolynomial({Rational(k - 1) / denom, alpha / denom});
        if (!(prod == qf.q[static_cast<size_t>(k)])) return false;
    }

    // (ii) y_n = x_n/n matches alpha/(n + alpha - 1)
    std::vector<Rational> y(static_cast<size_t>(nmax) + 1);
    for (int n = 1; n <= nmax; ++n) {
        y[static_cast<size_t>(n)] = qf.model.x[static_cast<size_t>(n)] / n;
        if (y[static_cast<size_t>(n)] != alpha / (alpha + (n - 1))) return false;
    }

    // (iii) the generic triangle-rule solution built from the y_n alone
    EtaPolynomial rebuilt = EtaPolynomial::constant(1);
    for (int k = 1; k <= nmax; ++k) {
        Rational r = y[static_cast<size_t>(k)] / y[1];
        rebuilt = rebuilt * EtaPolynomial({Rational(1) - r, r});
        if (!(rebuilt == qf.q[static_cast<size_t>(k)])) return false;
    }

    // (iv) Z(n) = n/x_n is affine and additive in the Cauchy-Pexider sense
    Rational mu = Rational(1) / alpha;
    Rational nu = Rational(1) - mu;
    std::vector<Rational> z(static_cast<size_t>(nmax) + 1);
    for (int n = 1; n <= nmax; ++n) {
        z[static_cast<size_t>(n)] = Rational(n) / qf.model.x[static_cast<size_t>(n)];
        if (z[static_cast<size_t>(n)] != mu * n + nu) return false;
    }
    for (int n = 2; n <= nmax; ++n) {
        for (int k = 1; k < n; ++k) {
            if (k + 1 > nmax) continue;
            if (z[static_cast<size_t>(n)] !=
                z[static_cast<size_t>(n - k)] + z[static_cast<size_t>(k) + 1] - z[1])
                return false;
        }
    }
    return true;
}

}  // namespace defbin
