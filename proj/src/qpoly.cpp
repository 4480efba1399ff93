#include "defbin/qpoly.hpp"

#include <functional>
#include <stdexcept>

namespace defbin {

QFamily q_polynomials(const DeformedModel& model) {
    QFamily qf;
    qf.model = model;
    EtaPowerSeries c = series_exp_eta(PowerSeries(model.a));
    qf.q.reserve(c.c.size());
    for (size_t n = 0; n < c.c.size(); ++n)
        qf.q.push_back(model.xfact[n] * c.c[n]);
    return qf;
}

RecurrenceReport q_recurrence_check(const QFamily& qf) {
    RecurrenceReport report;
    const DeformedModel& m = qf.model;
    for (int n = 0; n + 1 <= qf.order(); ++n) {
        EtaPolynomial sum;
        for (int k = 0; k <= n; ++k) {
            Rational w = m.binomial_x(n, k) * Rational(n - k + 1) /
                         m.x[static_cast<size_t>(n - k + 1)];
            sum += w * poly_shift(qf.q[static_cast<size_t>(k)], Rational(-1));
        }
        // eta * x_{n+1}/(n+1) * sum
        std::vector<Rational> raised(static_cast<size_t>(sum.degree()) + 2, Rational(0));
        Rational scale = m.x[static_cast<size_t>(n + 1)] / Rational(n + 1);
        for (int i = 0; i <= sum.degree(); ++i)
            raised[static_cast<size_t>(i) + 1] = sum.coeff(i) * scale;
        if (EtaPolynomial(std::move(raised)) != qf.q[static_cast<size_t>(n + 1)]) {
            report.all_match = false;
            report.first_failure = n + 1;
            return report;
        }
    }
    return report;
}

bool q_functional_check(const QFamily& qf, const Rational& z1, const Rational& z2) {
    const DeformedModel& m = qf.model;
    Rational z12 = z1 + z2;
    for (int n = 0; n <= qf.order(); ++n) {
        Rational lhs(0);
        for (int k = 0; k <= n; ++k)
            lhs += m.binomial_x(n, k) * poly_eval(qf.q[static_cast<size_t>(k)], z1) *
                   poly_eval(qf.q[static_cast<size_t>(n - k)], z2);
        if (lhs != poly_eval(qf.q[static_cast<size_t>(n)], z12)) return false;

        // binomial-type statement for qt_n = (n!/x_n!) q_n
        auto qt = [&](int i, const Rational& z) -> Rational {
            return factorial(static_cast<unsigned long>(i)) * m.invfact[static_cast<size_t>(i)] *
                   poly_eval(qf.q[static_cast<size_t>(i)], z);
        };
        Rational lhs_t(0);
        for (int k = 0; k <= n; ++k)
            lhs_t += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                     qt(k, z1) * qt(n - k, z2);
        if (lhs_t != qt(n, z12)) return false;
    }
    return true;
}

EtaPolynomial q_combinatorial_oracle(const DeformedModel& model, int n) {
    if (n > 10) throw std::domain_error("q_combinatorial_oracle: capped at n <= 10");
    if (n < 0 || n > model.order)
        throw std::invalid_argument("q_combinatorial_oracle: n out of range");
    if (n == 0) return EtaPolynomial::constant(Rational(1));

    // falling factorials ff[m] = eta(eta-1)...(eta-m+1)
    std::vector<EtaPolynomial> ff(static_cast<size_t>(n) + 1);
    ff[0] = EtaPolynomial::constant(Rational(1));
    for (int m = 1; m <= n; ++m)
        ff[static_cast<size_t>(m)] =
            ff[static_cast<size_t>(m - 1)] *
            EtaPolynomial({Rational(-(m - 1)), Rational(1)});

    EtaPolynomial total;
    // enumerate partitions of n: parts descending, weight prod (1/x_s!)^{i_s} / i_s!
    std::function<void(int, int, int, Rational)> walk =
        [&](int remaining, int max_part, int parts, Rational weight) {
            if (remaining == 0) {
                total += weight * ff[static_cast<size_t>(parts)];
                return;
            }
            for (int s = std::min(remaining, max_part); s >= 1; --s) {
                Rational w = weight;
                int used = 0;
                for (int rem = remaining - s; rem >= 0; rem -= s) {
                    ++used;
                    w *= model.invfact[static_cast<size_t>(s)] / used;
                    walk(rem, s - 1, parts + used, w);
                    if (rem == 0) break;
                }
            }
        };
    walk(n, n, 0, Rational(1));
    return model.xfact[static_cast<size_t>(n)] * total;
}

EtaPolynomial q_closed_form(const GeneratingFamily& fam, int n) {
    if (n < 0) throw std::invalid_argument("q_closed_form: negative index");
    if (n == 0) return EtaPolynomial::constant(Rational(1));
    if (std::holds_alternative<Exponential>(fam))
        return EtaPolynomial::monomial(Rational(1), n);
    if (const auto* q = std::get_if<QExponential>(&fam)) {
        // prod_{k=1..n} (alpha eta + k - 1) / (alpha + k - 1)
        EtaPolynomial num = EtaPolynomial::constant(Rational(1));
        for (int k = 1; k <= n; ++k)
            num = num * EtaPolynomial({Rational(k - 1), q->alpha});
        return num * (Rational(1) / pochhammer(q->alpha, static_cast<unsigned long>(n)));
    }
    if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        // eta (eta + n/alpha)^{n-1} / (1 + n/alpha)^{n-1}
        Rational shift = Rational(n) / ab->alpha;
        EtaPolynomial pw = EtaPolynomial::constant(Rational(1));
        for (int k = 1; k <= n - 1; ++k)
            pw = pw * EtaPolynomial({shift, Rational(1)});
        EtaPolynomial out = EtaPolynomial::monomial(Rational(1), 1) * pw;
        return out * (Rational(1) / pow_rational(Rational(1) + shift, n - 1));
    }
    if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        // eta^n phi_n(a/eta) expands to sum_m (a/2)^m eta^{n-m} / (m! (n-2m)!)
        std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
        for (int m = 0; 2 * m <= n; ++m)
            coeffs[static_cast<size_t>(n - m)] =
                pow_rational(h->a / 2, m) /
                (factorial(static_cast<unsigned long>(m)) *
                 factorial(static_cast<unsigned long>(n - 2 * m)));
        return EtaPolynomial(std::move(coeffs)) * (Rational(1) / hermite_phi(h->a, n));
    }
    throw std::invalid_argument("q_closed_form: no closed form for custom seeds");
}

bool dlog_identity_check(const QFamily& qf) {
    for (int n = 1; n <= qf.order(); ++n) {
        if (qf.q[static_cast<size_t>(n)].coeff(1) * qf.model.invfact[static_cast<size_t>(n)] !=
            qf.model.a[static_cast<size_t>(n)])
            return false;
    }
    return true;
}

}  // namespace defbin
