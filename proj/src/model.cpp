#include "defbin/model.hpp"

#include <stdexcept>

namespace defbin {

std::string family_name(const GeneratingFamily& fam) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Exponential>) return "exponential";
            else if constexpr (std::is_same_v<T, QExponential>) return "qexp";
            else if constexpr (std::is_same_v<T, AbelLambert>) return "abel";
            else if constexpr (std::is_same_v<T, HermiteGauss>) return "hermite";
            else return "custom";
        },
        fam);
}

SeedCheck sigma0_check(const PowerSeries& seed) {
    SeedCheck out;
    if (seed.order() < 1 || seed.coeff(1) <= 0) {
        out.accepted = false;
        out.first_offending_index = 1;
        out.reason = "leading coefficient a_1 must be positive";
        return out;
    }
    for (int n = 2; n <= seed.order(); ++n) {
        if (seed.coeff(n) < 0) {
            out.accepted = false;
            out.first_offending_index = n;
            out.reason = "coefficient a_" + std::to_string(n) + " is negative";
            return out;
        }
    }
    return out;
}

namespace {

void validate_parameters(const GeneratingFamily& fam) {
    if (const auto* q = std::get_if<QExponential>(&fam)) {
        if (q->alpha <= 0) throw std::invalid_argument("qexp: alpha must be positive");
    } else if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        if (ab->alpha <= 0) throw std::invalid_argument("abel: alpha must be positive");
    } else if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        if (h->a <= 0 || h->a >= 1)
            throw std::invalid_argument("hermite: parameter must lie in (0,1)");
    }
}

}  // namespace

PowerSeries seed_series(const GeneratingFamily& fam, int order) {
    if (order < 1) throw std::invalid_argument("seed_series: order must be >= 1");
    PowerSeries f(order);
    if (std::holds_alternative<Exponential>(fam)) {
        f.set_coeff(1, Rational(1));
    } else if (const auto* q = std::get_if<QExponential>(&fam)) {
        // a_n = 1/(n alpha^{n-1})
        for (int n = 1; n <= order; ++n)
            f.set_coeff(n, Rational(1) / (Rational(n) * pow_rational(q->alpha, n - 1)));
    } else if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        // a_n = n^{n-1} / (alpha^{n-1} n!)
        for (int n = 1; n <= order; ++n)
            f.set_coeff(n, pow_rational(Rational(n), n - 1) /
                               (pow_rational(ab->alpha, n - 1) * factorial(n)));
    } else if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        f.set_coeff(1, Rational(1));
        if (order >= 2) f.set_coeff(2, h->a / 2);
    } else {
        const auto& a = std::get<CustomSeed>(fam).a;
        if (!a.empty() && a[0] != 0)
            throw std::invalid_argument("seed_series: custom seed must have zero constant term");
        for (int n = 1; n <= order && n < static_cast<int>(a.size()); ++n)
            f.set_coeff(n, a[static_cast<size_t>(n)]);
    }
    return f;
}

Rational DeformedModel::binomial_x(int n, int k) const {
    if (k < 0 || k > n || n > order) throw std::invalid_argument("binomial_x: bad indices");
    return invfact[static_cast<size_t>(k)] * invfact[static_cast<size_t>(n - k)] /
           invfact[static_cast<size_t>(n)];
}

DeformedModel build_model(const GeneratingFamily& fam, int order) {
    validate_parameters(fam);
    PowerSeries seed = seed_series(fam, order);
    SeedCheck check = sigma0_check(seed);
    if (!check.accepted)
        throw std::invalid_argument("seed rejected: " + check.reason);

    DeformedModel m;
    m.family = fam;
    m.order = order;
    m.a = seed.coeffs();

    PowerSeries gen = series_exp(seed);
    m.invfact = gen.coeffs();
    m.xfact.resize(m.invfact.size());
    m.x.resize(m.invfact.size());
    m.x[0] = Rational(0);
    m.xfact[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        m.xfact[static_cast<size_t>(n)] = Rational(1) / m.invfact[static_cast<size_t>(n)];
        m.x[static_cast<size_t>(n)] =
            m.invfact[static_cast<size_t>(n - 1)] / m.invfact[static_cast<size_t>(n)];
    }
    return m;
}

Rational qexp_xfact(const Rational& alpha, int n) {
    return pow_rational(alpha, n) * factorial(static_cast<unsigned long>(n)) /
           pochhammer(alpha, static_cast<unsigned long>(n));
}

Rational abel_xfact(const Rational& alpha, int n) {
    return factorial(static_cast<unsigned long>(n)) * pow_rational(alpha, n - 1) /
           pow_rational(Rational(n) + alpha, n - 1);
}

Rational hermite_phi(const Rational& a, int n) {
    Rational acc(0);
    for (int m = 0; 2 * m <= n; ++m)
        acc += pow_rational(a / 2, m) /
               (factorial(static_cast<unsigned long>(m)) *
                factorial(static_cast<unsigned long>(n - 2 * m)));
    return acc;
}

Rational closed_form_xfact(const GeneratingFamily& fam, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_xfact: negative index");
    if (std::holds_alternative<Exponential>(fam)) return factorial(static_cast<unsigned long>(n));
    if (const auto* q = std::get_if<QExponential>(&fam)) return qexp_xfact(q->alpha, n);
    if (const auto* ab = std::get_if<AbelLambert>(&fam)) return abel_xfact(ab->alpha, n);
    if (const auto* h = std::get_if<HermiteGauss>(&fam)) return Rational(1) / hermite_phi(h->a, n);
    throw std::invalid_argument("closed_form_xfact: no closed form for custom seeds");
}

ScaleCheck log_scale_invariance_check(const GeneratingFamily& fam, const Rational& eta, int n) {
    if (eta <= 0 || eta > 1)
        throw std::invalid_argument("log_scale_invariance_check: eta must lie in (0,1]");
    if (n < 1) throw std::invalid_argument("log_scale_invariance_check: n must be >= 1");
    if (std::holds_alternative<CustomSeed>(fam)) return ScaleCheck::not_applicable;

    DeformedModel m = build_model(fam, n);
    EtaPowerSeries c = series_exp_eta(PowerSeries(m.a));
    Rational lhs = m.xfact[static_cast<size_t>(n)] * poly_eval(c.c[static_cast<size_t>(n)], eta);

    Rational rhs;
    if (std::holds_alternative<Exponential>(fam)) {
        rhs = pow_rational(eta, n);
    } else if (const auto* q = std::get_if<QExponential>(&fam)) {
        rhs = pow_rational(eta, n) * qexp_xfact(q->alpha, n) / qexp_xfact(eta * q->alpha, n);
    } else if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        rhs = pow_rational(eta, n) * abel_xfact(ab->alpha, n) / abel_xfact(eta * ab->alpha, n);
    } else {
        const auto& h = std::get<HermiteGauss>(fam);
        Rational scaled = h.a / eta;
        if (scaled > 1) return ScaleCheck::not_applicable;
        rhs = pow_rational(eta, n) * hermite_phi(scaled, n) / hermite_phi(h.a, n);
    }
    return lhs == rhs ? ScaleCheck::holds : ScaleCheck::fails;
}

}  // namespace defbin
