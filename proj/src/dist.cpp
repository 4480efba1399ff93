#include "defbin/dist.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

namespace defbin {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_eta_range(const Rational& eta) {
    if (eta < 0 || eta > 1) throw std::invalid_argument("pmf: eta must lie in [0,1]");
}

void check_support(int n, int order) {
    if (n < 0) throw std::invalid_argument("pmf: negative n");
    if (n > order) throw std::invalid_argument("pmf: n exceeds the model order");
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

DistributionTable exact_table(int n, const Rational& eta, std::vector<Rational> p) {
    DistributionTable t;
    t.n = n;
    t.exact = true;
    t.eta = eta;
    t.eta_f = to_double(eta);
    t.p_f = to_doubles(p);
    t.p = std::move(p);
    return t;
}

std::vector<Rational> degenerate_row(int n, bool at_top) {
    std::vector<Rational> p(static_cast<size_t>(n) + 1, Rational(0));
    p[at_top ? static_cast<size_t>(n) : 0] = 1;
    return p;
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// lnphi[j] = ln phi_j(x) through the ratio recursion
// rho_1 = 1, rho_{m+1} = (m+1)/(1 + x rho_m), phi_j = 1/(rho_1 ... rho_j).
std::vector<double> log_phi_table(double x, int n) {
    std::vector<double> lnphi(static_cast<size_t>(n) + 1, 0.0);
    double rho = 1.0;
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) {
        if (m > 1) rho = m / (1.0 + x * rho);
        acc += std::log(rho);
        lnphi[static_cast<size_t>(m)] = -acc;
    }
    return lnphi;
}

}  // namespace

DistributionTable pmf(const QFamily& qf, int n, const Rational& eta) {
    check_support(n, qf.order());
    check_eta_range(eta);
    Rational bar = Rational(1) - eta;
    std::vector<Rational> p(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        p[static_cast<size_t>(k)] = qf.model.binomial_x(n, k) * poly_eval(qf.q[static_cast<size_t>(k)], eta) *
                                    poly_eval(qf.q[static_cast<size_t>(n - k)], bar);
    }
    return exact_table(n, eta, std::move(p));
}

DistributionTable pmf_closed(const GeneratingFamily& fam, int n, const Rational& eta) {
    if (n < 0) throw std::invalid_argument("pmf: negative n");
    check_eta_range(eta);
    if (n == 0) return exact_table(0, eta, {Rational(1)});
    if (eta == 0) return exact_table(n, eta, degenerate_row(n, false));
    if (eta == 1) return exact_table(n, eta, degenerate_row(n, true));

    Rational bar = Rational(1) - eta;
    std::vector<Rational> p(static_cast<size_t>(n) + 1);
    auto nn = static_cast<unsigned long>(n);

    if (std::holds_alternative<Exponential>(fam)) {
        for (int k = 0; k <= n; ++k) {
            p[static_cast<size_t>(k)] = binomial(nn, static_cast<unsigned long>(k)) *
                                        pow_rational(eta, k) * pow_rational(bar, n - k);
        }
    } else if (const auto* q = std::get_if<QExponential>(&fam)) {
        if (q->alpha <= 0) throw std::invalid_argument("pmf: alpha must be positive");
        Rational denom = pochhammer(q->alpha, nn);
        for (int k = 0; k <= n; ++k) {
            p[static_cast<size_t>(k)] = binomial(nn, static_cast<unsigned long>(k)) *
                                        pochhammer(q->alpha * eta, static_cast<unsigned long>(k)) *
                                        pochhammer(q->alpha * bar, static_cast<unsigned long>(n - k)) / denom;
        }
    } else if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        if (ab->alpha <= 0) throw std::invalid_argument("pmf: alpha must be positive");
        Rational denom = pow_rational(Rational(1) + Rational(n) / ab->alpha, n - 1);
        for (int k = 0; k <= n; ++k) {
            Rational left = pow_rational(eta + Rational(k) / ab->alpha, k - 1);
            Rational right = pow_rational(bar + Rational(n - k) / ab->alpha, n - k - 1);
            p[static_cast<size_t>(k)] = binomial(nn, static_cast<unsigned long>(k)) *
                                        eta * bar * left * right / denom;
        }
    } else if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        if (h->a <= 0 || h->a >= 1) throw std::invalid_argument("pmf: need 0 < a < 1");
        Rational denom = hermite_phi(h->a, n);
        for (int k = 0; k <= n; ++k) {
            // no ordinary binomial factor here: the phi products carry it
            p[static_cast<size_t>(k)] = pow_rational(eta, k) * pow_rational(bar, n - k) *
                                        hermite_phi(h->a / eta, k) *
                                        hermite_phi(h->a / bar, n - k) / denom;
        }
    } else {
        throw std::invalid_argument("pmf: no closed form for a custom seed");
    }
    return exact_table(n, eta, std::move(p));
}

std::vector<double> log_pmf(const GeneratingFamily& fam, int n, double eta) {
    if (n < 1) throw std::invalid_argument("pmf: log-domain evaluation needs n >= 1");
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("pmf: log-domain evaluation needs eta in (0,1)");

    double bar = 1.0 - eta;
    std::vector<double> lnp(static_cast<size_t>(n) + 1);

    if (std::holds_alternative<Exponential>(fam)) {
        for (int k = 0; k <= n; ++k) {
            lnp[static_cast<size_t>(k)] = log_binomial(n, k) + k * std::log(eta) + (n - k) * std::log(bar);
        }
    } else if (const auto* q = std::get_if<QExponential>(&fam)) {
        if (q->alpha <= 0) throw std::invalid_argument("pmf: alpha must be positive");
        double a = to_double(q->alpha);
        double la = a * eta, ra = a * bar;
        double tail = std::lgamma(a + n) - std::lgamma(a);
        for (int k = 0; k <= n; ++k) {
            lnp[static_cast<size_t>(k)] = log_binomial(n, k) + std::lgamma(la + k) - std::lgamma(la) +
                                          std::lgamma(ra + n - k) - std::lgamma(ra) - tail;
        }
    } else if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        if (ab->alpha <= 0) throw std::invalid_argument("pmf: alpha must be positive");
        double a = to_double(ab->alpha);
        double tail = (n - 1) * std::log(1.0 + n / a);
        for (int k = 0; k <= n; ++k) {
            lnp[static_cast<size_t>(k)] = log_binomial(n, k) + std::log(eta) + std::log(bar) +
                                          (k - 1) * std::log(eta + k / a) +
                                          (n - k - 1) * std::log(bar + (n - k) / a) - tail;
        }
    } else if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        if (h->a <= 0 || h->a >= 1) throw std::invalid_argument("pmf: need 0 < a < 1");
        double a = to_double(h->a);
        std::vector<double> left = log_phi_table(a / eta, n);
        std::vector<double> right = log_phi_table(a / bar, n);
        std::vector<double> mid = log_phi_table(a, n);
        for (int k = 0; k <= n; ++k) {
            lnp[static_cast<size_t>(k)] = k * std::log(eta) + (n - k) * std::log(bar) +
                                          left[static_cast<size_t>(k)] +
                                          right[static_cast<size_t>(n - k)] -
                                          mid[static_cast<size_t>(n)];
        }
    } else {
        throw std::invalid_argument("pmf: float evaluation requires a named family");
    }
    return lnp;
}

DistributionTable pmf_float(const GeneratingFamily& fam, int n, double eta) {
    if (n < 0) throw std::invalid_argument("pmf: negative n");
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("pmf: eta must lie in [0,1]");

    DistributionTable t;
    t.n = n;
    t.exact = false;
    t.eta_f = eta;
    t.p_f.assign(static_cast<size_t>(n) + 1, 0.0);
    if (n == 0) {
        t.p_f[0] = 1.0;
        return t;
    }
    if (eta == 0.0 || eta == 1.0) {
        t.p_f[eta == 1.0 ? static_cast<size_t>(n) : 0] = 1.0;
        return t;
    }
    std::vector<double> lnp = log_pmf(fam, n, eta);
    for (int k = 0; k <= n; ++k) t.p_f[static_cast<size_t>(k)] = std::exp(lnp[static_cast<size_t>(k)]);
    return t;
}

DistributionTable pmf_double(const QFamily& qf, int n, double eta) {
    check_support(n, qf.order());
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("pmf: eta must lie in [0,1]");
    DistributionTable t;
    t.n = n;
    t.exact = false;
    t.eta_f = eta;
    t.p_f.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        t.p_f[static_cast<size_t>(k)] = to_double(qf.model.binomial_x(n, k)) *
                                        poly_eval(qf.q[static_cast<size_t>(k)], eta) *
                                        poly_eval(qf.q[static_cast<size_t>(n - k)], 1.0 - eta);
    }
    return t;
}

MomentReport moments(const QFamily& qf, int n, const Rational& eta) {
    DistributionTable t = pmf(qf, n, eta);
    MomentReport r;
    r.n = n;
    r.eta = eta;
    Rational mean = 0, second = 0;
    for (int k = 0; k <= n; ++k) {
        mean += Rational(k) * t.p[static_cast<size_t>(k)];
        second += Rational(k) * Rational(k) * t.p[static_cast<size_t>(k)];
    }
    r.mean = mean;
    r.second_moment = second;
    r.variance = second - mean * mean;
    r.c_n = cn_series_sum(qf, n);
    return r;
}

Rational cn_series_sum(const QFamily& qf, int n) {
    check_support(n, qf.order());
    Rational c = 0;
    for (int m = 1; m < n; ++m) {
        c += Rational(m) * Rational(n - m) * qf.model.binomial_x(n, m) *
             qf.q[static_cast<size_t>(m)].coeff(1);
    }
    return c;
}

Rational cn_generating(const DeformedModel& model, int n) {
    check_support(n, model.order);
    if (n < 2) return Rational(0);
    PowerSeries f(model.a);
    PowerSeries nser(model.invfact);
    PowerSeries nprime = nser.derivative();
    PowerSeries prod = nprime * nprime * series_exp(Rational(-1) * f);
    return model.xfact[static_cast<size_t>(n)] * prod.coeff(n - 2);
}

std::optional<Rational> cn_closed(const GeneratingFamily& fam, int n) {
    if (n < 0) throw std::invalid_argument("c_n: negative n");
    Rational lead = Rational(n) * Rational(n - 1);
    if (std::holds_alternative<Exponential>(fam)) return lead;
    if (const auto* q = std::get_if<QExponential>(&fam)) return lead * q->alpha / (1 + q->alpha);
    if (const auto* ab = std::get_if<AbelLambert>(&fam)) {
        if (n < 2) return Rational(0);
        return lead * ab->alpha / pow_rational(ab->alpha + n, n - 1) *
               t_polynomial(n - 2, ab->alpha + 2);
    }
    if (const auto* h = std::get_if<HermiteGauss>(&fam)) {
        if (n < 2) return Rational(0);
        return lead - h->a * hermite_phi(h->a, n - 2) / hermite_phi(h->a, n);
    }
    return std::nullopt;
}

Rational variance_formula(const QFamily& qf, int n, const Rational& eta) {
    check_eta_range(eta);
    return eta * (Rational(1) - eta) * (Rational(n) * Rational(n) - cn_series_sum(qf, n));
}

Rational t_polynomial(int n, const Rational& z) {
    if (n < 0) throw std::invalid_argument("t_polynomial: negative index");
    Rational base = z + n;
    Rational term = 1, sum = 1;
    for (int k = 1; k <= n; ++k) {
        term = term * base / k;
        sum += term;
    }
    return factorial(static_cast<unsigned long>(n)) * sum;
}

HypergeomTables hypergeometric_embed(int N, int m, int n) {
    if (N < 1 || m < 0 || m > N || n < 0 || n > N)
        throw std::invalid_argument("hypergeometric: need 0 <= m <= N and 0 <= n <= N");
    HypergeomTables t;
    t.population = N;
    t.successes = m;
    t.draws = n;
    t.counting.resize(static_cast<size_t>(n) + 1);
    t.deformed.resize(static_cast<size_t>(n) + 1);
    auto C = [](int a, int b) { return binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)); };
    // x_i! = N^i / C(N,i); q_i at eta = p/N is C(p,i)/C(N,i)
    auto xf = [&](int i) -> Rational { return pow_rational(Rational(N), i) / C(N, i); };
    Rational total = C(N, n);
    for (int k = 0; k <= n; ++k) {
        t.counting[static_cast<size_t>(k)] = C(m, k) * C(N - m, n - k) / total;
        Rational weight = xf(n) / (xf(k) * xf(n - k));
        t.deformed[static_cast<size_t>(k)] = weight * (C(m, k) / C(N, k)) * (C(N - m, n - k) / C(N, n - k));
    }
    return t;
}

double semicircle_density(double s) {
    double u = 1.0 - s * s;
    return u <= 0.0 ? 0.0 : (2.0 / kPi) * std::sqrt(u);
}

namespace {

// integral of the semicircle density over (-inf, s]
double semicircle_cdf(double s) {
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return (s * std::sqrt(1.0 - s * s) + std::asin(s)) / kPi + 0.5;
}

}  // namespace

double semicircle_mass(double lo, double hi) { return semicircle_cdf(hi) - semicircle_cdf(lo); }

WignerProbe wigner_limit_probe(const Rational& alpha, int n, int bins) {
    if (alpha <= 0) throw std::invalid_argument("wigner probe: alpha must be positive");
    if (n < 2) throw std::invalid_argument("wigner probe: need n >= 2");
    if (bins < 3) throw std::invalid_argument("wigner probe: need at least 3 bins");

    WignerProbe w;
    w.n = n;
    w.bins = bins;
    double ad = to_double(alpha);
    double nd = static_cast<double>(n);
    double cn = nd * (nd - 1.0) * ad / (1.0 + ad);
    w.scale = 2.0 * std::sqrt(0.25 * (nd * nd - cn)) / nd;

    DistributionTable t = pmf_float(QExponential{alpha}, n, 0.5);

    double h = (w.hi - w.lo) / bins;
    w.centers.resize(static_cast<size_t>(bins));
    w.density.assign(static_cast<size_t>(bins), 0.0);
    w.reference.resize(static_cast<size_t>(bins));
    for (int b = 0; b < bins; ++b) w.centers[static_cast<size_t>(b)] = w.lo + (b + 0.5) * h;

    for (int k = 0; k <= n; ++k) {
        double s = (static_cast<double>(k) / nd - 0.5) / w.scale;
        // split the atom linearly between the two nearest bin centers
        double pos = (s - w.lo) / h - 0.5;
        double base = std::floor(pos);
        double frac = pos - base;
        int i0 = static_cast<int>(base);
        if (i0 >= 0 && i0 < bins) w.density[static_cast<size_t>(i0)] += (1.0 - frac) * t.p_f[static_cast<size_t>(k)];
        if (i0 + 1 >= 0 && i0 + 1 < bins) w.density[static_cast<size_t>(i0 + 1)] += frac * t.p_f[static_cast<size_t>(k)];
    }

    double sup = 0.0;
    for (int b = 0; b < bins; ++b) {
        w.density[static_cast<size_t>(b)] /= h;
        double left = w.lo + b * h;
        w.reference[static_cast<size_t>(b)] = semicircle_mass(left, left + h) / h;
        sup = std::max(sup, std::abs(w.density[static_cast<size_t>(b)] - w.reference[static_cast<size_t>(b)]));
    }
    w.sup_distance = sup;
    return w;
}

double hermite_variance_float(double a, int n, double eta) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("hermite variance: need 0 < a < 1");
    if (n < 1) throw std::invalid_argument("hermite variance: need n >= 1");
    double rho_prev = 0.0, rho = 1.0;
    for (int m = 1; m < n; ++m) {
        double next = (m + 1) / (1.0 + a * rho);
        rho_prev = rho;
        rho = next;
    }
    double correction = n >= 2 ? (a / n) * rho_prev * rho : 0.0;
    return n * eta * (1.0 - eta) * (1.0 + correction);
}

}  // namespace defbin
