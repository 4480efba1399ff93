#include "defbin/coherent.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

namespace defbin {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 2.718281828459045235;

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on P_m.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<size_t>(m), 0.0);
    w.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
        double p1 = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[static_cast<size_t>(m - 1 - i)] = t;
        x[static_cast<size_t>(i)] = -t;
        w[static_cast<size_t>(i)] = w[static_cast<size_t>(m - 1 - i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// integral_0^upper e^{-u} p(u) du, composite 16-point panels
double quad_exp_poly(const EtaPolynomial& p, double upper) {
    std::vector<double> x, w;
    gauss_legendre(16, x, w);
    int panels = static_cast<int>(std::ceil(upper / 2.0));
    double h = upper / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double a = i * h;
        for (size_t t = 0; t < x.size(); ++t) {
            double u = a + h * (x[t] + 1.0) / 2.0;
            total += w[t] * (h / 2.0) * std::exp(-u) * poly_eval(p, u);
        }
    }
    return total;
}

// integral_0^inf e^{-u} p(u) du by parts: I(p) = p(0) + I(p')
Rational exponential_moment(EtaPolynomial p) {
    Rational total(0);
    while (true) {
        total += p.coeff(0);
        if (p.degree() == 0) break;
        p = p.derivative();
    }
    return total;
}

bool custom_tail_certified(const DeformedModel& m, std::string& note) {
    // root test on the upper half of the truncated seed
    int last_nonzero = 0;
    for (int n = 2; n <= m.order; ++n)
        if (m.a[static_cast<size_t>(n)] > 0) last_nonzero = n;
    if (last_nonzero == 0) {
        note = "seed has finitely many nonzero coefficients";
        return true;
    }
    double worst = 0.0;
    for (int n = std::max(2, m.order / 2); n <= m.order; ++n) {
        const Rational& an = m.a[static_cast<size_t>(n)];
        if (an > 0) worst = std::max(worst, std::pow(to_double(an), 1.0 / n));
    }
    if (worst < 0.99) {
        note = "root test on the truncated tail stays below 1 (heuristic)";
        return true;
    }
    note = "root test on the truncated tail reaches " + std::to_string(worst);
    return false;
}

}  // namespace

Sigma1Report sigma1_restrict(const DeformedModel& model) {
    if (model.order < 1 || model.a.size() < 2 || model.a[1] <= 0)
        throw std::invalid_argument("sigma1: seed must have a_1 > 0");

    Sigma1Report rep;
    if (!std::holds_alternative<CustomSeed>(model.family)) {
        rep.model = model;
        if (std::holds_alternative<Exponential>(model.family) ||
            std::holds_alternative<HermiteGauss>(model.family)) {
            rep.tail_certified = true;
            rep.note = "seed has finitely many nonzero coefficients";
        } else if (const auto* q = std::get_if<QExponential>(&model.family)) {
            rep.tail_certified = q->alpha > 1;
            rep.note = rep.tail_certified
                           ? "coefficient sum dominated by a geometric series of ratio 1/alpha"
                           : "coefficient sum diverges for alpha <= 1 (harmonic at alpha = 1)";
        } else if (const auto* ab = std::get_if<AbelLambert>(&model.family)) {
            rep.tail_certified = to_double(ab->alpha) > kEuler;
            rep.note = rep.tail_certified
                           ? "coefficient ratio tends to e/alpha < 1"
                           : "coefficient ratio tends to e/alpha >= 1";
        }
        return rep;
    }

    const Rational& a1 = model.a[1];
    double bound = 0.0;
    for (int n = 2; n <= model.order; ++n) {
        const Rational& an = model.a[static_cast<size_t>(n)];
        if (an > 0) bound = std::max(bound, std::pow(to_double(an / a1), 1.0 / (n - 1)));
    }
    if (!std::isfinite(bound))
        throw std::invalid_argument("sigma1: seed coefficients overflow the rescale estimate");
    Rational lambda(1);
    while (to_double(lambda) <= 2.0 * bound) lambda *= 2;

    if (a1 == 1 && lambda == 1) {
        rep.model = model;
    } else {
        std::vector<Rational> scaled(model.a.size(), Rational(0));
        Rational power(1);  // lambda^{n-1}
        for (int n = 1; n <= model.order; ++n) {
            scaled[static_cast<size_t>(n)] = model.a[static_cast<size_t>(n)] / (a1 * power);
            power *= lambda;
        }
        rep.model = build_model(CustomSeed{std::move(scaled)}, model.order);
        rep.rescaled = true;
        rep.lambda = lambda;
    }
    rep.tail_certified = custom_tail_certified(rep.model, rep.note);
    return rep;
}

std::vector<Rational> deformed_factorial(const QFamily& qf) {
    std::vector<Rational> f(static_cast<size_t>(qf.order()) + 1);
    for (int n = 0; n <= qf.order(); ++n) {
        const auto& c = qf.q[static_cast<size_t>(n)].coeffs();
        Rational total(0);
        for (size_t i = 0; i < c.size(); ++i) total += c[i] * factorial(static_cast<unsigned long>(i));
        f[static_cast<size_t>(n)] = total;
    }
    return f;
}

Rational deformed_beta(const QFamily& qf, int m, int n) {
    if (m < 0 || n < 0 || m + n > qf.order())
        throw std::invalid_argument("deformed beta: need m, n >= 0 with m + n <= order");
    const auto& c = qf.q[static_cast<size_t>(m)].coeffs();
    const auto& d = qf.q[static_cast<size_t>(n)].coeffs();
    Rational total(0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < d.size(); ++j) {
            if (d[j] == 0) continue;
            total += c[i] * d[j] * factorial(static_cast<unsigned long>(i)) *
                     factorial(static_cast<unsigned long>(j)) /
                     factorial(static_cast<unsigned long>(i + j + 1));
        }
    }
    return total;
}

const Rational& CoherentData::beta(int m, int n) const {
    if (m < 0 || n < 0 || m + n > order())
        throw std::invalid_argument("deformed beta: need m, n >= 0 with m + n <= order");
    return b[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

CoherentData make_coherent_data(const QFamily& qf) {
    if (qf.model.order < 1 || qf.model.a[1] != 1)
        throw std::invalid_argument("coherent data: seed must have a_1 = 1; apply sigma1_restrict first");
    CoherentData data;
    data.qf = qf;
    data.f = deformed_factorial(qf);
    int order = qf.order();
    data.b.resize(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) data.b[static_cast<size_t>(m)].resize(static_cast<size_t>(order - m) + 1);
    for (int m = 0; m <= order; ++m) {
        for (int n = m; m + n <= order; ++n) {
            Rational v = deformed_beta(qf, m, n);
            data.b[static_cast<size_t>(m)][static_cast<size_t>(n)] = v;
            data.b[static_cast<size_t>(n)][static_cast<size_t>(m)] = v;
        }
    }
    return data;
}

NormalizationResult normalization_N(const CoherentData& data, double u, double tol) {
    if (!(u >= 0.0)) throw std::invalid_argument("normalization: u must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("normalization: tol must be positive");

    NormalizationResult res;
    double prev_term = 0.0;
    std::vector<double> ratios;
    for (int n = 0; n <= data.order(); ++n) {
        double term = poly_eval(data.qf.q[static_cast<size_t>(n)], u) / to_double(data.f[static_cast<size_t>(n)]);
        res.value += term;
        res.terms = n + 1;
        if (n >= 1) {
            if (term == 0.0) {
                res.tail_bound = 0.0;
                res.converged = true;
                res.note = "series terminated";
                return res;
            }
            ratios.push_back(term / prev_term);
            if (ratios.size() >= 3) {
                double worst = 0.0;
                for (size_t i = ratios.size() - 3; i < ratios.size(); ++i) worst = std::max(worst, ratios[i]);
                if (worst < 1.0) {
                    double tail = 2.0 * term * worst / (1.0 - worst);
                    if (tail < tol) {
                        res.tail_bound = tail;
                        res.converged = true;
                        res.note = "geometric tail estimate below tolerance";
                        return res;
                    }
                    res.tail_bound = tail;
                }
            }
        }
        prev_term = term;
    }
    res.converged = false;
    res.note = "truncation order exhausted before the tail estimate met the tolerance";
    return res;
}

PlaneFrameReport plane_cs_frame_check(const CoherentData& data, int nmax) {
    if (nmax < 0 || nmax > data.order())
        throw std::invalid_argument("plane frame check: nmax must lie in [0, order]");
    PlaneFrameReport rep;
    rep.nmax = nmax;
    for (int n = 0; n <= nmax; ++n) {
        const EtaPolynomial& q = data.qf.q[static_cast<size_t>(n)];
        if (exponential_moment(q) != data.f[static_cast<size_t>(n)]) {
            rep.exact_ok = false;
            if (rep.first_failure < 0) rep.first_failure = n;
        }
        double upper = std::max(100.0, 10.0 * q.degree());
        double quad = quad_exp_poly(q, upper);
        double exact = to_double(data.f[static_cast<size_t>(n)]);
        rep.max_rel_quadrature_error = std::max(rep.max_rel_quadrature_error,
                                                std::abs(quad - exact) / exact);
    }
    return rep;
}

SpinCSVector spin_cs(const CoherentData& data, int twoj, double theta, double phi) {
    if (twoj < 0 || twoj > data.order())
        throw std::invalid_argument("spin cs: need 0 <= 2j <= order");
    if (!(theta >= 0.0 && theta <= kPi)) throw std::invalid_argument("spin cs: theta must lie in [0,pi]");
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw std::invalid_argument("spin cs: phi must lie in [0,2pi)");

    SpinCSVector v;
    v.twoj = twoj;
    v.theta = theta;
    v.phi = phi;
    double s = std::sin(theta / 2.0);
    double c = std::cos(theta / 2.0);
    double su = s * s, cu = c * c;

    std::vector<double> raw(static_cast<size_t>(twoj) + 1);
    double weight = 0.0;
    for (int i = 0; i <= twoj; ++i) {
        raw[static_cast<size_t>(i)] = poly_eval(data.qf.q[static_cast<size_t>(twoj - i)], cu) *
                                      poly_eval(data.qf.q[static_cast<size_t>(i)], su) /
                                      to_double(data.beta(twoj - i, i));
        weight += raw[static_cast<size_t>(i)];
    }
    v.weight = weight;
    v.modulus.resize(static_cast<size_t>(twoj) + 1);
    v.phase.resize(static_cast<size_t>(twoj) + 1);
    double j = twoj / 2.0;
    for (int i = 0; i <= twoj; ++i) {
        v.modulus[static_cast<size_t>(i)] = std::sqrt(raw[static_cast<size_t>(i)] / weight);
        v.phase[static_cast<size_t>(i)] = (i - j) * phi;
    }
    return v;
}

SpinResolutionReport spin_resolution_check(const CoherentData& data, int twoj) {
    if (twoj < 0 || twoj > data.order())
        throw std::invalid_argument("spin resolution: need 0 <= 2j <= order");
    SpinResolutionReport rep;
    rep.twoj = twoj;

    // exact diagonal identity through an independent integration route
    for (int i = 0; i <= twoj; ++i) {
        EtaPolynomial prod = poly_reflect(data.qf.q[static_cast<size_t>(twoj - i)]) * data.qf.q[static_cast<size_t>(i)];
        if (poly_integral_unit(prod) != data.beta(twoj - i, i)) {
            rep.exact_ok = false;
            if (rep.first_failure < 0) rep.first_failure = i;
        }
    }

    // float frame operator: (1/4pi) int sin(t) dt dphi of the weighted dyad
    std::vector<double> x, w;
    gauss_legendre(twoj + 4, x, w);
    std::vector<std::vector<double>> g(static_cast<size_t>(twoj) + 1, std::vector<double>(x.size()));
    for (size_t t = 0; t < x.size(); ++t) {
        double u = (x[t] + 1.0) / 2.0;  // u = sin^2(theta/2)
        for (int i = 0; i <= twoj; ++i) {
            double val = poly_eval(data.qf.q[static_cast<size_t>(twoj - i)], 1.0 - u) *
                         poly_eval(data.qf.q[static_cast<size_t>(i)], u) /
                         to_double(data.beta(twoj - i, i));
            g[static_cast<size_t>(i)][t] = std::sqrt(std::max(val, 0.0));
        }
    }

    const int phi_samples = 64;
    for (int i = 0; i <= twoj; ++i) {
        for (int i2 = 0; i2 <= twoj; ++i2) {
            // theta part: integral_0^1 g_i g_i2 du; with the phi average this
            // already carries the whole (1/4pi) sin(t) dt dphi measure
            double radial = 0.0;
            for (size_t t = 0; t < x.size(); ++t)
                radial += w[t] * 0.5 * g[static_cast<size_t>(i)][t] * g[static_cast<size_t>(i2)][t];
            // phi part: (1/2pi) int e^{i (m - m') phi} dphi via trapezoid
            std::complex<double> angular(0.0, 0.0);
            for (int tphi = 0; tphi < phi_samples; ++tphi) {
                double ph = 2.0 * kPi * tphi / phi_samples;
                angular += std::exp(std::complex<double>(0.0, (i - i2) * ph));
            }
            angular /= static_cast<double>(phi_samples);
            double entry = std::abs(angular) * radial;
            if (i == i2) {
                rep.max_diag_error = std::max(rep.max_diag_error, std::abs(entry - 1.0));
            } else {
                rep.max_offdiag = std::max(rep.max_offdiag, entry);
            }
        }
    }
    return rep;
}

}  // namespace defbin
