#include "defbin/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace defbin {

namespace {

// compensated accumulation; the scans add hundreds of same-sign terms
struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_q(double q) {
    if (q == 1.0) throw std::invalid_argument("tsallis: q == 1 is the Boltzmann-Gibbs case");
    if (!(q > 0.0)) throw std::invalid_argument("tsallis: q must be positive");
}

// entropies of one row given ln p_k, k = 0..n
double bg_from_logs(const std::vector<double>& lnp, int n) {
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        double lp = lnp[static_cast<size_t>(k)];
        double p = std::exp(lp);
        if (p == 0.0) continue;
        s.add(-p * (lp - log_choose(n, k)));
    }
    return s.sum;
}

double tsallis_from_logs(const std::vector<double>& lnp, int n, double q) {
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        s.add(std::exp(q * lnp[static_cast<size_t>(k)] - (q - 1.0) * log_choose(n, k)));
    }
    return (1.0 - s.sum) / (q - 1.0);
}

std::vector<double> log_row(const DistributionTable& t) {
    std::vector<double> lnp(t.p_f.size());
    for (size_t k = 0; k < t.p_f.size(); ++k) {
        lnp[k] = t.p_f[k] > 0.0 ? std::log(t.p_f[k]) : -std::numeric_limits<double>::infinity();
    }
    return lnp;
}

}  // namespace

double bg_entropy(const QFamily& qf, int n, const Rational& eta) {
    DistributionTable t = pmf(qf, n, eta);
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const Rational& p = t.p[static_cast<size_t>(k)];
        if (p == 0) continue;
        Rational w = p / binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        s.add(-to_double(p) * std::log(to_double(w)));
    }
    return s.sum;
}

double tsallis_entropy(const QFamily& qf, int n, const Rational& eta, double q) {
    check_q(q);
    DistributionTable t = pmf(qf, n, eta);
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const Rational& p = t.p[static_cast<size_t>(k)];
        if (p == 0) continue;
        Rational c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        s.add(to_double(c) * std::pow(to_double(p / c), q));
    }
    return (1.0 - s.sum) / (q - 1.0);
}

EntropyScan entropy_scan(const GeneratingFamily& fam, double eta, int n_lo, int n_hi,
                         const std::vector<double>& q_values) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("entropy scan: eta must lie in (0,1)");
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("entropy scan: need 1 <= n_lo <= n_hi");
    for (double q : q_values) check_q(q);

    EntropyScan scan;
    scan.family = family_name(fam);
    scan.eta = eta;
    scan.q_values = q_values;

    QFamily qf;
    const bool custom = std::holds_alternative<CustomSeed>(fam);
    if (custom) qf = q_polynomials(build_model(fam, n_hi));

    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<double> lnp = custom ? log_row(pmf_double(qf, n, eta)) : log_pmf(fam, n, eta);
        scan.n.push_back(n);
        scan.bg.push_back(bg_from_logs(lnp, n));
        std::vector<double> row;
        row.reserve(q_values.size());
        for (double q : q_values) row.push_back(tsallis_from_logs(lnp, n, q));
        scan.tsallis.push_back(std::move(row));
    }

    // least-squares line of S_BG over the window
    scan.fit_lo = std::max(n_lo, 50);
    scan.fit_hi = std::min(n_hi, 200);
    size_t inside = 0;
    for (int v : scan.n)
        if (v >= scan.fit_lo && v <= scan.fit_hi) ++inside;
    if (inside < 3) {
        scan.fit_lo = n_lo;
        scan.fit_hi = n_hi;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
    for (size_t i = 0; i < scan.n.size(); ++i) {
        if (scan.n[i] < scan.fit_lo || scan.n[i] > scan.fit_hi) continue;
        double x = scan.n[i], y = scan.bg[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        m += 1;
    }
    if (m >= 2) {
        double det = m * sxx - sx * sx;
        scan.slope = (m * sxy - sx * sy) / det;
        scan.intercept = (sy * sxx - sx * sxy) / det;
        double ss_res = 0, ss_tot = 0, mean = sy / m;
        for (size_t i = 0; i < scan.n.size(); ++i) {
            if (scan.n[i] < scan.fit_lo || scan.n[i] > scan.fit_hi) continue;
            double y = scan.bg[i];
            double fit = scan.slope * scan.n[i] + scan.intercept;
            ss_res += (y - fit) * (y - fit);
            ss_tot += (y - mean) * (y - mean);
        }
        scan.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    }

    // centered second differences of each S_q curve past curvature_from
    scan.min_second_difference.assign(q_values.size(), 0.0);
    scan.max_second_difference.assign(q_values.size(), 0.0);
    for (size_t j = 0; j < q_values.size(); ++j) {
        bool seen = false;
        for (size_t i = 1; i + 1 < scan.n.size(); ++i) {
            if (scan.n[i] <= scan.curvature_from) continue;
            double d2 = scan.tsallis[i + 1][j] - 2.0 * scan.tsallis[i][j] + scan.tsallis[i - 1][j];
            if (!seen || d2 < scan.min_second_difference[j]) scan.min_second_difference[j] = d2;
            if (!seen || d2 > scan.max_second_difference[j]) scan.max_second_difference[j] = d2;
            seen = true;
        }
    }
    return scan;
}

}  // namespace defbin
