#pragma once

#include <optional>
#include <vector>

#include "defbin/qpoly.hpp"

namespace defbin {

// Probability table p_k = x_n!/(x_k! x_{n-k}!) q_k(eta) q_{n-k}(1-eta), k = 0..n.
// Exact tables carry rationals and their double images; float tables only doubles.
struct DistributionTable {
    int n = 0;
    bool exact = true;
    Rational eta;             // meaningful in exact mode
    double eta_f = 0.0;
    std::vector<Rational> p;  // exact mode only
    std::vector<double> p_f;
};

// Series route; requires n <= qf.order() and eta in [0,1].
DistributionTable pmf(const QFamily& qf, int n, const Rational& eta);

// Family closed forms, exact; must agree with pmf coefficient by coefficient.
DistributionTable pmf_closed(const GeneratingFamily& fam, int n, const Rational& eta);

// Log-domain evaluation for named families at large n; throws for CustomSeed.
DistributionTable pmf_float(const GeneratingFamily& fam, int n, double eta);

// ln p_k for named families at interior eta; the basis of pmf_float and of
// the large-n entropy and residual scans.
std::vector<double> log_pmf(const GeneratingFamily& fam, int n, double eta);

// Double evaluation of the exact machinery; works for any family, n <= order.
DistributionTable pmf_double(const QFamily& qf, int n, double eta);

struct MomentReport {
    int n = 0;
    Rational eta;
    Rational mean;
    Rational second_moment;
    Rational variance;
    Rational c_n;
};

MomentReport moments(const QFamily& qf, int n, const Rational& eta);

// c_n routes. All must agree exactly where defined:
//   c_n = sum_{m=1..n-1} m(n-m) x_n!/(x_m! x_{n-m}!) q_m'(0)     (sum over q')
//   c_n = x_n! [t^n] t^2 N'(t)^2 / N(t)                           (generating function)
//   family closed forms                                           (where known)
Rational cn_series_sum(const QFamily& qf, int n);
Rational cn_generating(const DeformedModel& model, int n);
std::optional<Rational> cn_closed(const GeneratingFamily& fam, int n);

// eta(1-eta)(n^2 - c_n); equals the direct second-moment computation.
Rational variance_formula(const QFamily& qf, int n, const Rational& eta);

// T_n(z) = n! sum_{k=0..n} (z+n)^k / k!
Rational t_polynomial(int n, const Rational& z);

// Hypergeometric distribution two ways: the counting formula
// C(m,k) C(N-m,n-k) / C(N,n) and the deformed machinery with
// x_i! = N^i / C(N,i) and q_i evaluated at eta = m/N.
struct HypergeomTables {
    int population = 0, successes = 0, draws = 0;
    std::vector<Rational> counting;
    std::vector<Rational> deformed;
};

HypergeomTables hypergeometric_embed(int N, int m, int n);

// Rescaled shape of the q-exp pmf at eta = 1/2 against the semicircle law.
// s_k = (k/n - 1/2)/scale with scale = 2 sqrt(Var(k/n)); mass is split
// linearly between the two nearest bin centers; the reference column is
// the per-bin average of (2/pi) sqrt(1-s^2).
struct WignerProbe {
    int n = 0;
    int bins = 0;
    double lo = -1.05, hi = 1.05;
    double scale = 0.0;
    std::vector<double> centers, density, reference;
    double sup_distance = 0.0;
};

WignerProbe wigner_limit_probe(const Rational& alpha, int n, int bins = 101);

double semicircle_density(double s);
// Integral of the semicircle density over [lo, hi].
double semicircle_mass(double lo, double hi);

// Float variance of the Hermite-Gauss model via the ratio recursion
// rho_{m+1} = (m+1)/(1 + a rho_m), usable far beyond exact-series orders.
double hermite_variance_float(double a, int n, double eta);

}  // namespace defbin
