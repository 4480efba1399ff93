#pragma once

#include <string>
#include <vector>

#include "defbin/qpoly.hpp"

namespace defbin {

// Rescaling into the unit-leading-coefficient summable seed class via
// F0(t) = lambda F(t/lambda) / a_1, with lambda the smallest power of two
// exceeding twice the largest observed (a_n/a_1)^{1/(n-1)}. Named families
// already have a_1 = 1 and pass through unchanged. tail_certified reports
// whether the seed coefficient sum is known (named families, by analysis)
// or estimated (custom seeds, root test on the truncated tail) to converge.
struct Sigma1Report {
    bool rescaled = false;
    Rational lambda = Rational(1);
    bool tail_certified = false;
    std::string note;
    DeformedModel model;
};

Sigma1Report sigma1_restrict(const DeformedModel& model);

// f_n = integral_0^inf q_n(eta) e^{-eta} deta = sum_i coeff_i(q_n) * i!.
std::vector<Rational> deformed_factorial(const QFamily& qf);

// b_{m,n} = integral_0^1 q_m(eta) q_n(1-eta) deta
//         = sum_{i,j} c_i d_j * i! j! / (i+j+1)!.
Rational deformed_beta(const QFamily& qf, int m, int n);

// f_n for n <= order plus the full b_{m,n} table for m+n <= order.
// Requires a_1 = 1 (the regime in which f_n >= x_n! and the beta lower
// bound hold); apply sigma1_restrict first otherwise.
struct CoherentData {
    QFamily qf;
    std::vector<Rational> f;
    std::vector<std::vector<Rational>> b;  // b[m][n], valid for m+n <= order

    int order() const { return qf.order(); }
    const Rational& beta(int m, int n) const;
};

CoherentData make_coherent_data(const QFamily& qf);

// Partial sums of N(u) = sum_n q_n(u)/f_n with a geometric tail estimate
// from the trailing term ratios. value + tail_bound is an upper bracket
// for every longer partial sum reachable within the truncation order.
struct NormalizationResult {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
    bool converged = false;
    std::string note;
};

NormalizationResult normalization_N(const CoherentData& data, double u, double tol);

// Diagonal frame identity behind the plane-wave resolution of unity:
// integral_0^inf e^{-u} q_n(u) du == f_n, exactly via the integration by
// parts recursion I(p) = p(0) + I(p'), and in float via composite
// Gauss-Legendre quadrature (relative agreement recorded per n).
struct PlaneFrameReport {
    int nmax = 0;
    bool exact_ok = true;
    int first_failure = -1;
    double max_rel_quadrature_error = 0.0;
};

PlaneFrameReport plane_cs_frame_check(const CoherentData& data, int nmax);

// Spin coherent state at (theta, phi) for spin j = twoj/2. Amplitudes are
// kept as (modulus, phase); index i corresponds to m = i - j, so
// amplitude_i = sqrt(q_{2j-i}(cos^2 t/2) q_i(sin^2 t/2) / b_{2j-i,i})
//               * e^{i m phi} / sqrt(weight).
struct SpinCSVector {
    int twoj = 0;
    double theta = 0.0, phi = 0.0;
    std::vector<double> modulus;
    std::vector<double> phase;
    double weight = 0.0;
};

SpinCSVector spin_cs(const CoherentData& data, int twoj, double theta, double phi);

// Resolution of unity for the spin family: exactly, each diagonal frame
// matrix element reduces to integral_0^1 q_{2j-i}(1-u) q_i(u) du == b_{2j-i,i}
// (checked through independent polynomial reflection/integration); in float,
// the full frame operator (1/4pi) integral sin(t) dt dphi weight |tp><tp|
// is quadratured and compared against the identity.
struct SpinResolutionReport {
    int twoj = 0;
    bool exact_ok = true;
    int first_failure = -1;  // index i = j + m of the first exact mismatch
    double max_diag_error = 0.0;
    double max_offdiag = 0.0;
};

SpinResolutionReport spin_resolution_check(const CoherentData& data, int twoj);

}  // namespace defbin
