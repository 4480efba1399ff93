#pragma once

#include <string>
#include <vector>

#include "defbin/dist.hpp"

namespace defbin {

// varpi_k^(n) = p_k^(n)(eta) / C(n,k).
std::vector<Rational> varpi(const QFamily& qf, int n, const Rational& eta);

// Rows n = 1..nmax of max_k |varpi_k^(n-1) - varpi_k^(n) - varpi_{k+1}^(n)|,
// the deviation from the triangle rule relating consecutive rows.
struct LeibnizReport {
    std::string family;
    Rational eta;
    std::vector<int> n;
    std::vector<Rational> residual;
    std::vector<bool> exact_zero;  // residual identically zero, row by row
    bool all_exact_zero = true;
};

LeibnizReport leibniz_residuals(const QFamily& qf, int nmax, const Rational& eta);

// Same residuals in double arithmetic; named families reach beyond the
// exact truncation order through the log-domain pmf.
struct LeibnizFloatReport {
    std::string family;
    double eta = 0.0;
    std::vector<int> n;
    std::vector<double> residual;
};

LeibnizFloatReport leibniz_residuals_float(const GeneratingFamily& fam, int nmax, double eta);

// The q-exponential family is the unique one obeying the triangle rule
// exactly. Verifies, for the given alpha and all n <= nmax:
//   (i) prod_{k=1..n} (alpha eta + k - 1)/(alpha + k - 1) == q_n,
//  (ii) y_n = x_n/n == alpha/(n + alpha - 1),
// (iii) the recurrence solution prod_{k=1..n} (1 + (y_k/y_1)(eta - 1)),
//       rebuilt from the y_n alone, reproduces (i),
//  (iv) Z(n) = n/x_n is affine in n with slope 1/alpha and satisfies
//       Z(n) == Z(n-k) + Z(k+1) - Z(1) for all 1 <= k < n <= nmax.
bool leibniz_unique_family(const Rational& alpha, int nmax);

}  // namespace defbin
