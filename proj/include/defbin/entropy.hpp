#pragma once

#include <string>
#include <vector>

#include "defbin/dist.hpp"

namespace defbin {

// S_BG = -sum_k C(n,k) w_k ln w_k with w_k = p_k/C(n,k) and 0 ln 0 := 0.
double bg_entropy(const QFamily& qf, int n, const Rational& eta);

// S_q = (1 - sum_k C(n,k) w_k^q)/(q - 1); requires q > 0, q != 1.
double tsallis_entropy(const QFamily& qf, int n, const Rational& eta, double q);

// Scan over a contiguous n range. Named families evaluate in the log
// domain at any n; custom seeds go through the exact polynomials (order
// = n_hi) in double arithmetic. Carries a least-squares line of S_BG
// over the fit window [50,200] clipped to the scan (whole scan when
// fewer than three points fall inside) and the extreme centered second
// differences of each S_q curve past n = curvature_from.
struct EntropyScan {
    std::string family;
    double eta = 0.0;
    std::vector<double> q_values;
    std::vector<int> n;
    std::vector<double> bg;
    std::vector<std::vector<double>> tsallis;  // tsallis[i][j]: q_values[j] at n[i]

    int fit_lo = 0, fit_hi = 0;
    double slope = 0.0, intercept = 0.0, r_squared = 0.0;

    int curvature_from = 50;
    std::vector<double> min_second_difference;  // per q value
    std::vector<double> max_second_difference;
};

EntropyScan entropy_scan(const GeneratingFamily& fam, double eta, int n_lo, int n_hi,
                         const std::vector<double>& q_values);

}  // namespace defbin
