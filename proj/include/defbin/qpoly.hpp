#pragma once

#include <vector>

#include "defbin/eta_polynomial.hpp"
#include "defbin/model.hpp"

namespace defbin {

// The polynomials q_n(eta) defined by N(t)^eta = sum q_n(eta) t^n / x_n!.
// q_0 = 1, q_n(0) = 0 and q_n(1) = 1 for n >= 1.
struct QFamily {
    DeformedModel model;
    std::vector<EtaPolynomial> q;  // q[n], 0 <= n <= model.order

    int order() const { return model.order; }
};

QFamily q_polynomials(const DeformedModel& model);

// Downward recurrence cross-check:
// q_{n+1}(eta) = eta * x_{n+1}/(n+1) *
//   sum_{k=0..n} x_n!/(x_k! x_{n-k}!) * (n-k+1)/x_{n-k+1} * q_k(eta - 1).
struct RecurrenceReport {
    bool all_match = true;
    int first_failure = -1;  // smallest n+1 whose identity fails
};

RecurrenceReport q_recurrence_check(const QFamily& qf);

// Addition rule at exact points: sum_k x_n!/(x_k! x_{n-k}!) q_k(z1) q_{n-k}(z2)
// == q_n(z1+z2) for all n <= order, plus the same statement for the rescaled
// polynomials qt_n = (n!/x_n!) q_n against ordinary binomial weights.
bool q_functional_check(const QFamily& qf, const Rational& z1, const Rational& z2);

// Partition-sum construction of q_n, independent of the series recursion:
// q_n = x_n! * sum over partitions (i_1, i_2, ...) of n, with m = sum i_s parts,
// of eta(eta-1)...(eta-m+1) * prod_s (1/x_s!)^{i_s} / i_s!.
// Exponential-cost enumeration; capped at n <= 10.
EtaPolynomial q_combinatorial_oracle(const DeformedModel& model, int n);

// Family closed forms; throws for CustomSeed.
EtaPolynomial q_closed_form(const GeneratingFamily& fam, int n);

// a_n == q_n'(0) / x_n! for every n in 1..order.
bool dlog_identity_check(const QFamily& qf);

}  // namespace defbin
