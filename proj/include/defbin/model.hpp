#pragma once

#include <string>
#include <variant>
#include <vector>

#include "defbin/power_series.hpp"
#include "defbin/rational.hpp"

namespace defbin {

// Named generating functions N(t) = e^{F(t)} with F(t) = sum a_n t^n.
struct Exponential {};                      // N = e^t
struct QExponential { Rational alpha; };    // N = (1 - t/alpha)^{-alpha}, alpha > 0
struct AbelLambert { Rational alpha; };     // N = e^{-alpha W(-t/alpha)}, alpha > 0
struct HermiteGauss { Rational a; };        // N = e^{t + (a/2) t^2}, 0 < a < 1
struct CustomSeed {
    // a[n] is the coefficient of t^n in F; a[0] is ignored and must be 0.
    std::vector<Rational> a;
};

using GeneratingFamily =
    std::variant<Exponential, QExponential, AbelLambert, HermiteGauss, CustomSeed>;

std::string family_name(const GeneratingFamily& fam);

// Admissibility of a seed: a_1 > 0 and a_n >= 0 for all n.
struct SeedCheck {
    bool accepted = true;
    int first_offending_index = -1;
    std::string reason;
};

SeedCheck sigma0_check(const PowerSeries& seed);

// Seed coefficients of ln N for a family, up to the given order.
PowerSeries seed_series(const GeneratingFamily& fam, int order);

// A deformed model: the seed, the expansion 1/x_n! = [t^n] N(t), and the
// derived sequences x_n! = 1/invfact_n and x_n = x_n!/x_{n-1}!.
struct DeformedModel {
    GeneratingFamily family;
    int order = 0;
    std::vector<Rational> a;        // a[n] = [t^n] ln N, a[0] = 0
    std::vector<Rational> invfact;  // invfact[n] = 1/x_n!
    std::vector<Rational> xfact;    // x_n!, xfact[0] = 1
    std::vector<Rational> x;        // x_n, x[0] = 0

    // x_n!/(x_k! x_{n-k}!)
    Rational binomial_x(int n, int k) const;
};

// Throws std::invalid_argument on inadmissible seeds or parameters.
DeformedModel build_model(const GeneratingFamily& fam, int order);

// Closed-form x_n! independent of the series expansion. Throws for CustomSeed.
Rational closed_form_xfact(const GeneratingFamily& fam, int n);

// Family-parameter closed forms, usable at any admissible parameter value.
Rational qexp_xfact(const Rational& alpha, int n);
Rational abel_xfact(const Rational& alpha, int n);
// phi_n(a) = sum_{m<=n/2} (a/2)^m / (m! (n-2m)!) ; x_n! = 1/phi_n for HermiteGauss
Rational hermite_phi(const Rational& a, int n);

enum class ScaleCheck { holds, fails, not_applicable };

// Logarithmic scale invariance: q_n(eta) == eta^n * x_n!(param) / x_n!(scaled param)
// with the family's parameter scaled by eta (q-exp, Abel: alpha -> eta*alpha;
// Hermite: a -> a/eta, legal up to the boundary a/eta == 1).
ScaleCheck log_scale_invariance_check(const GeneratingFamily& fam, const Rational& eta, int n);

}  // namespace defbin
