#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "defbin/model.hpp"
#include "defbin/power_series.hpp"

using namespace defbin;

namespace {

std::vector<GeneratingFamily> named_families() {
    return {
        Exponential{},
        QExponential{Rational(1)},
        QExponential{Rational(2)},
        QExponential{Rational(3)},
        QExponential{make_rational(5, 2)},
        AbelLambert{Rational(1)},
        AbelLambert{Rational(2)},
        AbelLambert{make_rational(7, 3)},
        HermiteGauss{make_rational(1, 4)},
        HermiteGauss{make_rational(1, 2)},
        HermiteGauss{make_rational(9, 10)},
    };
}

}  // namespace

TEST_CASE("series-derived factorials match the closed forms") {
    for (const auto& fam : named_families()) {
        CAPTURE(family_name(fam));
        DeformedModel m = build_model(fam, 20);
        CHECK(m.xfact[0] == Rational(1));
        CHECK(m.a[1] == Rational(1));
        for (int n = 0; n <= 20; ++n) {
            CHECK(m.xfact[static_cast<size_t>(n)] == closed_form_xfact(fam, n));
            CHECK(m.invfact[static_cast<size_t>(n)] * m.xfact[static_cast<size_t>(n)] == Rational(1));
            if (n >= 1) {
                CHECK(m.x[static_cast<size_t>(n)] > 0);
                CHECK(m.xfact[static_cast<size_t>(n)] ==
                      m.x[static_cast<size_t>(n)] * m.xfact[static_cast<size_t>(n) - 1]);
            }
        }
        CHECK(m.x[0] == Rational(0));
        CHECK(m.x[1] == Rational(1));
    }
}

TEST_CASE("per-family x_n values") {
    DeformedModel exp_m = build_model(Exponential{}, 15);
    for (int n = 1; n <= 15; ++n) CHECK(exp_m.x[static_cast<size_t>(n)] == Rational(n));

    // q-exp: x_n = n alpha / (n + alpha - 1)
    Rational alpha(2);
    DeformedModel qm = build_model(QExponential{alpha}, 15);
    for (int n = 1; n <= 15; ++n)
        CHECK(qm.x[static_cast<size_t>(n)] == Rational(n) * alpha / (Rational(n) + alpha - 1));

    // Abel: x_n = n alpha (alpha + n - 1)^{n-2} / (alpha + n)^{n-1}
    DeformedModel am = build_model(AbelLambert{alpha}, 15);
    for (int n = 1; n <= 15; ++n) {
        Rational expect = Rational(n) * alpha * pow_rational(alpha + (n - 1), n - 2) /
                          pow_rational(alpha + n, n - 1);
        CHECK(am.x[static_cast<size_t>(n)] == expect);
    }

    // Hermite: x_n = phi_{n-1}(a) / phi_n(a)
    Rational a = make_rational(1, 2);
    DeformedModel hm = build_model(HermiteGauss{a}, 15);
    for (int n = 1; n <= 15; ++n)
        CHECK(hm.x[static_cast<size_t>(n)] == hermite_phi(a, n - 1) / hermite_phi(a, n));
}

TEST_CASE("hermite phi values and recurrence") {
    Rational a = make_rational(1, 3);
    CHECK(hermite_phi(a, 0) == Rational(1));
    CHECK(hermite_phi(a, 1) == Rational(1));
    CHECK(hermite_phi(a, 2) == (Rational(1) + a) / 2);
    CHECK(hermite_phi(a, 3) == (Rational(1) + Rational(3) * a) / 6);
    for (int n = 1; n <= 15; ++n) {
        CHECK(Rational(n + 1) * hermite_phi(a, n + 1) ==
              hermite_phi(a, n) + a * hermite_phi(a, n - 1));
    }
}

TEST_CASE("custom seeds expand through the series route") {
    std::vector<Rational> seed{Rational(0), Rational(1), make_rational(1, 2), make_rational(1, 3)};
    DeformedModel m = build_model(CustomSeed{seed}, 10);
    std::vector<Rational> padded = seed;
    padded.resize(11, Rational(0));
    PowerSeries expf = series_exp(PowerSeries(padded));
    for (int n = 0; n <= 10; ++n) CHECK(m.invfact[static_cast<size_t>(n)] == expf.coeff(n));
}

TEST_CASE("inadmissible seeds are rejected") {
    SeedCheck zero_lead = sigma0_check(PowerSeries(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
    CHECK_FALSE(zero_lead.accepted);
    CHECK(zero_lead.first_offending_index == 1);

    SeedCheck neg_lead = sigma0_check(PowerSeries(std::vector<Rational>{Rational(0), Rational(-1)}));
    CHECK_FALSE(neg_lead.accepted);

    SeedCheck neg_tail = sigma0_check(
        PowerSeries(std::vector<Rational>{Rational(0), Rational(1), make_rational(-1, 2)}));
    CHECK_FALSE(neg_tail.accepted);
    CHECK(neg_tail.first_offending_index == 2);

    SeedCheck good = sigma0_check(
        PowerSeries(std::vector<Rational>{Rational(0), Rational(2), Rational(0), Rational(1)}));
    CHECK(good.accepted);

    CHECK_THROWS_AS(build_model(QExponential{Rational(0)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(QExponential{Rational(-1)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(AbelLambert{Rational(0)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(HermiteGauss{Rational(0)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(HermiteGauss{Rational(1)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(HermiteGauss{Rational(2)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_model(CustomSeed{{Rational(0), Rational(1), Rational(-1)}}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(CustomSeed{{Rational(1), Rational(1)}}, 5), std::invalid_argument);
}

TEST_CASE("family names") {
    CHECK(family_name(Exponential{}) == "exponential");
    CHECK(family_name(QExponential{Rational(2)}) == "qexp");
    CHECK(family_name(AbelLambert{Rational(1)}) == "abel");
    CHECK(family_name(HermiteGauss{make_rational(1, 2)}) == "hermite");
    CHECK(family_name(CustomSeed{{Rational(0), Rational(1)}}) == "custom");
}

TEST_CASE("logarithmic scale invariance") {
    Rational half = make_rational(1, 2);
    Rational third = make_rational(1, 3);
    Rational quarter = make_rational(1, 4);
    for (int n : {2, 4, 6}) {
        CHECK(log_scale_invariance_check(Exponential{}, third, n) == ScaleCheck::holds);
        CHECK(log_scale_invariance_check(QExponential{Rational(2)}, third, n) == ScaleCheck::holds);
        CHECK(log_scale_invariance_check(AbelLambert{Rational(2)}, half, n) == ScaleCheck::holds);
        // a/eta = 1 sits on the admissibility boundary and still holds
        CHECK(log_scale_invariance_check(HermiteGauss{half}, half, n) == ScaleCheck::holds);
        // a/eta > 1 leaves the parameter domain
        CHECK(log_scale_invariance_check(HermiteGauss{half}, quarter, n) ==
              ScaleCheck::not_applicable);
    }
    CHECK(log_scale_invariance_check(CustomSeed{{Rational(0), Rational(1)}}, half, 4) ==
          ScaleCheck::not_applicable);
}
