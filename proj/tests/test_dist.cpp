#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "defbin/bell.hpp"
#include "defbin/dist.hpp"

using namespace defbin;

namespace {

std::vector<GeneratingFamily> sample_families() {
    return {
        Exponential{},
        QExponential{Rational(1)},
        QExponential{Rational(2)},
        AbelLambert{Rational(1)},
        AbelLambert{Rational(2)},
        HermiteGauss{make_rational(1, 4)},
        HermiteGauss{make_rational(1, 2)},
    };
}

Rational binomial_pmf(int n, int k, const Rational& eta) {
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
           pow_rational(eta, k) * pow_rational(Rational(1) - eta, n - k);
}

// independent c_n route through complete Bell polynomials:
// c_n = (n!/B_n) * sum_{m=1}^{n-1} m a_m B_{n-m}/(n-m-1)!
Rational cn_bell_route(const DeformedModel& m, int n) {
    if (n < 2) return Rational(0);
    std::vector<Rational> args;
    std::vector<Rational> bell{Rational(1)};  // bell[j] = B_j at scaled args
    for (int j = 1; j <= n; ++j) {
        args.push_back(factorial(static_cast<unsigned long>(j)) * m.a[static_cast<size_t>(j)]);
        bell.push_back(complete_bell(args));
    }
    Rational sum(0);
    for (int j = 1; j <= n - 1; ++j) {
        sum += Rational(j) * m.a[static_cast<size_t>(j)] * bell[static_cast<size_t>(n - j)] /
               factorial(static_cast<unsigned long>(n - j - 1));
    }
    return factorial(static_cast<unsigned long>(n)) * sum / bell[static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("frozen probability tables") {
    QFamily qexp2 = q_polynomials(build_model(QExponential{Rational(2)}, 6));
    DistributionTable t = pmf(qexp2, 2, make_rational(1, 2));
    CHECK(t.p == std::vector<Rational>{make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)});
    DistributionTable tc = pmf_closed(QExponential{Rational(2)}, 2, make_rational(1, 2));
    CHECK(tc.p == t.p);

    QFamily abel1 = q_polynomials(build_model(AbelLambert{Rational(1)}, 4));
    DistributionTable ta = pmf(abel1, 1, make_rational(1, 3));
    CHECK(ta.p == std::vector<Rational>{make_rational(2, 3), make_rational(1, 3)});

    DistributionTable t0 = pmf(qexp2, 0, make_rational(1, 2));
    CHECK(t0.p == std::vector<Rational>{Rational(1)});
}

TEST_CASE("pmf properties hold exactly for all sample families") {
    std::vector<Rational> etas{Rational(0), make_rational(1, 7), make_rational(1, 3),
                               make_rational(1, 2), Rational(1)};
    for (const auto& fam : sample_families()) {
        CAPTURE(family_name(fam));
        QFamily qf = q_polynomials(build_model(fam, 10));
        for (const Rational& eta : etas) {
            Rational bar = Rational(1) - eta;
            for (int n = 0; n <= 10; ++n) {
                DistributionTable t = pmf(qf, n, eta);
                DistributionTable closed = pmf_closed(fam, n, eta);
                DistributionTable swapped = pmf(qf, n, bar);
                CHECK(t.p == closed.p);
                Rational sum(0), mean(0);
                for (int k = 0; k <= n; ++k) {
                    const Rational& pk = t.p[static_cast<size_t>(k)];
                    CHECK(pk >= 0);
                    CHECK(pk == swapped.p[static_cast<size_t>(n - k)]);
                    sum += pk;
                    mean += Rational(k) * pk;
                }
                CHECK(sum == Rational(1));
                CHECK(mean == eta * n);
            }
        }
    }
}

TEST_CASE("pmf argument validation") {
    QFamily qf = q_polynomials(build_model(Exponential{}, 6));
    CHECK_THROWS_AS(pmf(qf, 3, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(pmf(qf, 3, Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(pmf(qf, 7, make_rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(pmf_closed(CustomSeed{{Rational(0), Rational(1)}}, 3, make_rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pmf_float(Exponential{}, 3, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(log_pmf(Exponential{}, 3, 0.0), std::invalid_argument);
}

TEST_CASE("moments: mean, variance and the c_n form") {
    for (const auto& fam : sample_families()) {
        CAPTURE(family_name(fam));
        QFamily qf = q_polynomials(build_model(fam, 12));
        for (const Rational& eta : {make_rational(1, 3), make_rational(2, 7)}) {
            for (int n = 0; n <= 12; ++n) {
                MomentReport r = moments(qf, n, eta);
                CHECK(r.mean == eta * n);
                CHECK(r.variance == variance_formula(qf, n, eta));
                CHECK(r.variance == eta * (Rational(1) - eta) * (Rational(n) * n - r.c_n));
            }
        }
    }

    // q-exp variance closed form: eta(1-eta) n(n+alpha)/(1+alpha)
    for (const Rational& alpha : {Rational(1), Rational(2), Rational(3)}) {
        QFamily qf = q_polynomials(build_model(QExponential{alpha}, 20));
        Rational eta = make_rational(1, 3);
        for (int n = 0; n <= 20; ++n) {
            MomentReport r = moments(qf, n, eta);
            CHECK(r.variance ==
                  eta * (Rational(1) - eta) * Rational(n) * (Rational(n) + alpha) / (Rational(1) + alpha));
        }
    }
}

TEST_CASE("c_n routes agree") {
    for (const auto& fam : sample_families()) {
        CAPTURE(family_name(fam));
        QFamily qf = q_polynomials(build_model(fam, 25));
        auto closed_available = cn_closed(fam, 2).has_value();
        CHECK(closed_available);
        for (int n = 0; n <= 25; ++n) {
            Rational a_route = cn_series_sum(qf, n);
            CHECK(a_route == cn_generating(qf.model, n));
            CHECK(a_route == *cn_closed(fam, n));
            if (n <= 12) CHECK(a_route == cn_bell_route(qf.model, n));
            CHECK(a_route >= 0);
            CHECK(a_route <= Rational(n) * n);
        }
    }
    QFamily custom = q_polynomials(
        build_model(CustomSeed{{Rational(0), Rational(1), make_rational(1, 5)}}, 12));
    CHECK_FALSE(cn_closed(custom.model.family, 4).has_value());
    for (int n = 0; n <= 12; ++n) {
        CHECK(cn_series_sum(custom, n) == cn_generating(custom.model, n));
        if (n <= 10) CHECK(cn_series_sum(custom, n) == cn_bell_route(custom.model, n));
    }
}

TEST_CASE("auxiliary T polynomials") {
    CHECK(t_polynomial(0, Rational(5)) == Rational(1));
    CHECK(t_polynomial(1, Rational(5)) == Rational(7));       // z + 2
    CHECK(t_polynomial(2, Rational(3)) == Rational(37));      // 2(1 + 5 + 25/2)
    // n! sum_{k<=n} (z+n)^k / k! recomputed directly
    for (int n = 0; n <= 8; ++n) {
        Rational z = make_rational(7, 3);
        Rational sum(0);
        for (int k = 0; k <= n; ++k)
            sum += pow_rational(z + n, k) / factorial(static_cast<unsigned long>(k));
        CHECK(t_polynomial(n, z) == factorial(static_cast<unsigned long>(n)) * sum);
    }
}

TEST_CASE("hypergeometric embedding equals counting and brute force") {
    HypergeomTables small = hypergeometric_embed(4, 2, 2);
    CHECK(small.counting ==
          std::vector<Rational>{make_rational(1, 6), make_rational(2, 3), make_rational(1, 6)});
    CHECK(small.deformed == small.counting);

    for (int N = 1; N <= 8; ++N) {
        for (int m = 0; m <= N; ++m) {
            for (int n = 0; n <= N; ++n) {
                HypergeomTables t = hypergeometric_embed(N, m, n);
                CHECK(t.counting == t.deformed);
                // enumerate all n-subsets of an N-set with m marked elements
                std::vector<long> hits(static_cast<size_t>(n) + 1, 0);
                long total = 0;
                for (unsigned mask = 0; mask < (1u << N); ++mask) {
                    if (__builtin_popcount(mask) != n) continue;
                    ++total;
                    int k = __builtin_popcount(mask & ((1u << m) - 1u));
                    ++hits[static_cast<size_t>(k)];
                }
                Rational sum(0);
                for (int k = 0; k <= n; ++k) {
                    CHECK(t.counting[static_cast<size_t>(k)] ==
                          Rational(hits[static_cast<size_t>(k)]) / total);
                    sum += t.counting[static_cast<size_t>(k)];
                }
                CHECK(sum == Rational(1));
            }
        }
    }
}

TEST_CASE("float pmf routes agree with the exact polynomials") {
    for (const auto& fam : sample_families()) {
        CAPTURE(family_name(fam));
        QFamily qf = q_polynomials(build_model(fam, 12));
        for (double eta : {0.37, 0.5, 0.81}) {
            for (int n : {1, 5, 12}) {
                DistributionTable lg = pmf_float(fam, n, eta);
                DistributionTable poly = pmf_double(qf, n, eta);
                for (int k = 0; k <= n; ++k) {
                    CHECK(std::abs(lg.p_f[static_cast<size_t>(k)] -
                                   poly.p_f[static_cast<size_t>(k)]) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("large-parameter degenerations approach the binomial") {
    for (double eta : {0.5, 1.0 / 3.0}) {
        DistributionTable q = pmf_float(QExponential{Rational(1000000)}, 10, eta);
        double maxdev = 0.0;
        for (int k = 0; k <= 10; ++k) {
            double b = to_double(binomial_pmf(10, k, parse_rational(eta == 0.5 ? "1/2" : "1/3")));
            maxdev = std::max(maxdev, std::abs(q.p_f[static_cast<size_t>(k)] - b));
        }
        CHECK(maxdev < 1e-4);
    }

    GeneratingFamily hermite_small = HermiteGauss{make_rational(1, 1000000)};
    QFamily qf = q_polynomials(build_model(hermite_small, 10));
    for (const Rational& eta : {make_rational(1, 2), make_rational(1, 3)}) {
        DistributionTable t = pmf(qf, 10, eta);
        double maxdev = 0.0;
        for (int k = 0; k <= 10; ++k)
            maxdev = std::max(maxdev,
                              std::abs(to_double(t.p[static_cast<size_t>(k)] - binomial_pmf(10, k, eta))));
        CHECK(maxdev < 1e-4);
    }
}

TEST_CASE("hermite float variance") {
    // n = 2 closed form: 2 eta (1-eta) (1+2a)/(1+a)
    for (double a : {0.25, 0.5}) {
        double eta = 0.4;
        double expect = 2 * eta * (1 - eta) * (1 + 2 * a) / (1 + a);
        CHECK(hermite_variance_float(a, 2, eta) == doctest::Approx(expect).epsilon(1e-13));
    }
    // against the exact moments route
    QFamily qf = q_polynomials(build_model(HermiteGauss{make_rational(1, 2)}, 12));
    for (int n = 2; n <= 12; ++n) {
        MomentReport r = moments(qf, n, make_rational(1, 2));
        CHECK(hermite_variance_float(0.5, n, 0.5) ==
              doctest::Approx(to_double(r.variance)).epsilon(1e-12));
    }
    // large-n ratio against an independently computed reference
    double ratio = hermite_variance_float(0.5, 400, 0.5) / (2.0 * 400 * 0.25);
    CHECK(ratio == doctest::Approx(0.9658512599366488).epsilon(1e-9));
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
}

TEST_CASE("semicircle reference") {
    CHECK(semicircle_density(0.0) == doctest::Approx(2.0 / 3.14159265358979323846).epsilon(1e-14));
    CHECK(semicircle_density(1.0) == 0.0);
    CHECK(semicircle_mass(-1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(semicircle_mass(-2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("wigner probe: binning bookkeeping and convergence trend") {
    WignerProbe probe = wigner_limit_probe(Rational(3), 100);
    CHECK(probe.bins == 101);
    double h = (probe.hi - probe.lo) / probe.bins;
    double ref_mass = 0.0, emp_mass = 0.0;
    for (int b = 0; b < probe.bins; ++b) {
        ref_mass += probe.reference[static_cast<size_t>(b)] * h;
        emp_mass += probe.density[static_cast<size_t>(b)] * h;
    }
    CHECK(ref_mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(emp_mass == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(probe.sup_distance == doctest::Approx(0.029716).epsilon(1e-3));

    WignerProbe fine = wigner_limit_probe(Rational(3), 1000);
    CHECK(fine.sup_distance < 0.004);
    CHECK(fine.sup_distance < probe.sup_distance);

    // scale: for alpha = 1, c_n = n(n-1)/2, so scale = sqrt((n+1)/(2n))
    WignerProbe a1 = wigner_limit_probe(Rational(1), 200);
    CHECK(a1.scale == doctest::Approx(std::sqrt(201.0 / 400.0)).epsilon(1e-13));

    CHECK_THROWS_AS(wigner_limit_probe(Rational(0), 100), std::invalid_argument);
    CHECK_THROWS_AS(wigner_limit_probe(Rational(3), 1), std::invalid_argument);
}
