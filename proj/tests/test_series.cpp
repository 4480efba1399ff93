#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "defbin/bell.hpp"
#include "defbin/power_series.hpp"

using namespace defbin;

namespace {

// Independent oracle: walk every set partition of {1..n} and accumulate the
// product of args[|block|-1] over blocks, split by block count.
void walk_partitions(int next, int n, std::vector<int>& block_sizes,
                     const std::vector<Rational>& args, std::vector<Rational>& by_blocks) {
    if (next == n) {
        Rational prod(1);
        for (int s : block_sizes) prod *= args[static_cast<size_t>(s) - 1];
        by_blocks[block_sizes.size()] += prod;
        return;
    }
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        ++block_sizes[b];
        walk_partitions(next + 1, n, block_sizes, args, by_blocks);
        --block_sizes[b];
    }
    block_sizes.push_back(1);
    walk_partitions(next + 1, n, block_sizes, args, by_blocks);
    block_sizes.pop_back();
}

std::vector<Rational> bell_by_block_count(const std::vector<Rational>& args) {
    int n = static_cast<int>(args.size());
    std::vector<Rational> by_blocks(static_cast<size_t>(n) + 1, Rational(0));
    std::vector<int> sizes;
    walk_partitions(0, n, sizes, args, by_blocks);
    return by_blocks;
}

std::vector<Rational> sample_args(int n) {
    std::vector<Rational> args;
    for (int m = 1; m <= n; ++m) args.push_back(make_rational(2 * m + 1, m + 2));
    return args;
}

std::vector<Rational> signed_args(int n) {
    std::vector<Rational> args;
    for (int m = 1; m <= n; ++m) args.push_back(make_rational(3 - m, 2));
    return args;
}

}  // namespace

TEST_CASE("complete Bell matches set-partition enumeration") {
    for (int n = 1; n <= 8; ++n) {
        auto args = sample_args(n);
        auto by_blocks = bell_by_block_count(args);
        Rational total(0);
        for (const auto& v : by_blocks) total += v;
        CHECK(complete_bell(args) == total);
    }
    for (int n = 1; n <= 7; ++n) {
        auto args = signed_args(n);
        auto by_blocks = bell_by_block_count(args);
        Rational total(0);
        for (const auto& v : by_blocks) total += v;
        CHECK(complete_bell(args) == total);
    }
}

TEST_CASE("partial Bell matches enumeration split by block count") {
    for (int n = 1; n <= 7; ++n) {
        auto args = sample_args(n);
        auto by_blocks = bell_by_block_count(args);
        for (int k = 0; k <= n; ++k)
            CHECK(partial_bell(n, k, args) == by_blocks[static_cast<size_t>(k)]);
    }
}

TEST_CASE("unit arguments give Bell and Stirling numbers") {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 1; n <= 8; ++n) {
        std::vector<Rational> ones(static_cast<size_t>(n), Rational(1));
        CHECK(complete_bell(ones) == Rational(bell[n]));
    }
    std::vector<Rational> ones(8, Rational(1));
    CHECK(partial_bell(4, 2, ones) == Rational(7));
    CHECK(partial_bell(5, 2, ones) == Rational(15));
    CHECK(partial_bell(5, 3, ones) == Rational(25));
    CHECK(partial_bell(6, 3, ones) == Rational(90));
    CHECK(partial_bell(8, 4, ones) == Rational(1701));
}

TEST_CASE("exp and log are mutually inverse on power series") {
    std::vector<Rational> fc{Rational(0)};
    for (int m = 1; m <= 16; ++m) fc.push_back(make_rational((m % 3) - 1, m));
    PowerSeries f(fc);
    CHECK(series_log(series_exp(f)) == f);

    std::vector<Rational> gc{Rational(1)};
    for (int m = 1; m <= 32; ++m) gc.push_back(make_rational(m + 2, 2 * m + 1));
    PowerSeries g(gc);
    CHECK(series_exp(series_log(g)) == g);
}

TEST_CASE("exp rejects nonzero constant term, log rejects constant term != 1") {
    PowerSeries f(std::vector<Rational>{Rational(1), Rational(2)});
    CHECK_THROWS_AS(series_exp(f), std::domain_error);
    PowerSeries g(std::vector<Rational>{Rational(0), Rational(2)});
    CHECK_THROWS_AS(series_log(g), std::domain_error);
}

TEST_CASE("exp coefficients equal complete Bell values at scaled arguments") {
    std::vector<Rational> fc{Rational(0)};
    for (int m = 1; m <= 8; ++m) fc.push_back(make_rational(1, m * m));
    PowerSeries f(fc);
    PowerSeries ef = series_exp(f);
    Rational nfact(1);
    std::vector<Rational> args;
    for (int n = 1; n <= 8; ++n) {
        nfact *= n;
        args.push_back(factorial(static_cast<unsigned long>(n)) * fc[static_cast<size_t>(n)]);
        CHECK(ef.coeff(n) == complete_bell(args) / nfact);
    }
}

TEST_CASE("parameterized exponentiation reduces to exp at eta = 1 and stays polynomial") {
    std::vector<Rational> fc{Rational(0)};
    for (int m = 1; m <= 12; ++m) fc.push_back(make_rational(1, m + 1));
    PowerSeries f(fc);
    EtaPowerSeries pow = series_exp_eta(f);
    PowerSeries ef = series_exp(f);
    CHECK(pow.order() == 12);
    CHECK(pow.c[0] == EtaPolynomial::constant(Rational(1)));
    for (int n = 0; n <= 12; ++n) {
        CHECK(poly_eval(pow.c[static_cast<size_t>(n)], Rational(1)) == ef.coeff(n));
        CHECK(pow.c[static_cast<size_t>(n)].degree() <= n);
        if (n >= 1) CHECK(poly_eval(pow.c[static_cast<size_t>(n)], Rational(0)) == Rational(0));
    }
    // eta = 2 must square the series: N^2 = N * N
    PowerSeries sq = ef * ef;
    for (int n = 0; n <= 12; ++n)
        CHECK(poly_eval(pow.c[static_cast<size_t>(n)], Rational(2)) == sq.coeff(n));
}

TEST_CASE("nonnegative seeds keep positive coefficients at positive eta") {
    std::vector<Rational> fc{Rational(0), Rational(1), make_rational(1, 4), Rational(0),
                             make_rational(1, 16)};
    fc.resize(11, Rational(0));
    PowerSeries f(fc);
    EtaPowerSeries pow = series_exp_eta(f);
    for (int n = 0; n <= 10; ++n) {
        CHECK(poly_eval(pow.c[static_cast<size_t>(n)], make_rational(1, 2)) > 0);
        CHECK(poly_eval(pow.c[static_cast<size_t>(n)], Rational(1)) > 0);
    }
}
