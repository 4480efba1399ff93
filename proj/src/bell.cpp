#include "defbin/bell.hpp"

#include <stdexcept>
#include <vector>

namespace defbin {

namespace {

Rational arg_at(std::span<const Rational> args, int i) {
    // x_i, 1-based
    if (i < 1 || i > static_cast<int>(args.size())) return Rational(0);
    return args[static_cast<size_t>(i) - 1];
}

}  // namespace

Rational complete_bell(std::span<const Rational> args) {
    int n = static_cast<int>(args.size());
    // B_{m+1} = sum_{i=0..m} C(m,i) B_{m-i} x_{i+1}
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    b[0] = Rational(1);
    for (int m = 0; m < n; ++m) {
        Rational acc(0);
        for (int i = 0; i <= m; ++i)
            acc += binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i)) *
                   b[static_cast<size_t>(m - i)] * arg_at(args, i + 1);
        b[static_cast<size_t>(m) + 1] = acc;
    }
    return b[static_cast<size_t>(n)];
}

Rational partial_bell(int n, int k, std::span<const Rational> args) {
    if (n < 0 || k < 0) throw std::invalid_argument("partial_bell: negative index");
    if (k > n) return Rational(0);
    if (n == 0) return Rational(1);  // k == 0 here
    if (k == 0) return Rational(0);
    // B_{n,k} = sum_{i=1..n-k+1} C(n-1,i-1) x_i B_{n-i,k-1}
    std::vector<std::vector<Rational>> b(static_cast<size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<size_t>(k) + 1, Rational(0)));
    b[0][0] = Rational(1);
    for (int nn = 1; nn <= n; ++nn) {
        for (int kk = 1; kk <= std::min(nn, k); ++kk) {
            Rational acc(0);
            for (int i = 1; i <= nn - kk + 1; ++i)
                acc += binomial(static_cast<unsigned long>(nn - 1), static_cast<unsigned long>(i - 1)) *
                       arg_at(args, i) * b[static_cast<size_t>(nn - i)][static_cast<size_t>(kk - 1)];
            b[static_cast<size_t>(nn)][static_cast<size_t>(kk)] = acc;
        }
    }
    return b[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace defbin
