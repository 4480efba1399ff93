#pragma once

#include <span>

#include "defbin/rational.hpp"

namespace defbin {

// Complete Bell polynomial B_n(x_1..x_n) in the exponential convention
// exp(sum_m x_m t^m / m!) = sum_n B_n(x_1..x_n) t^n / n!, so B_0 = 1.
// n is args.size().
Rational complete_bell(std::span<const Rational> args);

// Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}); args may carry up to n entries.
Rational partial_bell(int n, int k, std::span<const Rational> args);

}  // namespace defbin
