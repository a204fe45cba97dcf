// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "altsum/realcore.hpp"

namespace altsum {

/// Integrand failures (non-finite samples) and exhausted budgets.
class QuadratureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

struct QuadResult {
  PreciseValue value;
  std::int64_t panels = 0;
  std::int64_t evals = 0;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

/// Which ends of [a, b] carry an integrable singularity.
enum class Singular : std::uint8_t { none = 0, left = 1, right = 2, both = 3 };

constexpr Singular operator|(Singular a, Singular b) {
  return static_cast<Singular>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr bool has(Singular set, Singular flag) {
  return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(flag)) != 0;
}

inline constexpr std::int64_t kPanelBudget = 10'000;
inline constexpr std::int64_t kEvalBudget = 10'000'000;

/// Legendre roots by Newton iteration from Chebyshev guesses, weights
/// 2/((1-x^2) P_n'(x)^2). 1 <= order <= 128, else UsageError.
QuadRule gl_nodes(int order);

/// Adaptive bisection with a Gauss-Legendre 15/31 pair. Flagged singular
/// ends are handled by a tanh-sinh transform on the adjacent half of the
/// interval. The integrand is never evaluated at a or b.
QuadResult integrate_1d(const Integrand& f, double a, double b, double tol, Singular singular = Singular::none);

/// Tanh-sinh (double exponential) rule on [a, b] with level halving until
/// successive levels differ by at most tol.
QuadResult integrate_tanh_sinh(const Integrand& f, double a, double b, double tol);

/// Tensor-product Gauss-Legendre of a fixed order on [0, 1]^2.
PreciseValue tensor_gl(const Integrand2& f, int order);

/// Tensor-product Gauss-Legendre on [0, 1]^2 with orders 16, 32, 64, 128
/// until successive estimates differ by at most tol.
QuadResult integrate_unit_square(const Integrand2& f, double tol);

} // namespace altsum
