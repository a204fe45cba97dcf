// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace altsum {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (n == 0) return {1.0, 0.0};
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

std::string abscissa_message(const char* what, double x) {
  std::ostringstream out;
  out.precision(17);
  out << what << " at x=" << x;
  return out.str();
}

double sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw QuadratureError(abscissa_message("non-finite integrand", x));
  return y;
}

const QuadRule& cached_rule(int order) {
  static const QuadRule g15 = gl_nodes(15);
  static const QuadRule g31 = gl_nodes(31);
  return order == 15 ? g15 : g31;
}

double apply_rule(const QuadRule& rule, const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CompensatedSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc.add(rule.weights[i] * sample(f, mid + half * rule.nodes[i]));
  }
  return half * acc.value();
}

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel make_panel(const Integrand& f, double a, double b) {
  const double coarse = apply_rule(cached_rule(15), f, a, b);
  const double fine = apply_rule(cached_rule(31), f, a, b);
  // Floor the estimate at the rounding level of the panel value.
  return {a, b, fine, std::fabs(fine - coarse) + 4.0 * kEps * std::fabs(fine)};
}

QuadResult adaptive_gl(const Integrand& f, double a, double b, double tol) {
  constexpr std::int64_t kEvalsPerPanel = 15 + 31;
  std::vector<Panel> panels{make_panel(f, a, b)};
  std::int64_t evals = kEvalsPerPanel;
  for (;;) {
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total_err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    if (total_err <= tol) break;
    if (static_cast<std::int64_t>(panels.size()) >= kPanelBudget || evals + 2 * kEvalsPerPanel > kEvalBudget) {
      std::ostringstream out;
      out << "quadrature budget exceeded on [" << a << ", " << b << "], error estimate " << total_err;
      throw QuadratureError(out.str());
    }
    const Panel p = panels[worst];
    const double m = 0.5 * (p.a + p.b);
    panels[worst] = make_panel(f, p.a, m);
    panels.push_back(make_panel(f, m, p.b));
    evals += 2 * kEvalsPerPanel;
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value;
  double err = 0.0;
  for (const Panel& p : panels) {
    value.add(p.value);
    err += p.error;
  }
  return {PreciseValue{value.value(), err + value.error_bound()}, static_cast<std::int64_t>(panels.size()), evals};
}

QuadResult combine(const QuadResult& x, const QuadResult& y) {
  return {x.value + y.value, x.panels + y.panels, x.evals + y.evals};
}

} // namespace

QuadRule gl_nodes(int order) {
  if (order < 1 || order > 128) throw UsageError("gl_nodes: order must be in [1, 128]");
  QuadRule rule;
  rule.order = order;
  rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
  rule.weights.assign(static_cast<std::size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-type guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, d] = legendre(order, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::fabs(dx) <= 1e-16) break;
    }
    dp = legendre(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    rule.nodes[hi] = x;
    rule.nodes[lo] = -x;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return rule;
}

QuadResult integrate_tanh_sinh(const Integrand& f, double a, double b, double tol) {
  if (!(a < b)) throw UsageError("integrate_tanh_sinh: need a < b");
  if (!(tol > 0.0)) throw UsageError("integrate_tanh_sinh: tol must be positive");
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr int kMaxLevel = 12;
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);

  std::int64_t evals = 0;
  // Adds the nodes k*h for k = first, first+step, ... on both sides.
  auto sweep = [&](double h, int first, int step) {
    CompensatedSum acc;
    for (int side = -1; side <= 1; side += 2) {
      for (int k = first;; k += step) {
        const double u = k * h;
        const double s = kHalfPi * std::sinh(u);
        const double cs = std::cosh(s);
        const double w = r * kHalfPi * std::cosh(u) / (cs * cs);
        const double delta = 2.0 * r / (1.0 + std::exp(2.0 * s));
        const double x = side > 0 ? b - delta : a + delta;
        if (w == 0.0 || !std::isfinite(w) || x <= a || x >= b) break;
        acc.add(w * sample(f, x));
        ++evals;
        if (evals > kEvalBudget) throw QuadratureError("tanh-sinh evaluation budget exceeded");
      }
    }
    return acc.value();
  };

  double h = 1.0;
  double sum = r * kHalfPi * sample(f, c) + sweep(h, 1, 1);
  ++evals;
  double previous = h * sum;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    sum += sweep(h, 1, 2);
    const double estimate = h * sum;
    const double diff = std::fabs(estimate - previous);
    if (level >= 3 && diff <= tol) {
      return {PreciseValue{estimate, diff}, 1, evals};
    }
    previous = estimate;
  }
  throw QuadratureError("tanh-sinh did not converge on the requested tolerance");
}

QuadResult integrate_1d(const Integrand& f, double a, double b, double tol, Singular singular) {
  if (!(a < b)) throw UsageError("integrate_1d: need a < b");
  if (!(tol > 0.0)) throw UsageError("integrate_1d: tol must be positive");
  if (!f) throw UsageError("integrate_1d: empty integrand");

  const bool left = has(singular, Singular::left);
  const bool right = has(singular, Singular::right);
  if (left && right) return integrate_tanh_sinh(f, a, b, tol);
  const double m = 0.5 * (a + b);
  if (left) return combine(integrate_tanh_sinh(f, a, m, 0.5 * tol), adaptive_gl(f, m, b, 0.5 * tol));
  if (right) return combine(adaptive_gl(f, a, m, 0.5 * tol), integrate_tanh_sinh(f, m, b, 0.5 * tol));
  return adaptive_gl(f, a, b, tol);
}

PreciseValue tensor_gl(const Integrand2& f, int order) {
  const QuadRule rule = gl_nodes(order);
  std::vector<double> x(rule.nodes.size());
  std::vector<double> w(rule.nodes.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 0.5 * (rule.nodes[i] + 1.0);
    w[i] = 0.5 * rule.weights[i];
  }
  CompensatedSum outer;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CompensatedSum inner;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double y = f(x[i], x[j]);
      if (!std::isfinite(y)) {
        std::ostringstream out;
        out.precision(17);
        out << "non-finite integrand at (x, y)=(" << x[i] << ", " << x[j] << ")";
        throw QuadratureError(out.str());
      }
      inner.add(w[j] * y);
    }
    outer.add(w[i] * inner.value());
  }
  return outer.result();
}

QuadResult integrate_unit_square(const Integrand2& f, double tol) {
  if (!(tol > 0.0)) throw UsageError("integrate_unit_square: tol must be positive");
  if (!f) throw UsageError("integrate_unit_square: empty integrand");
  int order = 16;
  std::int64_t evals = static_cast<std::int64_t>(order) * order;
  PreciseValue previous = tensor_gl(f, order);
  while (order < 128) {
    order *= 2;
    evals += static_cast<std::int64_t>(order) * order;
    const PreciseValue current = tensor_gl(f, order);
    const double diff = std::fabs(current.value() - previous.value());
    if (diff <= tol) return {PreciseValue{current.value(), diff}, 1, evals};
    previous = current;
  }
  throw QuadratureError("unit-square quadrature did not converge by order 128");
}

} // namespace altsum
