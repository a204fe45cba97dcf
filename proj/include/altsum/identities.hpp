// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/realcore.hpp"

namespace altsum {

enum class Route : std::uint8_t { SERIES_DIRECT, SERIES_CVZ, QUAD_1D, QUAD_2D, POLYLOG_EXPR };

std::string_view route_name(Route r) noexcept;
/// Accepts the enum spelling, case-insensitive; UsageError otherwise.
Route parse_route(std::string_view name);

/// Value produced by one evaluation route, with its work count.
struct RouteOutcome {
  PreciseValue value;
  std::int64_t evals = 0;
};

using ParamFn = std::function<RouteOutcome(std::optional<double>)>;

struct RoutePlan {
  Route route = Route::SERIES_DIRECT;
  /// Pass threshold on |lhs - rhs| for this route.
  double tolerance = 0.0;
  /// Optional per-parameter threshold overriding `tolerance`.
  std::function<double(double)> param_tolerance;
  ParamFn evaluate;
  /// For parametric identities: which parameter values this route covers.
  /// Empty means every admissible value.
  std::function<bool(double)> covers;
  /// One-line note on what the route computes.
  std::string method;

  double tolerance_at(std::optional<double> param) const {
    return (param && param_tolerance) ? param_tolerance(*param) : tolerance;
  }
};

// One identity of the registry. The left-hand side is computed by each
// route independently; the right-hand side is either an exact ClosedForm
// over PI, LN2, ZETA3, CATALAN or, for parametric identities, an
// elementary/polylogarithmic expression in the parameter.
struct Identity {
  std::string id;
  std::string description;
  /// Report group the identity belongs to.
  std::string section;
  /// Locator: the statement being checked.
  std::string anchor;

  std::vector<RoutePlan> routes;

  std::optional<ClosedForm> rhs_closed_form;
  std::function<PreciseValue(double)> rhs_parametric;
  std::string rhs_text;

  /// Parameter symbol ("x", "t", "n"); empty for scalar identities.
  std::string param_name;
  std::vector<double> param_grid;
  /// Admissible parameter values for single evaluations.
  std::function<bool(double)> param_domain;

  bool parametric() const noexcept { return !param_name.empty(); }
  const RoutePlan* find_route(Route r) const noexcept;
  /// Tightest route tolerance.
  double tolerance() const noexcept;
};

struct VerificationResult {
  std::string id;
  Route route = Route::SERIES_DIRECT;
  std::optional<double> param;
  /// Empty when the route failed; see diagnostic.
  std::optional<PreciseValue> lhs;
  std::optional<PreciseValue> rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::int64_t evals = 0;
  double seconds = 0.0;
  std::string anchor;
  std::string diagnostic;
};

/// All identities, in a fixed order.
const std::vector<Identity>& registry();
/// UsageError if the id is unknown.
const Identity& find_identity(std::string_view id);

/// Evaluates one route of one identity. Unknown ids/routes, a missing or
/// inadmissible parameter raise UsageError; numerical failures of the route
/// are reported in the result (pass = false, diagnostic set).
VerificationResult evaluate(std::string_view id, Route route, std::optional<double> param = std::nullopt,
                            std::optional<double> tol_override = std::nullopt);

/// Every identity on every registered route and grid point, ordered by
/// (id, route name, param). Failures never abort the sweep.
std::vector<VerificationResult> verify_all(std::optional<double> tol_override = std::nullopt);

/// Sweep restricted to one identity.
std::vector<VerificationResult> verify_identity(std::string_view id, std::optional<double> tol_override = std::nullopt);

/// Antiderivative of ln^2(1-s)/s:
///   L(t) = int_0^t ln^2(1-s)/s ds
///        = ln t ln^2(1-t) + 2 ln(1-t) Li2(1-t) - 2 Li3(1-t) + 2 zeta(3)
/// for 0 <= t < 1.
PreciseValue log_square_integral_closed(double t);
/// Same integral by quadrature, any t in [-1, 1).
PreciseValue log_square_integral_quad(double t, double tol, std::int64_t* evals = nullptr);

} // namespace altsum
