// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altsum {

/// Raised for malformed requests: unknown names, out-of-range arguments.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside a function's domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative method exhausts its budget.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unit roundoff of binary64.
inline constexpr double kEps = 0x1p-53;

/// Rounding allowance for a value of magnitude |x|: one ulp.
double ulp(double x) noexcept;

//======================================================================
// PreciseValue: a binary64 value and an estimated absolute error bound.
//
// Error propagation is first order: for c = a op b the bound is the
// linearised propagation of a.abs_error and b.abs_error plus one ulp
// of the rounded result. It is a heuristic, not interval arithmetic.
class PreciseValue {
public:
  constexpr PreciseValue() = default;
  /// Throws DomainError unless value is finite and abs_error is finite, >= 0.
  PreciseValue(double value, double abs_error = 0.0);

  /// Exact binary64 input, no error.
  static PreciseValue exact(double value) { return {value, 0.0}; }

  double value() const noexcept { return value_; }
  double abs_error() const noexcept { return abs_error_; }

  /// True if |value - x| <= abs_error + slack.
  bool contains(double x, double slack = 0.0) const noexcept;

  PreciseValue operator-() const noexcept;

  friend PreciseValue operator+(const PreciseValue& a, const PreciseValue& b);
  friend PreciseValue operator-(const PreciseValue& a, const PreciseValue& b);
  friend PreciseValue operator*(const PreciseValue& a, const PreciseValue& b);
  friend PreciseValue operator/(const PreciseValue& a, const PreciseValue& b);

  PreciseValue& operator+=(const PreciseValue& b) { return *this = *this + b; }
  PreciseValue& operator-=(const PreciseValue& b) { return *this = *this - b; }
  PreciseValue& operator*=(const PreciseValue& b) { return *this = *this * b; }

  /// Inflates the error bound by extra (>= 0).
  PreciseValue widened(double extra) const { return {value_, abs_error_ + extra}; }

private:
  double value_ = 0.0;
  double abs_error_ = 0.0;
};

PreciseValue operator+(const PreciseValue& a, const PreciseValue& b);
PreciseValue operator-(const PreciseValue& a, const PreciseValue& b);
PreciseValue operator*(const PreciseValue& a, const PreciseValue& b);
PreciseValue operator/(const PreciseValue& a, const PreciseValue& b);

/// log of a value, with derivative-propagated error. Requires x > 0.
PreciseValue log(const PreciseValue& x);
/// ln(1 + x), accurate for small x. Requires x > -1.
PreciseValue log1p(const PreciseValue& x);
PreciseValue pow(const PreciseValue& x, int k);

//======================================================================
// Neumaier compensated accumulator.
class CompensatedSum {
public:
  /// Throws std::overflow_error if the running sum stops being finite.
  void add(double x);
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }
  /// Unrounded pair (sum, compensation); their exact sum is the estimate.
  double head() const noexcept { return sum_; }
  double tail() const noexcept { return compensation_; }
  std::size_t count() const noexcept { return count_; }
  double abs_total() const noexcept { return abs_total_; }

  /// Bound 2 eps |S| + 2 n eps^2 sum|x_i|.
  double error_bound() const noexcept;
  PreciseValue result() const { return {value(), error_bound()}; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double abs_total_ = 0.0;
  std::size_t count_ = 0;
};

PreciseValue compensated_sum(std::span<const double> terms);

//======================================================================
// Constants.
enum class Constant : std::uint8_t { PI = 0, LN2 = 1, ZETA3 = 2, CATALAN = 3 };
inline constexpr std::size_t kConstantCount = 4;

std::string_view constant_name(Constant c) noexcept;
/// Parses "PI", "LN2", "ZETA3", "CATALAN" (case-insensitive); UsageError otherwise.
Constant parse_constant(std::string_view name);

/// Stored 30-significant-digit decimal expansion.
std::string_view constant_digits(Constant c) noexcept;
/// Binary64 table value, abs_error one ulp.
PreciseValue constant(Constant c);
PreciseValue constant(std::string_view name);
/// Low-order correction such that constant(c) + constant_lo(c) is the
/// constant to roughly 64 bits; used where a difference with the constant
/// must keep relative accuracy.
double constant_lo(Constant c) noexcept;

//======================================================================
// Exact rational with 64-bit numerator and positive denominator.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

//======================================================================
// ClosedForm: sum of rational multiples of monomials in PI, LN2, ZETA3,
// CATALAN. Always held canonical: one term per exponent vector, no zero
// coefficients, terms ordered descending-lexicographically by exponents
// (PI first), which puts the constant term last.
class ClosedForm {
public:
  using Exponents = std::array<int, kConstantCount>;

  struct Term {
    Rational coeff;
    Exponents exponents{};
    friend bool operator==(const Term&, const Term&) = default;
  };

  ClosedForm() = default;
  /// Builds a canonical form from arbitrary (possibly repeated) terms.
  explicit ClosedForm(std::span<const Term> terms);

  static ClosedForm rational(Rational r);
  /// coeff * PI^pi * LN2^ln2 * ZETA3^zeta3 * CATALAN^catalan
  static ClosedForm monomial(Rational coeff, int pi = 0, int ln2 = 0, int zeta3 = 0, int catalan = 0);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + (-b); }
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(Rational r, const ClosedForm& a);
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  /// Report grammar, e.g. "1/12*PI^2*LN2 + 1/3*LN2^3 - 1/2*ZETA3"; "0" if empty.
  std::string str() const;

private:
  void insert(const Term& t);
  std::vector<Term> terms_;
};

/// Sum of coeff * prod(constant^power) with compensated accumulation.
PreciseValue eval_closed_form(const ClosedForm& cf);

} // namespace altsum
