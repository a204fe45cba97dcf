// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/realcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace altsum {

double ulp(double x) noexcept {
  const double ax = std::fabs(x);
  if (!std::isfinite(ax)) return std::numeric_limits<double>::infinity();
  return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

//----------------------------------------------------------------------
// PreciseValue

PreciseValue::PreciseValue(double value, double abs_error) : value_(value), abs_error_(abs_error) {
  if (!std::isfinite(value)) throw DomainError("PreciseValue: non-finite value");
  if (!std::isfinite(abs_error) || abs_error < 0.0) throw DomainError("PreciseValue: invalid error bound");
}

bool PreciseValue::contains(double x, double slack) const noexcept {
  return std::fabs(value_ - x) <= abs_error_ + slack;
}

PreciseValue PreciseValue::operator-() const noexcept {
  PreciseValue r;
  r.value_ = -value_;
  r.abs_error_ = abs_error_;
  return r;
}

PreciseValue operator+(const PreciseValue& a, const PreciseValue& b) {
  const double v = a.value_ + b.value_;
  return {v, a.abs_error_ + b.abs_error_ + ulp(v)};
}

PreciseValue operator-(const PreciseValue& a, const PreciseValue& b) {
  const double v = a.value_ - b.value_;
  return {v, a.abs_error_ + b.abs_error_ + ulp(v)};
}

PreciseValue operator*(const PreciseValue& a, const PreciseValue& b) {
  const double v = a.value_ * b.value_;
  const double e = std::fabs(a.value_) * b.abs_error_ + std::fabs(b.value_) * a.abs_error_ +
                   a.abs_error_ * b.abs_error_;
  return {v, e + ulp(v)};
}

PreciseValue operator/(const PreciseValue& a, const PreciseValue& b) {
  if (std::fabs(b.value_) <= b.abs_error_) throw DomainError("PreciseValue: division by a value not bounded away from 0");
  const double v = a.value_ / b.value_;
  const double denom = std::fabs(b.value_) - b.abs_error_;
  const double e = (a.abs_error_ + std::fabs(v) * b.abs_error_) / denom;
  return {v, e + ulp(v)};
}

PreciseValue log(const PreciseValue& x) {
  if (x.value() <= 0.0) throw DomainError("log: argument must be positive");
  const double v = std::log(x.value());
  return {v, x.abs_error() / x.value() + ulp(v)};
}

PreciseValue log1p(const PreciseValue& x) {
  if (x.value() <= -1.0) throw DomainError("log1p: argument must exceed -1");
  const double v = std::log1p(x.value());
  return {v, x.abs_error() / (1.0 + x.value()) + ulp(v)};
}

PreciseValue pow(const PreciseValue& x, int k) {
  if (k < 0) throw UsageError("pow: negative exponent");
  PreciseValue r = PreciseValue::exact(1.0);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

//----------------------------------------------------------------------
// CompensatedSum

void CompensatedSum::add(double x) {
  if (!std::isfinite(x)) throw std::overflow_error("compensated sum: non-finite term");
  const double t = sum_ + x;
  if (!std::isfinite(t)) throw std::overflow_error("compensated sum: overflow");
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
  abs_total_ += std::fabs(x);
  ++count_;
}

double CompensatedSum::error_bound() const noexcept {
  const double n = static_cast<double>(count_);
  return 2.0 * kEps * std::fabs(value()) + 2.0 * n * kEps * kEps * abs_total_;
}

PreciseValue compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double x : terms) acc.add(x);
  return acc.result();
}

//----------------------------------------------------------------------
// Constants

namespace {

constexpr std::array<std::string_view, kConstantCount> kNames{"PI", "LN2", "ZETA3", "CATALAN"};

constexpr std::array<std::string_view, kConstantCount> kDigits{
    "3.14159265358979323846264338328",
    "0.693147180559945309417232121458",
    "1.20205690315959428539973816151",
    "0.915965594177219015054603514932",
};

struct Table {
  std::array<double, kConstantCount> hi{};
  std::array<double, kConstantCount> lo{};
};

const Table& table() {
  static const Table t = [] {
    Table out;
    for (std::size_t i = 0; i < kConstantCount; ++i) {
      const std::string s(kDigits[i]);
      out.hi[i] = std::strtod(s.c_str(), nullptr);
      const long double wide = std::strtold(s.c_str(), nullptr);
      out.lo[i] = static_cast<double>(wide - static_cast<long double>(out.hi[i]));
    }
    return out;
  }();
  return t;
}

} // namespace

std::string_view constant_name(Constant c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

Constant parse_constant(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (std::size_t i = 0; i < kConstantCount; ++i) {
    if (upper == kNames[i]) return static_cast<Constant>(i);
  }
  throw UsageError("unknown constant '" + std::string(name) + "' (expected pi, ln2, zeta3 or catalan)");
}

std::string_view constant_digits(Constant c) noexcept { return kDigits[static_cast<std::size_t>(c)]; }

PreciseValue constant(Constant c) {
  const double v = table().hi[static_cast<std::size_t>(c)];
  return {v, ulp(v)};
}

PreciseValue constant(std::string_view name) { return constant(parse_constant(name)); }

double constant_lo(Constant c) noexcept { return table().lo[static_cast<std::size_t>(c)]; }

//----------------------------------------------------------------------
// Rational

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: coefficient overflow");
  return r;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UsageError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t den = checked_mul(a.den_ / g, b.den_);
  const std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
  return {num, den};
}

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
  const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
  const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
  return {checked_mul(n1, n2), checked_mul(d1, d2)};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

//----------------------------------------------------------------------
// ClosedForm

ClosedForm::ClosedForm(std::span<const Term> terms) {
  for (const Term& t : terms) insert(t);
}

ClosedForm ClosedForm::rational(Rational r) { return monomial(r); }

ClosedForm ClosedForm::monomial(Rational coeff, int pi, int ln2, int zeta3, int catalan) {
  if (pi < 0 || ln2 < 0 || zeta3 < 0 || catalan < 0) throw UsageError("ClosedForm: negative exponent");
  ClosedForm cf;
  cf.insert(Term{coeff, {pi, ln2, zeta3, catalan}});
  return cf;
}

void ClosedForm::insert(const Term& t) {
  if (t.coeff.is_zero()) return;
  // Descending lexicographic order on the exponent vector.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t.exponents,
                             [](const Term& lhs, const Exponents& e) { return lhs.exponents > e; });
  if (it != terms_.end() && it->exponents == t.exponents) {
    it->coeff = it->coeff + t.coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, t);
  }
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r = a;
  for (const auto& t : b.terms_) r.insert(t);
  return r;
}

ClosedForm operator-(const ClosedForm& a) {
  ClosedForm r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      ClosedForm::Term t{x.coeff * y.coeff, {}};
      for (std::size_t i = 0; i < kConstantCount; ++i) t.exponents[i] = x.exponents[i] + y.exponents[i];
      r.insert(t);
    }
  }
  return r;
}

ClosedForm operator*(Rational r, const ClosedForm& a) { return ClosedForm::rational(r) * a; }

std::string ClosedForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.num() < 0;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < kConstantCount; ++i) {
      const int p = t.exponents[i];
      if (p == 0) continue;
      std::string f(kNames[i]);
      if (p > 1) f += "^" + std::to_string(p);
      factors.push_back(std::move(f));
    }
    const bool unit = mag.num() == 1 && mag.den() == 1;
    if (!unit || factors.empty()) {
      out << mag.str();
      if (!factors.empty()) out << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

PreciseValue eval_closed_form(const ClosedForm& cf) {
  CompensatedSum acc;
  double propagated = 0.0;
  for (const auto& t : cf.terms()) {
    PreciseValue term{t.coeff.to_double(), ulp(t.coeff.to_double())};
    for (std::size_t i = 0; i < kConstantCount; ++i) {
      term *= pow(constant(static_cast<Constant>(i)), t.exponents[i]);
    }
    acc.add(term.value());
    propagated += term.abs_error();
  }
  return {acc.value(), propagated + acc.error_bound()};
}

} // namespace altsum
