#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fuskit/rational.hpp"

namespace fuskit {

// Exact real number a + b*sqrt(n) with rational a, b and square-free n >= 0.
// Canonical form: b == 0 iff n == 0, so pure rationals always have n == 0.
class QuadraticReal {
 public:
  QuadraticReal() = default;
  QuadraticReal(Rational a) : a_(a) {}  // NOLINT: implicit by intent
  QuadraticReal(std::int64_t a) : a_(a) {}  // NOLINT
  // n may carry square factors; they are pulled into b.
  QuadraticReal(Rational a, Rational b, std::int64_t n);

  static QuadraticReal sqrt(std::int64_t n) { return {0, 1, n}; }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& irrational_part() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return n_; }

  bool is_rational() const noexcept { return n_ == 0; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  int sign() const;
  double to_double() const noexcept;

  // True when x and y live in a common field Q(sqrt(n)).
  friend bool same_field(const QuadraticReal& x, const QuadraticReal& y) noexcept {
    return x.n_ == 0 || y.n_ == 0 || x.n_ == y.n_;
  }

  QuadraticReal operator-() const;
  QuadraticReal conjugate() const;
  QuadraticReal inverse() const;

  // All binary operations throw FieldMismatch when the operands need
  // different radicands, DivisionByZero for a zero divisor.
  friend QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y);
  QuadraticReal& operator+=(const QuadraticReal& y) { return *this = *this + y; }
  QuadraticReal& operator*=(const QuadraticReal& y) { return *this = *this * y; }

  friend bool operator==(const QuadraticReal&, const QuadraticReal&) = default;
  // Exact ordering; FieldMismatch across fields.
  friend std::strong_ordering operator<=>(const QuadraticReal& x, const QuadraticReal& y);

  // "a", or "a+b*sqrt(n)" / "a-b*sqrt(n)" with reduced rationals.
  std::string to_string() const;
  static QuadraticReal parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
  std::int64_t n_ = 0;
};

// Floating estimate whose true value lies within eps of value.
struct Approx {
  double value = 0.0;
  double eps = 0.0;
};

// Either an exact quadratic number or a bounded floating approximation.
class RealValue {
 public:
  RealValue() = default;
  RealValue(QuadraticReal q) : v_(std::move(q)) {}  // NOLINT
  RealValue(Approx a) : v_(a) {}  // NOLINT

  bool is_exact() const noexcept { return std::holds_alternative<QuadraticReal>(v_); }
  const QuadraticReal& exact() const;
  double value() const noexcept;
  double eps() const noexcept;

  friend RealValue operator+(const RealValue& x, const RealValue& y);
  friend RealValue operator*(const RealValue& x, const RealValue& y);


  // Exact values print as QuadraticReal strings, approximations as "~<decimal>".
  std::string to_string() const;

 private:
  std::variant<QuadraticReal, Approx> v_;
};

// Exact comparison when both sides are exact in one field, numeric
// within tol + eps otherwise.
bool approx_equal(const RealValue& x, const RealValue& y, double tol = 1e-9);
// Total order for sorting: exact where possible, by value otherwise.
bool value_less(const RealValue& x, const RealValue& y);

}  // namespace fuskit
