#include "fuskit/quadratic.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>

#include "fuskit/error.hpp"

namespace fuskit {

namespace {

void require_same_field(const QuadraticReal& x, const QuadraticReal& y) {
  if (!same_field(x, y))
    throw Error(Errc::FieldMismatch, "operands live in Q(sqrt(" + std::to_string(x.radicand()) +
                                         ")) and Q(sqrt(" + std::to_string(y.radicand()) + "))");
}

std::int64_t common_radicand(const QuadraticReal& x, const QuadraticReal& y) {
  return x.radicand() != 0 ? x.radicand() : y.radicand();
}

}  // namespace

QuadraticReal::QuadraticReal(Rational a, Rational b, std::int64_t n) : a_(a) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative radicand");
  if (b.is_zero() || n == 0) return;
  // Pull square factors out of n.
  std::int64_t factor = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      factor *= p;
    }
  }
  b *= Rational(factor);
  if (n == 1) {
    a_ += b;
    return;
  }
  b_ = b;
  n_ = n;
}

int QuadraticReal::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 n.
  const Rational a2 = a_ * a_;
  const Rational b2n = b_ * b_ * Rational(n_);
  const auto c = a2 <=> b2n;
  if (c == 0) return 0;  // unreachable for square-free n > 1
  return (c > 0) ? sa : sb;
}

double QuadraticReal::to_double() const noexcept {
  const long double a = static_cast<long double>(a_.num()) / a_.den();
  const long double b = static_cast<long double>(b_.num()) / b_.den();
  return static_cast<double>(a + b * std::sqrt(static_cast<long double>(n_)));
}

QuadraticReal QuadraticReal::operator-() const {
  QuadraticReal r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

QuadraticReal QuadraticReal::conjugate() const {
  QuadraticReal r = *this;
  r.b_ = -b_;
  return r;
}

QuadraticReal QuadraticReal::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  // 1/(a+b√n) = (a-b√n)/(a²-b²n)
  const Rational norm = a_ * a_ - b_ * b_ * Rational(n_);
  return QuadraticReal(a_ / norm, -b_ / norm, n_);
}

QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y) {
  require_same_field(x, y);
  return QuadraticReal(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
}

QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y) { return x + (-y); }

QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y) {
  require_same_field(x, y);
  const std::int64_t n = common_radicand(x, y);
  const Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(n);
  const Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadraticReal(a, b, n);
}

QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y) {
  require_same_field(x, y);
  return x * y.inverse();
}

std::strong_ordering operator<=>(const QuadraticReal& x, const QuadraticReal& y) {
  const int s = (x - y).sign();
  return s <=> 0;
}

std::string QuadraticReal::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string out = a_.to_string();
  out += (b_.sign() < 0) ? "-" : "+";
  out += (b_.sign() < 0 ? -b_ : b_).to_string();
  out += "*sqrt(" + std::to_string(n_) + ")";
  return out;
}

QuadraticReal QuadraticReal::parse(std::string_view text) {
  const auto bad = [&] { return Error(Errc::ParseError, "bad quadratic: '" + std::string(text) + "'"); };
  const auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return QuadraticReal(Rational::parse(text));
  if (text.back() != ')') throw bad();
  const auto radicand = Rational::parse(text.substr(star + 6, text.size() - star - 7));
  if (!radicand.is_integer()) throw bad();
  // Split "a±b" at the last sign that is not the leading one.
  const std::string_view head = text.substr(0, star);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a, b;
  if (split == std::string_view::npos) {
    b = Rational::parse(head);
  } else {
    a = Rational::parse(head.substr(0, split));
    b = Rational::parse(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  return QuadraticReal(a, b, radicand.num());
}

// ---------------------------------------------------------------------------

const QuadraticReal& RealValue::exact() const {
  if (const auto* q = std::get_if<QuadraticReal>(&v_)) return *q;
  throw Error(Errc::InvalidArgument, "value is not exact");
}

double RealValue::value() const noexcept {
  if (const auto* q = std::get_if<QuadraticReal>(&v_)) return q->to_double();
  return std::get<Approx>(v_).value;
}

double RealValue::eps() const noexcept {
  if (const auto* a = std::get_if<Approx>(&v_)) return a->eps;
  return 0.0;
}

namespace {

double rounding(double v) { return 4 * DBL_EPSILON * std::fabs(v); }

bool exact_pair(const RealValue& x, const RealValue& y) {
  return x.is_exact() && y.is_exact() && same_field(x.exact(), y.exact());
}

}  // namespace

RealValue operator+(const RealValue& x, const RealValue& y) {
  if (exact_pair(x, y)) return RealValue(x.exact() + y.exact());
  const double v = x.value() + y.value();
  return RealValue(Approx{v, x.eps() + y.eps() + rounding(v)});
}

RealValue operator*(const RealValue& x, const RealValue& y) {
  if (exact_pair(x, y)) return RealValue(x.exact() * y.exact());
  const double v = x.value() * y.value();
  const double e = std::fabs(x.value()) * y.eps() + std::fabs(y.value()) * x.eps() + x.eps() * y.eps();
  return RealValue(Approx{v, e + rounding(v)});
}

bool approx_equal(const RealValue& x, const RealValue& y, double tol) {
  if (x.is_exact() && y.is_exact()) {
    // Distinct irrational radicands can never agree, and exact values in
    // one field compare exactly.
    if (same_field(x.exact(), y.exact())) return x.exact() == y.exact();
    return false;
  }
  return std::fabs(x.value() - y.value()) <= tol + x.eps() + y.eps();
}

bool value_less(const RealValue& x, const RealValue& y) {
  if (exact_pair(x, y)) return x.exact() < y.exact();
  return x.value() < y.value();
}

std::string RealValue::to_string() const {
  if (const auto* q = std::get_if<QuadraticReal>(&v_)) return q->to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "~%.15g", std::get<Approx>(v_).value);
  return buf;
}

}  // namespace fuskit
