#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuskit/quadratic.hpp"

namespace fuskit {

using BigInt = boost::multiprecision::cpp_int;

// Square matrix of non-negative integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  static IntMatrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

// Integer polynomial; coefficient i multiplies x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  // Convenience for literals, lowest degree first: {-1, -1, 1} is x^2 - x - 1.
  IntPoly(std::initializer_list<std::int64_t> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  BigInt eval(const BigInt& x) const;
  // Exact evaluation at a quadratic irrational.
  bool vanishes_at(const QuadraticReal& q) const;
  // Remainder of division by the monic polynomial `divisor`.
  IntPoly remainder_monic(const IntPoly& divisor) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // e.g. "x^2 - x - 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// det(xI - M) by the division-free Berkowitz recurrence; monic.
IntPoly char_poly(const IntMatrix& m);

// Exact root of poly within tol of approx whose minimal polynomial has
// degree <= 2, if there is one.
std::optional<QuadraticReal> recognize(double approx, const IntPoly& poly, double tol = 1e-6);

// Largest real eigenvalue of a non-negative matrix. Power iteration on M + I
// bracketed by Collatz-Wielandt bounds; upgraded to an exact value when the
// root is rational or quadratic.
RealValue perron_root(const IntMatrix& m);

struct PerronOptions {
  double tolerance = 1e-12;
  long max_iterations = 1'000'000;
};
RealValue perron_root(const IntMatrix& m, const PerronOptions& options);

}  // namespace fuskit
