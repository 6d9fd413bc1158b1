#include "fuskit/polynomial.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuskit/error.hpp"

namespace fuskit {

using boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size(), 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(Errc::InvalidArgument, "matrix must be square");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) {
  for (auto v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPoly::vanishes_at(const QuadraticReal& q) const {
  const cpp_rational a(q.rational_part().num(), q.rational_part().den());
  const cpp_rational b(q.irrational_part().num(), q.irrational_part().den());
  const cpp_rational n(q.radicand());
  cpp_rational ra = 0, rb = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const cpp_rational na = ra * a + rb * b * n + cpp_rational(*it);
    const cpp_rational nb = ra * b + rb * a;
    ra = na;
    rb = nb;
  }
  return ra == 0 && rb == 0;
}

IntPoly IntPoly::remainder_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.c_.back() != 1)
    throw Error(Errc::InvalidArgument, "divisor must be monic");
  std::vector<BigInt> r = c_;
  const int dd = divisor.degree();
  for (int top = degree(); top >= dd; --top) {
    const BigInt lead = r[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    for (int k = 0; k <= dd; ++k)
      r[static_cast<std::size_t>(top - dd + k)] -= lead * divisor.c_[static_cast<std::size_t>(k)];
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag;
    if (d >= 1) out << "x";
    if (d >= 2) out << "^" << d;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

// Arithmetic policy for the Berkowitz recurrence: checked 64-bit first,
// arbitrary precision when that overflows.
struct CheckedOps {
  using T = std::int64_t;
  static T add(T a, T b) { return detail::checked_add(a, b); }
  static T mul(T a, T b) { return detail::checked_mul(a, b); }
};
struct BigOps {
  using T = BigInt;
  static T add(const T& a, const T& b) { return a + b; }
  static T mul(const T& a, const T& b) { return a * b; }
};

template <class Ops>
std::vector<typename Ops::T> berkowitz(const IntMatrix& m) {
  using T = typename Ops::T;
  const std::size_t n = m.size();
  // poly[0] is the leading coefficient.
  std::vector<T> poly{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
    std::vector<T> t(k + 2, T(0));
    t[0] = T(1);
    t[1] = T(-m(k, k));
    std::vector<T> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = T(m(i, k));
    for (std::size_t j = 2; j < k + 2; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < k; ++i)
        if (m(k, i) != 0) dot = Ops::add(dot, Ops::mul(T(m(k, i)), w[i]));
      t[j] = Ops::mul(T(-1), dot);
      if (j + 1 < k + 2) {
        std::vector<T> next(k, T(0));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            if (m(r, c) != 0) next[r] = Ops::add(next[r], Ops::mul(T(m(r, c)), w[c]));
        w = std::move(next);
      }
    }
    std::vector<T> next(k + 2, T(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        next[i] = Ops::add(next[i], Ops::mul(t[i - j], poly[j]));
    poly = std::move(next);
  }
  return poly;
}

void require_valid(const IntMatrix& m) {
  if (m.size() == 0) throw Error(Errc::InvalidArgument, "empty matrix");
  bool nonzero = false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) < 0) throw Error(Errc::InvalidArgument, "matrix has a negative entry");
      nonzero |= m(i, j) != 0;
    }
  if (!nonzero) throw Error(Errc::InvalidArgument, "zero matrix has no Perron root");
}

bool is_perfect_square(const BigInt& v) {
  if (v < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(v);
  return r * r == v;
}

// Fujiwara's bound on the modulus of every root.
double root_bound(const IntPoly& p) {
  const auto& c = p.coeffs();
  const double lead = std::fabs(c.back().convert_to<double>());
  double bound = 0.0;
  const int n = p.degree();
  for (int i = 1; i <= n; ++i) {
    const double ratio = std::fabs(c[static_cast<std::size_t>(n - i)].convert_to<double>()) / lead;
    double term = std::pow(ratio, 1.0 / i);
    if (i == n) term = std::pow(ratio / 2, 1.0 / i);
    bound = std::max(bound, term);
  }
  return 2 * bound;
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) < 0) throw Error(Errc::InvalidArgument, "matrix has a negative entry");
  std::vector<BigInt> high_first;
  try {
    for (auto v : berkowitz<CheckedOps>(m)) high_first.emplace_back(v);
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
    high_first = berkowitz<BigOps>(m);
  }
  std::reverse(high_first.begin(), high_first.end());
  return IntPoly(std::move(high_first));
}

std::optional<QuadraticReal> recognize(double approx, const IntPoly& poly, double tol) {
  if (poly.degree() < 1 || !std::isfinite(approx)) return std::nullopt;

  // Linear factor x - a.
  const double rounded = std::nearbyint(approx);
  if (std::fabs(approx - rounded) <= tol && std::fabs(rounded) < 9e15) {
    const auto a = static_cast<std::int64_t>(rounded);
    if (poly.eval(BigInt(a)) == 0) return QuadraticReal(a);
  }

  // Monic quadratic x^2 + b x + c with approx as a root. The other root is
  // also a root of poly, so |b| <= |approx| + bound.
  const double bound = root_bound(poly);
  const auto bmax = static_cast<std::int64_t>(std::ceil(std::fabs(approx) + bound)) + 1;
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    const double cd = -approx * approx - static_cast<double>(b) * approx;
    const double cr = std::nearbyint(cd);
    if (std::fabs(cd - cr) > tol * (2 * std::fabs(approx) + std::fabs(static_cast<double>(b)) + 2))
      continue;
    const auto c = static_cast<std::int64_t>(cr);
    const BigInt disc = BigInt(b) * b - BigInt(4) * c;
    if (disc <= 0 || is_perfect_square(disc)) continue;
    if (disc > BigInt(std::numeric_limits<std::int64_t>::max())) continue;
    const auto d = disc.convert_to<std::int64_t>();
    for (int s : {1, -1}) {
      const QuadraticReal root(Rational(-b, 2), Rational(s, 2), d);
      if (std::fabs(root.to_double() - approx) > tol) continue;
      const IntPoly quad{c, b, 1};
      if (poly.remainder_monic(quad).is_zero()) return root;
    }
  }
  return std::nullopt;
}

RealValue perron_root(const IntMatrix& m) { return perron_root(m, PerronOptions{}); }

namespace {

// Strongly connected components of the support graph (Tarjan, iterative).
std::vector<std::vector<std::size_t>> components(const IntMatrix& m) {
  const std::size_t n = m.size();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unseen), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unseen) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < n) {
        const std::size_t w = next++;
        if (m(v, w) == 0) continue;
        if (index[w] == unseen) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
    }
  }
  return out;
}

// Power iteration on (M + I) restricted to one irreducible block, so the
// iterate stays positive. Returns (rho, eps).
std::pair<double, double> block_radius(const IntMatrix& m, const std::vector<std::size_t>& block,
                                       const PerronOptions& options) {
  const std::size_t n = block.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double v = static_cast<double>(m(block[a], block[b])) + (a == b ? 1.0 : 0.0);
      if (v != 0.0) rows[a].emplace_back(b, v);
    }

  std::vector<double> x(n, 1.0), y(n);
  for (long it = 0; it < options.max_iterations; ++it) {
    double lo = INFINITY, hi = 0.0, top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const auto& [j, v] : rows[i]) s += v * x[j];
      y[i] = s;
      const double ratio = s / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      top = std::max(top, s);
    }
    // Collatz-Wielandt: lo <= rho(M + I) <= hi for positive x.
    if (hi - lo <= options.tolerance * std::max(1.0, hi))
      return {(hi + lo) / 2 - 1.0, (hi - lo) / 2 + 8 * DBL_EPSILON * (hi + 1)};
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = y[i] / top;
      if (!(x[i] > 1e-280)) throw Error(Errc::ConvergenceFailure, "power iteration lost positivity");
    }
  }
  throw Error(Errc::ConvergenceFailure,
              "power iteration did not converge in " + std::to_string(options.max_iterations) + " steps");
}

}  // namespace

RealValue perron_root(const IntMatrix& m, const PerronOptions& options) {
  require_valid(m);

  // The spectrum of a block-triangular matrix is the union of the blocks'.
  double lambda = 0.0, eps = 0.0;
  bool any = false;
  for (const auto& block : components(m)) {
    if (block.size() == 1 && m(block[0], block[0]) == 0) continue;  // contributes eigenvalue 0
    const auto [r, e] = block_radius(m, block, options);
    if (!any || r > lambda) {
      lambda = r;
      eps = e;
    }
    any = true;
  }
  if (!any) return RealValue(QuadraticReal(0));  // nilpotent

  const IntPoly p = char_poly(m);
  if (auto q = recognize(lambda, p)) {
    if (std::fabs(q->to_double() - lambda) <= 1e-9 + eps) return RealValue(*q);
  }
  return RealValue(Approx{lambda, eps});
}

}  // namespace fuskit
