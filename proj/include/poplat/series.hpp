#pragma once

// Truncated power series in x whose coefficients are polynomials in y, with
// exact rational arithmetic. Every operation is exact through x^order.

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "poplat/core.hpp"
#include "poplat/formulas.hpp"
#include "poplat/qpolynomial.hpp"

namespace poplat {

using Rational = boost::multiprecision::cpp_rational;

class BiSeries {
 public:
  BiSeries() = default;
  explicit BiSeries(int order) : order_(order), rows_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw InvalidInput("series order must be non-negative");
  }

  static BiSeries constant(int order, const Rational& c) {
    BiSeries s(order);
    s.set(0, 0, c);
    return s;
  }
  static BiSeries monomial(int order, int dx, int dy, const Rational& c = 1) {
    BiSeries s(order);
    if (dx <= order) s.set(dx, dy, c);
    return s;
  }

  int order() const noexcept { return order_; }

  Rational coefficient(int n, int k) const {
    if (n < 0 || n > order_ || k < 0) return 0;
    const auto& row = rows_[n];
    return k < static_cast<int>(row.size()) ? row[k] : Rational(0);
  }

  /// Coefficients of x^n as a polynomial in y, index = y-degree.
  std::vector<Rational> row(int n) const {
    if (n < 0 || n > order_) throw InvalidInput("row beyond truncation order");
    return rows_[n];
  }

  void set(int n, int k, const Rational& c) {
    if (n < 0 || k < 0) throw InvalidInput("negative exponent");
    if (n > order_) return;
    auto& row = rows_[n];
    if (k >= static_cast<int>(row.size())) row.resize(k + 1);
    row[k] = c;
    trim(row);
  }
  void add_to(int n, int k, const Rational& c) { set(n, k, coefficient(n, k) + c); }

  /// [x^n] with y = value.
  Rational at_y(int n, const Rational& value) const {
    Rational total = 0, power = 1;
    for (const auto& c : rows_.at(n)) {
      total += c * power;
      power *= value;
    }
    return total;
  }

  /// [x^n] as an integer polynomial in q (standing in for y); throws if some
  /// coefficient is not an integer.
  QPolynomial row_polynomial(int n) const {
    QPolynomial p;
    const auto& row = rows_.at(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      if (denominator(row[k]) != 1) {
        throw InexactDivision("coefficient [x^" + std::to_string(n) + " y^" + std::to_string(k) + "] is not integral");
      }
      p.add_term(static_cast<int>(k), numerator(row[k]));
    }
    return p;
  }

  bool all_integral() const {
    for (const auto& row : rows_) {
      for (const auto& c : row) {
        if (denominator(c) != 1) return false;
      }
    }
    return true;
  }

  BiSeries truncated(int order) const {
    BiSeries out(std::min(order, order_));
    for (int n = 0; n <= out.order_; ++n) out.rows_[n] = rows_[n];
    return out;
  }

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    const int order = std::min(a.order_, b.order_);
    for (int n = 0; n <= order; ++n) {
      if (a.rows_[n] != b.rows_[n]) return false;
    }
    return true;
  }

  BiSeries& operator+=(const BiSeries& o) {
    order_ = std::min(order_, o.order_);
    rows_.resize(order_ + 1);
    for (int n = 0; n <= order_; ++n) {
      auto& row = rows_[n];
      const auto& other = o.rows_[n];
      if (other.size() > row.size()) row.resize(other.size());
      for (std::size_t k = 0; k < other.size(); ++k) row[k] += other[k];
      trim(row);
    }
    return *this;
  }
  BiSeries& operator-=(const BiSeries& o) { return *this += o * Rational(-1); }
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(const BiSeries& a) { return a * Rational(-1); }

  friend BiSeries operator*(BiSeries a, const Rational& c) {
    for (auto& row : a.rows_) {
      for (auto& v : row) v *= c;
      trim(row);
    }
    return a;
  }
  friend BiSeries operator*(const Rational& c, BiSeries a) { return std::move(a) * c; }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.order_, b.order_));
    for (int i = 0; i <= out.order_; ++i) {
      if (a.rows_[i].empty()) continue;
      for (int j = 0; i + j <= out.order_; ++j) {
        if (b.rows_[j].empty()) continue;
        auto& row = out.rows_[i + j];
        const auto& ra = a.rows_[i];
        const auto& rb = b.rows_[j];
        if (row.size() < ra.size() + rb.size() - 1) row.resize(ra.size() + rb.size() - 1);
        for (std::size_t p = 0; p < ra.size(); ++p) {
          if (ra[p] == 0) continue;
          for (std::size_t q = 0; q < rb.size(); ++q) row[p + q] += ra[p] * rb[q];
        }
      }
    }
    for (auto& row : out.rows_) trim(row);
    return out;
  }
  BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

  /// Multiply by x^dx y^dy; the truncation order moves by dx. Negative shifts
  /// must be exact: a coefficient landing on a negative exponent raises
  /// SeriesDomainError.
  BiSeries shifted(int dx, int dy) const {
    const int order = order_ + dx;
    if (order < 0) throw SeriesDomainError("shift leaves no coefficients");
    BiSeries out(order);
    for (int n = 0; n <= order_; ++n) {
      for (std::size_t k = 0; k < rows_[n].size(); ++k) {
        const auto& c = rows_[n][k];
        if (c == 0) continue;
        const int nn = n + dx, kk = static_cast<int>(k) + dy;
        if (nn < 0 || kk < 0) throw SeriesDomainError("inexact division by a monomial");
        out.set(nn, kk, c);
      }
    }
    return out;
  }

  /// 1/S; the x^0 coefficient must be a non-zero constant.
  BiSeries inverse() const {
    const Rational c0 = unit_constant("inverse");
    BiSeries out(order_);
    out.set(0, 0, 1 / c0);
    for (int n = 1; n <= order_; ++n) {
      // out_n = -(1/c0) * sum_{i=1..n} s_i out_{n-i}
      std::vector<Rational> acc;
      for (int i = 1; i <= n; ++i) accumulate_product(acc, rows_[i], out.rows_[n - i]);
      for (auto& v : acc) v = -v / c0;
      trim(acc);
      out.rows_[n] = std::move(acc);
    }
    return out;
  }

  /// Square root with constant term 1; the x^0 coefficient must be exactly 1.
  BiSeries sqrt() const {
    if (!(rows_[0].size() == 1 && rows_[0][0] == 1)) {
      throw SeriesDomainError("sqrt needs constant term 1");
    }
    BiSeries out(order_);
    out.set(0, 0, 1);
    for (int n = 1; n <= order_; ++n) {
      // 2 out_n = s_n - sum_{i=1..n-1} out_i out_{n-i}
      std::vector<Rational> acc;
      for (int i = 1; i < n; ++i) accumulate_product(acc, out.rows_[i], out.rows_[n - i]);
      std::vector<Rational> row = rows_[n];
      if (row.size() < acc.size()) row.resize(acc.size());
      for (std::size_t k = 0; k < acc.size(); ++k) row[k] -= acc[k];
      for (auto& v : row) v /= 2;
      trim(row);
      out.rows_[n] = std::move(row);
    }
    return out;
  }

  /// S(x^2, y), truncated to `order`.
  BiSeries substitute_x_squared(int order) const {
    if (order > 2 * order_ + 1) throw SeriesDomainError("substitute_x_squared: source series too short");
    BiSeries out(order);
    for (int n = 0; 2 * n <= order; ++n) out.rows_[2 * n] = rows_[n];
    return out;
  }

  /// S(x, y^2).
  BiSeries substitute_y_squared() const {
    BiSeries out(order_);
    for (int n = 0; n <= order_; ++n) {
      for (std::size_t k = 0; k < rows_[n].size(); ++k) {
        if (rows_[n][k] != 0) out.set(n, 2 * static_cast<int>(k), rows_[n][k]);
      }
    }
    return out;
  }

  /// Sum of a_{2t+1} x^{t+1}: sqrt(x) times the odd part of S at sqrt(x).
  BiSeries odd_part_at_sqrt() const {
    const int order = (order_ + 1) / 2;
    BiSeries out(order);
    for (int t = 0; 2 * t + 1 <= order_; ++t) out.rows_[t + 1] = rows_[2 * t + 1];
    return out;
  }

  /// Sum of a_{2t} x^t: the even part of S at sqrt(x).
  BiSeries even_part_at_sqrt() const {
    BiSeries out(order_ / 2);
    for (int t = 0; 2 * t <= order_; ++t) out.rows_[t] = rows_[2 * t];
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int n = 0; n <= order_; ++n) {
      for (std::size_t k = 0; k < rows_[n].size(); ++k) {
        if (rows_[n][k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + rows_[n][k].str() + ")x^" + std::to_string(n) + "y^" + std::to_string(k);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  static void trim(std::vector<Rational>& row) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }

  static void accumulate_product(std::vector<Rational>& acc, const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return;
    if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (a[p] == 0) continue;
      for (std::size_t q = 0; q < b.size(); ++q) acc[p + q] += a[p] * b[q];
    }
  }

  Rational unit_constant(const char* op) const {
    if (rows_[0].size() != 1 || rows_[0][0] == 0) {
      throw SeriesDomainError(std::string(op) + " needs a non-zero constant term free of y");
    }
    return rows_[0][0];
  }

  int order_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

// ---------------------------------------------------------------------------
// Solvers.

inline constexpr int series_max_order = 16;

namespace detail {
inline void check_order(int order) {
  if (order < 0) throw InvalidInput("series order must be non-negative");
  if (order > series_max_order) {
    throw GuardExceeded("series order " + std::to_string(order) + " exceeds the guard of " +
                        std::to_string(series_max_order));
  }
}

/// Iterates s <- step(s) from s = 1. Each round must fix one more x-degree;
/// the result is returned once a round changes nothing.
template <class Step>
BiSeries fixed_point(int order, Step&& step, const char* name) {
  BiSeries current = BiSeries::constant(order, 1);
  for (int round = 0; round <= order + 2; ++round) {
    BiSeries next = step(current);
    if (next == current) return next;
    for (int n = 0; n < round && n <= order; ++n) {
      if (next.row(n) != current.row(n)) {
        throw Error(std::string(name) + ": iterate " + std::to_string(round) + " changed x^" + std::to_string(n));
      }
    }
    current = std::move(next);
  }
  throw Error(std::string(name) + ": fixed-point iteration did not converge");
}
}  // namespace detail

/// G = 1 + xyG + x(G-1) + x^2 y G(G-1): ffrr-avoiding paths by semi-length and peaks.
inline BiSeries solve_G(int order) {
  detail::check_order(order);
  const BiSeries one = BiSeries::constant(order, 1);
  const BiSeries x = BiSeries::monomial(order, 1, 0);
  const BiSeries xy = BiSeries::monomial(order, 1, 1);
  const BiSeries xxy = BiSeries::monomial(order, 2, 1);
  return detail::fixed_point(
      order, [&](const BiSeries& g) { return one + xy * g + x * (g - one) + xxy * g * (g - one); }, "solve_G");
}

inline BiSeries solve_H(int order) { return solve_G(order) - BiSeries::constant(order, 1); }

/// F = 1 + x(G-1) + xy.
inline BiSeries solve_F(int order) {
  detail::check_order(order);
  const BiSeries g = solve_G(order);
  const BiSeries one = BiSeries::constant(order, 1);
  return one + BiSeries::monomial(order, 1, 0) * (g - one) + BiSeries::monomial(order, 1, 1);
}

namespace detail {
inline BiSeries solve_I_unchecked(int order) {
  const BiSeries one = BiSeries::constant(order, 1);
  const BiSeries g2 = solve_G(order / 2).substitute_x_squared(order) - one;
  const BiSeries x = BiSeries::monomial(order, 1, 0);
  const BiSeries xy = BiSeries::monomial(order, 1, 1);
  const BiSeries a = BiSeries::monomial(order, 2, 1) + x + BiSeries::monomial(order, 4, 1) * g2;
  const BiSeries b = one + BiSeries::monomial(order, 3, 1) * g2 - x + xy;
  return fixed_point(order, [&](const BiSeries& i) { return b + a * i; }, "solve_I");
}
}  // namespace detail

/// I = 1 + x^2 y I + x I + x^4 y I (G(x^2,y)-1) + x^3 y (G(x^2,y)-1) - x + xy:
/// symmetric ffrr-avoiding paths by semi-length and peaks left of the centre.
inline BiSeries solve_I(int order) {
  detail::check_order(order);
  return detail::solve_I_unchecked(order);
}

/// J = 1 + sqrt(x) * odd part of I at sqrt(x): each image path is r w f with
/// w a symmetric path of odd semi-length, and x marks half the semi-length.
/// Needs I through x^{2 order - 1}.
inline BiSeries solve_J(int order) {
  detail::check_order(order);
  if (order == 0) return BiSeries::constant(0, 1);
  return BiSeries::constant(order, 1) + detail::solve_I_unchecked(2 * order - 1).odd_part_at_sqrt();
}

/// (w^2 + 4z)^{-1/2} with w = 1 + xy and z = xy/(x-1) = -xy(1 + x + x^2 + ...).
inline BiSeries radical_J(int order) {
  detail::check_order(order);
  BiSeries w = BiSeries::constant(order, 1) + BiSeries::monomial(order, 1, 1);
  BiSeries z(order);
  for (int t = 1; t <= order; ++t) z.set(t, 1, -1);
  return (w * w + Rational(4) * z).sqrt().inverse();
}

inline bool radical_check_J(int order) { return radical_J(order) == solve_J(order); }

// ---------------------------------------------------------------------------
// Tam(B_n) series.

/// Pop(Tam(A)) image elements of every length, x^len y^des. An element of
/// length n+1 with k descents has n-k upper covers; there are
/// C(2k,k)/(k+1) * C(n,2k) of them.
inline BiSeries series_M(int order) {
  detail::check_order(order);
  BiSeries m(order);
  for (int n = 0; n + 1 <= order; ++n) {
    for (int k = 0; 2 * k <= n; ++k) m.set(n + 1, k, Rational(catalan(k) * binomial(n, 2 * k)));
  }
  return m;
}

/// Same elements weighted by upper covers instead of descents.
inline BiSeries series_M_by_upper_covers(int order) {
  detail::check_order(order);
  BiSeries m(order);
  for (int n = 0; n + 1 <= order; ++n) {
    for (int k = 0; 2 * k <= n; ++k) m.set(n + 1, n - k, Rational(catalan(k) * binomial(n, 2 * k)));
  }
  return m;
}

/// x (1 - x - sqrt((1-x)^2 - 4x^2y^2)) / (2x^2y^2), the radical form of M(x, y^2).
inline BiSeries radical_M_y_squared(int order) {
  detail::check_order(order);
  const int work = order + 1;  // one x-degree is lost dividing by x^2 and regained multiplying by x
  const BiSeries one = BiSeries::constant(work, 1);
  const BiSeries x = BiSeries::monomial(work, 1, 0);
  const BiSeries disc = (one - x) * (one - x) - BiSeries::monomial(work, 2, 2, 4);
  const BiSeries numerator = one - x - disc.sqrt();
  return (numerator.shifted(-2, -2) * Rational(1, 2)).shifted(1, 0).truncated(order);
}

struct TamBSeries {
  BiSeries M, M2, P, Q, N, K;
};

inline TamBSeries solve_tam_b_series(int order) {
  detail::check_order(order);
  TamBSeries s;
  s.M = series_M(order);
  s.M2 = s.M.substitute_y_squared();
  const BiSeries y = BiSeries::monomial(order, 0, 1);
  const BiSeries denominator_inverse = (BiSeries::constant(order, 1) - y * s.M2).inverse();
  s.P = BiSeries::monomial(order, 0, 2) * s.M2 * s.M2 * denominator_inverse;
  s.Q = s.M2 * denominator_inverse;
  s.N = s.P + s.Q;
  // An image element of B_n with d descents has n - ceil(d/2) upper covers.
  s.K = BiSeries(order);
  for (int n = 0; n <= order; ++n) {
    const auto row = s.N.row(n);
    for (int d = 0; d < static_cast<int>(row.size()); ++d) {
      if (row[d] != 0) s.K.add_to(n, n - (d + 1) / 2, row[d]);
    }
  }
  return s;
}

/// N_0 and N_1 from their binomial coefficient forms.
inline BiSeries series_N0(int order) {
  BiSeries s(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; 2 * k <= n + 1; ++k) s.set(n, 2 * k, Rational(binomial(n, k) * binomial(n + 1 - k, k)));
  }
  return s;
}

inline BiSeries series_N1(int order) {
  BiSeries s(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; 2 * k <= n; ++k) s.set(n, 2 * k, Rational(binomial(n, k + 1) * binomial(n - k, k)));
  }
  return s;
}

/// L = (1 - (2xy/(1-x))^2)^{1/2}.
inline BiSeries series_L(int order) {
  detail::check_order(order);
  const BiSeries one = BiSeries::constant(order, 1);
  BiSeries geometric(order);  // 1/(1-x)
  for (int n = 0; n <= order; ++n) geometric.set(n, 0, 1);
  const BiSeries t = BiSeries::monomial(order, 1, 1, 2) * geometric;
  return (one - t * t).sqrt();
}

/// N_0 = 1/(1-x) + (1+x)/(2x(1-x)) (1/L - 1), computed through L.
inline BiSeries radical_N0(int order) {
  const int work = order + 1;
  const BiSeries one = BiSeries::constant(work, 1);
  BiSeries geometric(work);
  for (int n = 0; n <= work; ++n) geometric.set(n, 0, 1);
  const BiSeries l = series_L(work);
  const BiSeries tail = ((l.inverse() - one).shifted(-1, 0));
  const BiSeries lead = (one + BiSeries::monomial(work, 1, 0)) * geometric * Rational(1, 2);
  return (geometric.truncated(order) + lead.truncated(order) * tail).truncated(order);
}

/// N_1 = (1-x)^{-2} ((x+1)/L - (1/2)((1-x)/(xy))^2 (1 - L)), computed through L.
inline BiSeries radical_N1(int order) {
  const int work = order + 2;
  const BiSeries one = BiSeries::constant(work, 1);
  const BiSeries x = BiSeries::monomial(work, 1, 0);
  BiSeries geometric(work);
  for (int n = 0; n <= work; ++n) geometric.set(n, 0, 1);
  const BiSeries l = series_L(work);
  const BiSeries first = (x + one) * l.inverse();
  const BiSeries second = ((one - x) * (one - x) * (one - l)).shifted(-2, -2) * Rational(1, 2);
  return (geometric * geometric).truncated(order) * (first.truncated(order) - second.truncated(order));
}

}  // namespace poplat
