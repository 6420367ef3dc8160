#pragma once

// Closed-form Pop polynomials and coefficient formulas, evaluated exactly.
// Fractional prefactors are applied by exact division of the inner sum; a
// remainder raises InexactDivision.

#include <map>
#include <string>
#include <vector>

#include "poplat/core.hpp"
#include "poplat/qpolynomial.hpp"

namespace poplat {

namespace detail {
inline BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const char* what) {
  if (denominator == 0) throw InexactDivision(std::string(what) + ": division by zero");
  if (numerator % denominator != 0) {
    throw InexactDivision(std::string(what) + ": " + numerator.str() + " is not divisible by " + denominator.str());
  }
  return numerator / denominator;
}

inline BigInt power(long long base, int exponent) { return boost::multiprecision::pow(BigInt(base), exponent); }
}  // namespace detail

/// [q^{n-1}] Pop(Weak(B_n); q) = 3^n - 2n - 1.
inline BigInt weak_b_coefficient(int n) {
  if (n < 1) throw InvalidInput("weak_b_coefficient needs n >= 1");
  return detail::power(3, n) - 2 * n - 1;
}

/// Predicted number of image elements of Weak(B_n) with n-1 upper covers and x_1 = i.
inline BigInt census_prediction(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n) throw InvalidInput("census_prediction: need 1 <= i <= 2n");
  if (i == 1) return detail::power(3, n - 1) - n;
  if (i <= n) return detail::power(2, i - 1) * detail::power(3, n - i);
  return detail::power(2, 2 * n - i) - 1;
}

inline std::map<int, BigInt> census_prediction(int n) {
  std::map<int, BigInt> out;
  for (int i = 1; i <= 2 * n; ++i) out[i] = census_prediction(n, i);
  return out;
}

inline QPolynomial tam_b_polynomial(int n) {
  if (n < 1) throw InvalidInput("tam_b_polynomial needs n >= 1");
  QPolynomial p;
  for (int k = 0; k <= (n + 1) / 2; ++k) p.add_term(n - k, binomial(n - 1, k) * binomial(n + 1 - k, k));
  return p;
}

inline QPolynomial tam_a_polynomial(int n) {
  if (n < 0) throw InvalidInput("tam_a_polynomial needs n >= 0");
  QPolynomial p;
  for (int k = 0; 2 * k <= n; ++k) {
    p.add_term(n - k, detail::exact_divide(binomial(2 * k, k) * binomial(n, 2 * k), k + 1, "tam_a_polynomial"));
  }
  return p;
}

/// Matches the Pop polynomial of Dyck paths of semi-length n+2.
inline QPolynomial jayan_polynomial(int n) {
  if (n < 0) throw InvalidInput("jayan_polynomial needs n >= 0");
  QPolynomial p;
  for (int k = 0; k <= n; ++k) {
    BigInt inner = 0;
    for (int j = 0; j <= n - k + 1; ++j) {
      inner += binomial(k + 1, j - 1) * binomial(k + 1, j) * binomial(n - j + 1, n - k - j + 1);
    }
    p.add_term(k + 1, detail::exact_divide(inner, k + 1, "jayan_polynomial"));
  }
  return p;
}

/// With include_j0 the inner sum starts at j = 0, where C(n-k-1, n-k) is read
/// with the generalized convention; this adds (-1)^n q^n to the j >= 1 sum.
inline QPolynomial jaybn_polynomial(int n, bool include_j0) {
  if (n < 1) throw InvalidInput("jaybn_polynomial needs n >= 1");
  QPolynomial p;
  for (int k = 0; k <= n; ++k) {
    BigInt coefficient = 0;
    for (int j = include_j0 ? 0 : 1; j <= k; ++j) {
      BigInt term = binomial(2 * j, j) * binomial(k + j, k - j) *
                    binomial(n - k + j - 1, n - k, BinomialMode::generalized);
      coefficient += (k - j) % 2 == 0 ? term : BigInt(-term);
    }
    p.add_term(k, coefficient);
  }
  return p;
}

/// [x^n y^k] of G - 1, the ffrr-avoiding paths of semi-length n with k peaks.
inline BigInt h_coefficient(int n, int k) {
  if (k < 1) throw InvalidInput("h_coefficient needs k >= 1");
  BigInt sum = 0;
  for (int j = 0; j <= n - k; ++j) sum += binomial(k, j + 1) * binomial(k, j) * binomial(n - j - 1, n - k - j);
  return detail::exact_divide(sum, k, "h_coefficient");
}

/// [x^n y^d] N: image elements of Tam(B_n) with d descents.
inline BigInt n_coefficient(int n, int d) {
  if (d < 0) return 0;
  const int k = (d + 1) / 2;
  if (d % 2 == 0) return binomial(n - 1, k) * binomial(n - k, k);
  return binomial(n - 1, k) * binomial(n - k, k - 1);
}

/// [x^n y^{n-k}] K, equal to [q^{n-k}] Pop(Tam(B_n); q).
inline BigInt k_coefficient(int n, int k) { return binomial(n - 1, k) * binomial(n - k + 1, k); }

// ---------------------------------------------------------------------------

/// Named polynomial generators for the CLI and reports.
struct FormulaCatalog {
  static const std::vector<std::string>& names() {
    static const std::vector<std::string> list{"weak-b", "tam-a", "tam-b", "jay-a", "jay-b", "jay-b-printed"};
    return list;
  }

  /// weak-b yields the single predicted term (3^n - 2n - 1) q^{n-1}.
  static QPolynomial evaluate(const std::string& name, int n) {
    if (name == "weak-b") return QPolynomial::monomial(n - 1, weak_b_coefficient(n));
    if (name == "tam-a") return tam_a_polynomial(n);
    if (name == "tam-b") return tam_b_polynomial(n);
    if (name == "jay-a") return jayan_polynomial(n);
    if (name == "jay-b") return jaybn_polynomial(n, true);
    if (name == "jay-b-printed") return jaybn_polynomial(n, false);
    throw InvalidInput("unknown formula \"" + name + "\"");
  }
};

}  // namespace poplat
