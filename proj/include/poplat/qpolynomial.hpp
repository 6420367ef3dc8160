#pragma once

#include <map>
#include <string>

#include "poplat/core.hpp"

namespace poplat {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial monomial(int degree, BigInt coefficient = 1) {
    QPolynomial p;
    p.add_term(degree, std::move(coefficient));
    return p;
  }

  void add_term(int degree, const BigInt& coefficient) {
    if (degree < 0) throw InvalidInput("negative degree");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& terms() const& noexcept { return terms_; }
  std::map<int, BigInt> terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  BigInt evaluate(const BigInt& q) const {
    BigInt total = 0;
    for (const auto& [d, c] : terms_) total += c * boost::multiprecision::pow(q, d);
    return total;
  }

  QPolynomial& operator+=(const QPolynomial& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Human-readable form, highest degree first, e.g. "q^2 + 4q".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [d, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (d == 0 || mag != 1) s += mag.str();
      if (d >= 1) s += "q";
      if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
  }

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace poplat
