#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poplat/dyck.hpp"
#include "poplat/formulas.hpp"
#include "poplat/tamari.hpp"
#include "poplat/weak.hpp"

using namespace poplat;

namespace {

QPolynomial poly(std::initializer_list<std::pair<int, int>> terms) {
  QPolynomial p;
  for (auto [d, c] : terms) p.add_term(d, c);
  return p;
}

}  // namespace

TEST(Formulas, WeakCoefficient) {
  EXPECT_EQ(weak_b_coefficient(1), 0);
  EXPECT_EQ(weak_b_coefficient(2), 4);
  EXPECT_EQ(weak_b_coefficient(3), 20);
  EXPECT_EQ(weak_b_coefficient(5), 232);
  EXPECT_THROW(weak_b_coefficient(0), InvalidInput);
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& [i, c] : census_prediction(n)) total += c;
    EXPECT_EQ(total, weak_b_coefficient(n)) << n;
  }
}

TEST(Formulas, TamB) {
  EXPECT_EQ(tam_b_polynomial(1), poly({{1, 1}}));
  EXPECT_EQ(tam_b_polynomial(2), poly({{2, 1}, {1, 2}}));
  EXPECT_EQ(tam_b_polynomial(3), poly({{3, 1}, {2, 6}, {1, 1}}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(tam_b_polynomial(n), tam_b_lattice(n).pop_polynomial()) << n;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(k_coefficient(n, k), tam_b_polynomial(n).coefficient(n - k));
  }
}

TEST(Formulas, TamA) {
  EXPECT_EQ(tam_a_polynomial(1), poly({{1, 1}}));
  EXPECT_EQ(tam_a_polynomial(2), poly({{2, 1}, {1, 1}}));
  EXPECT_EQ(tam_a_polynomial(3), poly({{3, 1}, {2, 3}}));
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(tam_a_polynomial(n).evaluate(1), oracle::motzkin(n)) << n;
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(tam_a_polynomial(n), tam_a_lattice(n).pop_polynomial()) << n;
}

TEST(Formulas, JayA) {
  EXPECT_EQ(jayan_polynomial(0), poly({{1, 1}}));
  EXPECT_EQ(jayan_polynomial(1), poly({{1, 1}, {2, 1}}));
  EXPECT_EQ(jayan_polynomial(2), poly({{1, 1}, {2, 3}, {3, 1}}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(jayan_polynomial(n), build_j_a(n + 2).pop_polynomial()) << n;
  // Totals count ffrr-avoiding paths of semi-length n+1.
  for (int n = 0; n <= 10; ++n) {
    BigInt avoiding = 0;
    for (const auto& s : oracle::dyck_paths(n + 1)) avoiding += s.find("ffrr") == std::string::npos;
    EXPECT_EQ(jayan_polynomial(n).evaluate(1), avoiding) << n;
  }
}

TEST(Formulas, JayB) {
  EXPECT_EQ(jaybn_polynomial(1, true), poly({{1, 1}}));
  EXPECT_EQ(jaybn_polynomial(2, true), poly({{1, 2}, {2, 1}}));
  EXPECT_EQ(jaybn_polynomial(2, false), poly({{1, 2}}));
  EXPECT_EQ(jaybn_polynomial(3, true).evaluate(1), 9);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(jaybn_polynomial(n, true), build_j_b(n).pop_polynomial()) << n;
    const auto delta = jaybn_polynomial(n, false) - jaybn_polynomial(n, true);
    EXPECT_EQ(delta, QPolynomial::monomial(n, n % 2 == 0 ? -1 : 1)) << n;
  }
}

TEST(Formulas, CoefficientHelpers) {
  // h counts ffrr-avoiding paths of semi-length n with k peaks.
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt count = 0;
      for (const auto& s : oracle::dyck_paths(n)) {
        count += s.find("ffrr") == std::string::npos && oracle::peaks(s) == k;
      }
      ASSERT_EQ(h_coefficient(n, k), count) << n << "," << k;
    }
  }
  EXPECT_THROW(h_coefficient(3, 0), InvalidInput);
  for (int n = 1; n <= 4; ++n) {
    std::map<int, BigInt> by_descents;
    for (const auto& z : tam_b_lattice(n).pop_down_image()) by_descents[descent_count(z.word())] += 1;
    for (int d = 0; d <= 2 * n; ++d) EXPECT_EQ(n_coefficient(n, d), by_descents[d]) << n << "," << d;
  }
  EXPECT_EQ(n_coefficient(2, 0), 1);
  EXPECT_EQ(n_coefficient(2, 1), 1);
  EXPECT_EQ(n_coefficient(2, 2), 1);
}

TEST(Formulas, Catalog) {
  EXPECT_EQ(FormulaCatalog::names().size(), 6u);
  EXPECT_EQ(FormulaCatalog::evaluate("weak-b", 3), QPolynomial::monomial(2, 20));
  EXPECT_EQ(FormulaCatalog::evaluate("tam-b", 6), tam_b_polynomial(6));
  EXPECT_EQ(FormulaCatalog::evaluate("jay-b-printed", 3), jaybn_polynomial(3, false));
  EXPECT_THROW(FormulaCatalog::evaluate("nope", 3), InvalidInput);
}
