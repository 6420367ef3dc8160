#pragma once

// Brute-force Pop polynomials of the built lattices set against the closed
// forms, and the series tables set against their equations, closed forms and
// direct enumeration.

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "poplat/dyck.hpp"
#include "poplat/formulas.hpp"
#include "poplat/io.hpp"
#include "poplat/lattice.hpp"
#include "poplat/series.hpp"
#include "poplat/tamari.hpp"
#include "poplat/weak.hpp"

namespace poplat {

/// Lattices above this size skip the all-pairs validation unless asked.
inline constexpr std::size_t validation_threshold = 5000;

struct VerifyOptions {
  bool validate = true;  // still bounded by validation_threshold
  bool allow_large = false;  // Weak(B_5)
  std::size_t max_elements = 50000;

  LatticeOptions lattice_options(std::size_t expected_size) const {
    return LatticeOptions{validate && expected_size <= validation_threshold, max_elements};
  }
};

struct CaseRecord {
  std::string lattice;
  int n = 0;
  std::size_t elements = 0;
  QPolynomial computed;
  QPolynomial formula;
  bool dual_match = true;
  double millis = 0;

  bool match() const { return computed == formula; }
  QPolynomial delta() const { return computed - formula; }
};

struct RunReport {
  std::string command;
  std::vector<CaseRecord> cases;

  std::size_t matches() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.match(); }));
  }
  bool all_match() const { return matches() == cases.size(); }
};

inline Json to_json(const RunReport& report, bool timing) {
  Json out;
  out["command"] = report.command;
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json j;
    j["lattice"] = c.lattice;
    j["n"] = c.n;
    j["elements"] = c.elements;
    j["computed"] = to_json(c.computed);
    j["formula"] = to_json(c.formula);
    j["delta"] = to_json(c.delta());
    j["dual_match"] = c.dual_match;
    j["verdict"] = c.match() ? "match" : "mismatch";
    if (timing) j["millis"] = c.millis;
    cases.push_back(std::move(j));
  }
  out["cases"] = std::move(cases);
  out["totals"] = {{"cases", report.cases.size()},
                   {"matches", report.matches()},
                   {"mismatches", report.cases.size() - report.matches()}};
  return out;
}

namespace detail {
template <class Carrier>
CaseRecord record_case(const std::string& name, int n, const CarrierLattice<Carrier>& lattice, QPolynomial formula) {
  CaseRecord c;
  c.lattice = name;
  c.n = n;
  c.elements = lattice.size();
  c.computed = lattice.pop_polynomial(PopDirection::down_with_upper_covers);
  c.dual_match = c.computed == lattice.pop_polynomial(PopDirection::up_with_lower_covers);
  c.formula = std::move(formula);
  return c;
}

template <class F>
CaseRecord timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  CaseRecord c = f();
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}
}  // namespace detail

/// theorem: weak | tam-a | tam-b | jay-a | jay-b. For jay-a the parameter n
/// is the formula index and the lattice has semi-length n+2; as_printed
/// selects the jay-b formula without its j = 0 term.
inline RunReport verify_theorem(const std::string& theorem, int max_n, bool as_printed = false,
                                const VerifyOptions& options = {}) {
  RunReport report;
  report.command = "verify --theorem " + theorem + " --max-n " + std::to_string(max_n) + (as_printed ? " --as-printed" : "");
  if (theorem == "weak") {
    if (max_n > 5 || (max_n == 5 && !options.allow_large)) {
      throw GuardExceeded("verify weak: n = " + std::to_string(max_n) + " needs --allow-large (n = 5) or is out of range");
    }
    for (int n = 1; n <= max_n; ++n) {
      report.cases.push_back(detail::timed([&] {
        auto lattice = weak_b_lattice(n, options.lattice_options(factorial(n).convert_to<std::size_t>() << n), options.allow_large);
        auto c = detail::record_case("weak-b", n, lattice, FormulaCatalog::evaluate("weak-b", n));
        c.computed = QPolynomial::monomial(n - 1, c.computed.coefficient(n - 1));  // only this coefficient is predicted
        return c;
      }));
    }
  } else if (theorem == "tam-a") {
    for (int n = 1; n <= max_n; ++n) {
      report.cases.push_back(detail::timed([&] {
        auto lattice = tam_a_lattice(n, options.lattice_options(catalan(n + 1).convert_to<std::size_t>()));
        return detail::record_case("tam-a", n, lattice, tam_a_polynomial(n));
      }));
    }
  } else if (theorem == "tam-b") {
    for (int n = 1; n <= max_n; ++n) {
      report.cases.push_back(detail::timed([&] {
        auto lattice = tam_b_lattice(n, options.lattice_options(binomial(2 * n, n).convert_to<std::size_t>()));
        return detail::record_case("tam-b", n, lattice, tam_b_polynomial(n));
      }));
    }
  } else if (theorem == "jay-a") {
    for (int n = 0; n <= max_n; ++n) {
      report.cases.push_back(detail::timed([&] {
        auto lattice = build_j_a(n + 2, options.lattice_options(catalan(n + 2).convert_to<std::size_t>()));
        return detail::record_case("j-a", n, lattice, jayan_polynomial(n));
      }));
    }
  } else if (theorem == "jay-b") {
    for (int n = 1; n <= max_n; ++n) {
      report.cases.push_back(detail::timed([&] {
        auto lattice = build_j_b(n, options.lattice_options(binomial(2 * n, n).convert_to<std::size_t>()));
        return detail::record_case("j-b", n, lattice, jaybn_polynomial(n, !as_printed));
      }));
    }
  } else {
    throw InvalidInput("unknown theorem \"" + theorem + "\" (expected weak, tam-a, tam-b, jay-a or jay-b)");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Series checks.

struct SeriesCheck {
  std::string series;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SeriesReport {
  int order = 0;
  std::map<std::string, BiSeries> tables;
  std::vector<SeriesCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SeriesCheck& c) { return c.pass; });
  }
};

namespace detail {

/// [x^m y^p]: ffrr-avoiding paths of semi-length m with p peaks.
inline BiSeries enumerate_ffrr_avoiding(int order) {
  BiSeries s(order);
  for (int m = 0; m <= order; ++m) {
    for (const auto& p : enumerate_dyck(m)) {
      if (!has_ffrr(p)) s.add_to(m, static_cast<int>(p.peaks().size()), 1);
    }
  }
  return s;
}

/// [x^m y^p]: symmetric ffrr-avoiding paths of semi-length m, p = peaks with x <= m.
inline BiSeries enumerate_symmetric_ffrr_avoiding(int order) {
  BiSeries s(order);
  for (int m = 0; m <= order; ++m) {
    for (const auto& p : enumerate_dyck(m)) {
      if (has_ffrr(p) || !p.is_symmetric()) continue;
      const auto peaks = p.peaks();
      s.add_to(m, static_cast<int>(std::count_if(peaks.begin(), peaks.end(), [&](int x) { return x <= m; })), 1);
    }
  }
  return s;
}

inline void set_row(BiSeries& s, int n, const QPolynomial& p) {
  for (const auto& [d, c] : p.terms()) s.set(n, d, Rational(c));
}

inline std::string first_difference(const BiSeries& a, const BiSeries& b, int from, int to) {
  for (int n = from; n <= to; ++n) {
    if (a.row(n) != b.row(n)) {
      std::string s = "first difference at x^" + std::to_string(n) + ":";
      const auto ra = a.row(n), rb = b.row(n);
      for (std::size_t k = 0; k < std::max(ra.size(), rb.size()); ++k) {
        const Rational va = k < ra.size() ? ra[k] : Rational(0);
        const Rational vb = k < rb.size() ? rb[k] : Rational(0);
        if (va != vb) s += " y^" + std::to_string(k) + " " + va.str() + " vs " + vb.str();
      }
      return s;
    }
  }
  return "agree";
}

inline SeriesCheck compare(const std::string& series, const std::string& name, const BiSeries& a, const BiSeries& b,
                           int from, int to) {
  SeriesCheck c{series, name, false, ""};
  c.detail = first_difference(a, b, from, to);
  c.pass = c.detail == "agree";
  if (c.pass) c.detail = "agree through x^" + std::to_string(to);
  return c;
}

inline SeriesCheck integral(const std::string& series, const BiSeries& s) {
  const bool ok = s.all_integral();
  return {series, "integral coefficients", ok, ok ? "all integers" : "non-integral coefficient"};
}

}  // namespace detail

/// which: G, F, H, I, J, M, N or K. Enumeration checks are capped at sizes
/// where exhaustive listing stays cheap.
inline SeriesReport series_report(const std::string& which, int order) {
  detail::check_order(order);
  SeriesReport r;
  r.order = order;
  const BiSeries one = BiSeries::constant(order, 1);
  const BiSeries x = BiSeries::monomial(order, 1, 0);
  const BiSeries xy = BiSeries::monomial(order, 1, 1);

  if (which == "G" || which == "H") {
    const BiSeries g = solve_G(order);
    r.tables[which] = which == "G" ? g : g - one;
    r.checks.push_back(detail::integral(which, g));
    r.checks.push_back(detail::compare(which, "functional equation", g,
                                       one + xy * g + x * (g - one) + BiSeries::monomial(order, 2, 1) * g * (g - one),
                                       0, order));
    BiSeries closed(order);
    for (int n = 1; n <= order; ++n) {
      for (int k = 1; k <= n; ++k) closed.set(n, k, Rational(h_coefficient(n, k)));
    }
    r.checks.push_back(detail::compare(which, "Lagrange coefficients of G - 1", g - one, closed, 0, order));
    const int cap = std::min(order, 10);
    r.checks.push_back(detail::compare(which, "ffrr-avoiding paths by peaks", g.truncated(cap),
                                       detail::enumerate_ffrr_avoiding(cap), 0, cap));
  } else if (which == "F") {
    const BiSeries g = solve_G(order);
    const BiSeries f = solve_F(order);
    r.tables["F"] = f;
    r.checks.push_back(detail::integral("F", f));
    r.checks.push_back(detail::compare("F", "F = 1 + x(G - 1) + xy", f, one + x * (g - one) + xy, 0, order));
    BiSeries closed(order);
    for (int n = 0; n + 2 <= order; ++n) detail::set_row(closed, n + 2, jayan_polynomial(n));
    BiSeries f_tail = f;
    for (int n = 0; n < 2 && n <= order; ++n) {
      for (int k = 0; k <= n + 1; ++k) f_tail.set(n, k, 0);
    }
    r.checks.push_back(detail::compare("F", "closed form at semi-length n+2", f_tail, closed, 2, order));
    const int cap = std::min(order, 8);
    BiSeries enumerated(cap);
    for (int m = 2; m <= cap; ++m) detail::set_row(enumerated, m, build_j_a(m).pop_polynomial());
    r.checks.push_back(detail::compare("F", "Dyck-path lattices, semi-length >= 2", f.truncated(cap), enumerated, 2, cap));
  } else if (which == "I") {
    const BiSeries i = solve_I(order);
    r.tables["I"] = i;
    r.checks.push_back(detail::integral("I", i));
    const BiSeries g2 = solve_G(order / 2).substitute_x_squared(order) - one;
    const BiSeries rhs = one + BiSeries::monomial(order, 2, 1) * i + x * i + BiSeries::monomial(order, 4, 1) * i * g2 +
                         BiSeries::monomial(order, 3, 1) * g2 - x + xy;
    r.checks.push_back(detail::compare("I", "functional equation", i, rhs, 0, order));
    const int cap = std::min(order, 11);
    r.checks.push_back(detail::compare("I", "symmetric ffrr-avoiding paths by left peaks", i.truncated(cap),
                                       detail::enumerate_symmetric_ffrr_avoiding(cap), 0, cap));
  } else if (which == "J") {
    const BiSeries j = solve_J(order);
    r.tables["J"] = j;
    r.checks.push_back(detail::integral("J", j));
    BiSeries closed = one;
    for (int n = 1; n <= order; ++n) detail::set_row(closed, n, jaybn_polynomial(n, true));
    r.checks.push_back(detail::compare("J", "closed form with the j = 0 term", j, closed, 0, order));
    r.checks.push_back(detail::compare("J", "(w^2 + 4z)^(-1/2)", j, radical_J(order), 0, order));
    const int cap = std::min(order, 5);
    BiSeries enumerated = BiSeries::constant(cap, 1);
    for (int n = 1; n <= cap; ++n) detail::set_row(enumerated, n, build_j_b(n).pop_polynomial());
    r.checks.push_back(detail::compare("J", "symmetric Dyck-path lattices", j.truncated(cap), enumerated, 0, cap));
  } else if (which == "M") {
    const BiSeries m = series_M(order);
    r.tables["M"] = m;
    r.checks.push_back(detail::compare("M", "radical form of M(x, y^2)", m.substitute_y_squared(),
                                       radical_M_y_squared(order), 0, order));
    const int cap = std::min(order, 8);
    BiSeries enumerated(cap);
    for (int len = 1; len <= cap; ++len) {
      // Image elements come from applying Pop to every element of Tam(A_{len-1}).
      std::unordered_map<Permutation, bool> seen;
      for (const auto& p : enumerate_sn(len)) {
        if (!avoids_312(p.word())) continue;
        auto img = pop_tam(p);
        if (seen.emplace(img, true).second) enumerated.add_to(len, descent_count(img.word()), 1);
      }
    }
    r.checks.push_back(detail::compare("M", "Tam(A) images by descents", m.truncated(cap), enumerated, 0, cap));
  } else if (which == "N" || which == "K") {
    const auto s = solve_tam_b_series(order);
    r.tables["M"] = s.M;
    r.tables["P"] = s.P;
    r.tables["Q"] = s.Q;
    r.tables[which] = which == "N" ? s.N : s.K;
    r.checks.push_back(detail::integral(which, which == "N" ? s.N : s.K));
    if (which == "N") {
      BiSeries closed(order);
      for (int n = 1; n <= order; ++n) {
        for (int d = 0; d <= 2 * n; ++d) closed.set(n, d, Rational(n_coefficient(n, d)));
      }
      r.checks.push_back(detail::compare("N", "binomial coefficients by descents", s.N, closed, 0, order));
      const BiSeries n0 = series_N0(order), n1 = series_N1(order);
      r.checks.push_back(detail::compare("N", "N = x N0 + x y N1", s.N, x * n0 + xy * n1, 0, order));
      r.checks.push_back(detail::compare("N", "N0 through L", n0, radical_N0(order), 0, order));
      r.checks.push_back(detail::compare("N", "N1 through L", n1, radical_N1(order), 0, order));
      const int cap = std::min(order, 5);
      BiSeries enumerated(cap);
      for (int n = 1; n <= cap; ++n) {
        std::unordered_map<SignedPermutation, bool> seen;
        for (const auto& z : enumerate_bn(n)) {
          if (!avoids_312_star(z.word())) continue;
          auto img = pop_tam(z);
          if (seen.emplace(img, true).second) enumerated.add_to(n, descent_count(img.word()), 1);
        }
      }
      r.checks.push_back(detail::compare("N", "Tam(B) images by descents", s.N.truncated(cap), enumerated, 0, cap));
    } else {
      BiSeries closed(order);
      BiSeries theorem(order);
      for (int n = 1; n <= order; ++n) {
        for (int k = 0; k <= n; ++k) closed.set(n, n - k, Rational(k_coefficient(n, k)));
        detail::set_row(theorem, n, tam_b_polynomial(n));
      }
      r.checks.push_back(detail::compare("K", "binomial coefficients by upper covers", s.K, closed, 0, order));
      r.checks.push_back(detail::compare("K", "Pop(Tam(B_n); q) closed form", s.K, theorem, 0, order));
      const int cap = std::min(order, 4);
      BiSeries enumerated(cap);
      for (int n = 1; n <= cap; ++n) detail::set_row(enumerated, n, tam_b_lattice(n).pop_polynomial());
      r.checks.push_back(detail::compare("K", "Tam(B) lattices", s.K.truncated(cap), enumerated, 0, cap));
    }
  } else {
    throw InvalidInput("unknown series \"" + which + "\" (expected G, F, H, I, J, M, N or K)");
  }
  return r;
}

inline Json to_json(const BiSeries& s) {
  Json rows = Json::object();
  for (int n = 0; n <= s.order(); ++n) {
    Json row = Json::object();
    const auto r = s.row(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] != 0) row[std::to_string(k)] = r[k].str();
    }
    rows[std::to_string(n)] = std::move(row);
  }
  return rows;
}

inline Json to_json(const SeriesReport& r) {
  Json out;
  out["order"] = r.order;
  Json tables = Json::object();
  for (const auto& [name, s] : r.tables) tables[name] = to_json(s);
  out["tables"] = std::move(tables);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"series", c.series}, {"check", c.name}, {"verdict", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace poplat
