#pragma once

// Words of distinct integers, permutations, run statistics, pattern search and
// exact binomial coefficients.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "poplat/errors.hpp"

namespace poplat {

using BigInt = boost::multiprecision::cpp_int;

/// A word of distinct positive integers. Positions are 1-based in every public
/// accessor that takes a position; the underlying vector is 0-based.
using Word = std::vector<int>;

inline bool has_distinct_entries(std::span<const int> w) {
  Word sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// A word whose entry set is exactly {1, ..., m}.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(Word entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || v > static_cast<int>(entries_.size()) || seen[v]) {
        throw InvalidInput("not a permutation of 1.." + std::to_string(entries_.size()));
      }
      seen[v] = true;
    }
  }

  /// Skips validation; callers guarantee the permutation property.
  static Permutation trusted(Word entries) {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
  }

  static Permutation identity(int m) {
    Word w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    return trusted(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 0-based element access.
  int operator[](std::size_t i) const { return entries_[i]; }
  /// 1-based position access.
  int at(int position) const {
    if (position < 1 || position > size()) throw InvalidInput("position out of range");
    return entries_[position - 1];
  }

  const Word& word() const noexcept { return entries_; }
  operator std::span<const int>() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word entries_;
};

// ---------------------------------------------------------------------------
// Text format: comma-separated decimal entries, whitespace ignored.

inline Word parse_word(std::string_view text) {
  Word out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InvalidInput("empty entry in word \"" + std::string(text) + "\"");
    if (token.size() > 9) throw InvalidInput("entry too large: " + token);
    out.push_back(std::stoi(token));
    token.clear();
  };
  bool any = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    any = true;
    if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      token.push_back(ch);
    } else {
      throw InvalidInput(std::string("unexpected character '") + ch + "' in word");
    }
  }
  if (any) flush();
  for (int v : out) {
    if (v < 1) throw InvalidInput("entries must be positive");
  }
  if (!has_distinct_entries(out)) throw InvalidInput("entries must be distinct");
  return out;
}

inline Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

inline std::string format_word(std::span<const int> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::string to_text(const Permutation& p) { return format_word(p.word()); }

// ---------------------------------------------------------------------------
// Statistics.

/// red(w): replaces each entry by its rank among the entries of w.
inline Permutation reduce(std::span<const int> w) {
  if (!has_distinct_entries(w)) throw InvalidInput("reduce: entries must be distinct");
  std::vector<int> order(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r) + 1;
  return Permutation::trusted(std::move(out));
}

/// ind_p(v): the 1-based position holding v.
inline int index_of(const Permutation& p, int v) {
  if (v < 1 || v > p.size()) throw InvalidInput("index_of: value out of range");
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] == v) return i + 1;
  }
  throw InvalidInput("index_of: value not present");  // unreachable for a valid permutation
}

/// Maximal strictly decreasing factors, left to right.
inline std::vector<Word> descending_runs(std::span<const int> w) {
  std::vector<Word> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i - 1] < w[i]) runs.emplace_back();
    runs.back().push_back(w[i]);
  }
  return runs;
}

/// Maximal strictly increasing factors, left to right.
inline std::vector<Word> ascending_runs(std::span<const int> w) {
  std::vector<Word> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i - 1] > w[i]) runs.emplace_back();
    runs.back().push_back(w[i]);
  }
  return runs;
}

/// Reverses every descending run in place; works on any word of distinct entries.
inline Word reverse_descending_runs(std::span<const int> w) {
  Word out(w.begin(), w.end());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= out.size(); ++i) {
    if (i == out.size() || out[i - 1] < out[i]) {
      std::reverse(out.begin() + start, out.begin() + i);
      start = i;
    }
  }
  return out;
}

inline Permutation rev(const Permutation& p) { return Permutation::trusted(reverse_descending_runs(p.word())); }

inline int descent_count(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 1; i < w.size(); ++i) count += w[i - 1] > w[i];
  return count;
}

/// Number of positions i <= bound (1-based) with w_i < w_{i+1}.
inline int bounded_ascent_count(std::span<const int> w, int bound) {
  if (bound < 1 || bound > static_cast<int>(w.size()) - 1) {
    throw InvalidInput("bounded_ascent_count: bound out of range");
  }
  int count = 0;
  for (int i = 1; i <= bound; ++i) count += w[i - 1] < w[i];
  return count;
}

inline bool has_double_descent(std::span<const int> w) {
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (w[i - 2] > w[i - 1] && w[i - 1] > w[i]) return true;
  }
  return false;
}

/// w + k: adds k to every entry.
inline Word shifted(std::span<const int> w, int k) {
  Word out(w.begin(), w.end());
  for (int& v : out) v += k;
  return out;
}

inline Word concat(std::initializer_list<std::span<const int>> parts) {
  Word out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// ---------------------------------------------------------------------------
// Patterns.

/// Which half of [2n] a star-constrained pattern entry must lie in.
enum class Half { large, small };

struct StarBound {
  int position;  // 1-based position in the pattern
  Half half;     // large: entry >= n+1, small: entry <= n
};

/// A classical pattern plus vincular adjacency requirements and star bounds.
/// adjacent[i] requires the host positions matched to pattern positions i+1
/// and i+2 to be consecutive. Star bounds read n as len(host)/2.
struct PatternSpec {
  Permutation pattern;
  std::vector<bool> adjacent;
  std::vector<StarBound> stars;

  static PatternSpec classical(Permutation p) {
    PatternSpec s{std::move(p), {}, {}};
    s.adjacent.assign(s.pattern.empty() ? 0 : s.pattern.size() - 1, false);
    return s;
  }

  static PatternSpec vincular(Permutation p, std::vector<bool> adjacency) {
    if (p.size() > 0 && adjacency.size() != static_cast<std::size_t>(p.size() - 1)) {
      throw InvalidInput("adjacency mask must have length pattern length - 1");
    }
    return PatternSpec{std::move(p), std::move(adjacency), {}};
  }
};

/// 312 whose "2" (last) entry is >= n+1.
inline PatternSpec pattern_312_star() {
  auto s = PatternSpec::classical(Permutation::trusted({3, 1, 2}));
  s.stars = {{3, Half::large}};
  return s;
}

/// 312* whose "1" entry is also >= n+1.
inline PatternSpec pattern_big_312_star() {
  auto s = pattern_312_star();
  s.stars.push_back({2, Half::large});
  return s;
}

/// 312* whose "1" entry is <= n.
inline PatternSpec pattern_small_312_star() {
  auto s = pattern_312_star();
  s.stars.push_back({2, Half::small});
  return s;
}

/// 213 whose first entry is <= n.
inline PatternSpec pattern_213_star() {
  auto s = PatternSpec::classical(Permutation::trusted({2, 1, 3}));
  s.stars = {{1, Half::small}};
  return s;
}

/// 231 whose last entry is <= n.
inline PatternSpec pattern_231_star() {
  auto s = PatternSpec::classical(Permutation::trusted({2, 3, 1}));
  s.stars = {{3, Half::small}};
  return s;
}

/// Returns the 1-based host positions of the leftmost occurrence, if any.
inline std::optional<std::vector<int>> find_pattern(std::span<const int> host, const PatternSpec& spec) {
  const int k = spec.pattern.size();
  const int len = static_cast<int>(host.size());
  if (!spec.stars.empty() && len % 2 != 0) {
    throw InvalidInput("star-constrained pattern needs an even-length host");
  }
  const int n = len / 2;
  if (k == 0) return std::vector<int>{};

  std::vector<int> lower_half_ok(k, 0);  // 0 unconstrained, 1 large, 2 small
  for (const auto& star : spec.stars) {
    if (star.position < 1 || star.position > k) throw InvalidInput("star bound position out of range");
    lower_half_ok[star.position - 1] = star.half == Half::large ? 1 : 2;
  }

  std::vector<int> chosen(k);
  std::function<bool(int, int)> extend = [&](int depth, int from) -> bool {
    if (depth == k) return true;
    int lo = from;
    int hi = len - (k - depth);
    if (depth > 0 && spec.adjacent[depth - 1]) {
      if (lo > hi) return false;
      hi = lo;
    }
    for (int pos = lo; pos <= hi; ++pos) {
      const int value = host[pos];
      if (lower_half_ok[depth] == 1 && value < n + 1) continue;
      if (lower_half_ok[depth] == 2 && value > n) continue;
      bool consistent = true;
      for (int j = 0; j < depth && consistent; ++j) {
        consistent = (host[chosen[j]] < value) == (spec.pattern[j] < spec.pattern[depth]);
      }
      if (!consistent) continue;
      chosen[depth] = pos;
      if (extend(depth + 1, pos + 1)) return true;
    }
    return false;
  };
  if (!extend(0, 0)) return std::nullopt;
  std::vector<int> positions(k);
  for (int i = 0; i < k; ++i) positions[i] = chosen[i] + 1;
  return positions;
}

inline bool contains_pattern(std::span<const int> host, const PatternSpec& spec) {
  return find_pattern(host, spec).has_value();
}

inline bool avoids_312(std::span<const int> w) {
  // c ... a ... b with a < b < c: for each b, look for an earlier pair c > b, then a < b after it.
  const std::size_t m = w.size();
  for (std::size_t j = 0; j < m; ++j) {
    int largest_before = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i] < w[j] && largest_before > w[j]) return false;
      largest_before = std::max(largest_before, w[i]);
    }
  }
  return true;
}

inline bool avoids_312_star(std::span<const int> w) {
  const int n = static_cast<int>(w.size()) / 2;
  const std::size_t m = w.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (w[j] < n + 1) continue;
    int largest_before = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i] < w[j] && largest_before > w[j]) return false;
      largest_before = std::max(largest_before, w[i]);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Binomial coefficients.

enum class BinomialMode {
  /// C(n,k) = 0 for k < 0, for k > n >= 0 and for n < 0.
  standard,
  /// C(a,k) = a(a-1)...(a-k+1)/k! for any integer a and k >= 0, so C(-1,0) = 1.
  generalized,
};

inline BigInt binomial(long long n, long long k, BinomialMode mode = BinomialMode::standard) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
      r *= n - k + i;
      r /= i;
    }
    return r;
  }
  if (mode == BinomialMode::standard) return 0;
  // C(-m, k) = (-1)^k C(m+k-1, k)
  const long long m = -n;
  BigInt r = binomial(m + k - 1, k);
  return (k % 2 == 0) ? r : BigInt(-r);
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace poplat

template <>
struct std::hash<poplat::Permutation> {
  std::size_t operator()(const poplat::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
