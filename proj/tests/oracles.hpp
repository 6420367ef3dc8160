#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Word = std::vector<int>;

inline Big factorial(int n) {
  Big r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Big choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Word reduce(const Word& w) {
  Word out;
  for (int v : w) {
    int rank = 1;
    for (int u : w) rank += u < v;
    out.push_back(rank);
  }
  return out;
}

/// Every subsequence of the host of the pattern's length, tested by reduction.
inline bool contains(const Word& host, const Word& pattern) {
  const int m = static_cast<int>(host.size());
  const int k = static_cast<int>(pattern.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Word sub;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) sub.push_back(host[i]);
    }
    if (reduce(sub) == pattern) return true;
  }
  return false;
}

/// 312 occurrence c..a..b with b >= n+1, where n = len/2.
inline bool contains_312_star(const Word& w) {
  const int m = static_cast<int>(w.size());
  const int n = m / 2;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (w[j] < w[k] && w[k] < w[i] && w[k] >= n + 1) return true;
      }
    }
  }
  return false;
}

inline std::vector<Word> permutations(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<Word> signed_permutations(int n) {
  std::vector<Word> out;
  for (const auto& w : permutations(2 * n)) {
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) ok = w[i] + w[2 * n - 1 - i] == 2 * n + 1;
    if (ok) out.push_back(w);
  }
  return out;
}

/// Weak order by inversion sets, compared pair by pair.
inline bool weak_leq(const Word& a, const Word& b) {
  std::vector<int> pos_b(b.size() + 1);
  for (std::size_t i = 0; i < b.size(); ++i) pos_b[b[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j] && pos_b[a[i]] > pos_b[a[j]]) return false;
    }
  }
  return true;
}

/// A finite poset given by an explicit leq table, with meets and joins found
/// by scanning all elements.
struct Poset {
  std::vector<std::vector<bool>> le;

  std::size_t size() const { return le.size(); }

  std::vector<std::size_t> lower_covers(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y) {
      if (y == x || !le[y][x]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < size() && cover; ++z) {
        if (z != x && z != y && le[y][z] && le[z][x]) cover = false;
      }
      if (cover) out.push_back(y);
    }
    return out;
  }

  std::vector<std::size_t> upper_covers(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y) {
      if (y == x || !le[x][y]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < size() && cover; ++z) {
        if (z != x && z != y && le[x][z] && le[z][y]) cover = false;
      }
      if (cover) out.push_back(y);
    }
    return out;
  }

  /// Greatest common lower bound of a nonempty set; -1 when it does not exist.
  long meet(const std::vector<std::size_t>& xs) const {
    std::vector<std::size_t> lower;
    for (std::size_t z = 0; z < size(); ++z) {
      if (std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return le[z][x]; })) lower.push_back(z);
    }
    for (std::size_t z : lower) {
      if (std::all_of(lower.begin(), lower.end(), [&](std::size_t u) { return le[u][z]; })) return static_cast<long>(z);
    }
    return -1;
  }

  long join(const std::vector<std::size_t>& xs) const {
    std::vector<std::size_t> upper;
    for (std::size_t z = 0; z < size(); ++z) {
      if (std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return le[x][z]; })) upper.push_back(z);
    }
    for (std::size_t z : upper) {
      if (std::all_of(upper.begin(), upper.end(), [&](std::size_t u) { return le[z][u]; })) return static_cast<long>(z);
    }
    return -1;
  }

  std::size_t pop_down(std::size_t x) const {
    auto xs = lower_covers(x);
    xs.push_back(x);
    return static_cast<std::size_t>(meet(xs));
  }

  std::size_t pop_up(std::size_t x) const {
    auto xs = upper_covers(x);
    xs.push_back(x);
    return static_cast<std::size_t>(join(xs));
  }

  /// Pop polynomial as degree -> coefficient.
  std::map<int, Big> pop_polynomial() const {
    std::vector<bool> image(size(), false);
    for (std::size_t x = 0; x < size(); ++x) image[pop_down(x)] = true;
    std::map<int, Big> out;
    for (std::size_t x = 0; x < size(); ++x) {
      if (image[x]) out[static_cast<int>(upper_covers(x).size())] += 1;
    }
    return out;
  }
};

template <class T, class Leq>
Poset make_poset(const std::vector<T>& elements, Leq&& leq) {
  Poset p;
  p.le.assign(elements.size(), std::vector<bool>(elements.size(), false));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) p.le[a][b] = leq(elements[a], elements[b]);
  }
  return p;
}

/// Dyck paths as height sequences; the ideal order is pointwise comparison.
inline std::vector<int> heights(const std::string& steps) {
  std::vector<int> h{0};
  for (char c : steps) h.push_back(h.back() + (c == 'r' ? 1 : -1));
  return h;
}

inline bool path_leq(const std::string& a, const std::string& b) {
  const auto ha = heights(a), hb = heights(b);
  for (std::size_t i = 0; i < ha.size(); ++i) {
    if (ha[i] > hb[i]) return false;
  }
  return true;
}

inline std::vector<std::string> dyck_paths(int m) {
  std::vector<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << (2 * m)); ++mask) {
    std::string s;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * m && ok; ++i) {
      const bool up = mask >> (2 * m - 1 - i) & 1u;
      s.push_back(up ? 'r' : 'f');
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(s);
  }
  return out;
}

inline bool symmetric(const std::string& s) {
  const std::size_t len = s.size();
  for (std::size_t i = 0; i < len; ++i) {
    if ((s[i] == 'r') != (s[len - 1 - i] == 'f')) return false;
  }
  return true;
}

inline int peaks(const std::string& s) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) count += s[i] == 'r' && s[i + 1] == 'f';
  return count;
}

inline Big motzkin(int n) {
  std::vector<Big> m(n + 1, 0);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) {
    m[k] = m[k - 1];
    for (int i = 0; i <= k - 2; ++i) m[k] += m[i] * m[k - 2 - i];
  }
  return m[n];
}

}  // namespace oracle
