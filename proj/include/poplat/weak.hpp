#pragma once

// Right weak order on S_n and its type-B sublattice on B_n.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "poplat/core.hpp"
#include "poplat/lattice.hpp"
#include "poplat/signed_permutation.hpp"

namespace poplat {

using WeakALattice = CarrierLattice<Permutation>;
using WeakBLattice = CarrierLattice<SignedPermutation>;

inline std::vector<Permutation> enumerate_sn(int n) {
  if (n < 0) throw InvalidInput("size must be non-negative");
  if (n > 9) throw GuardExceeded("enumerate_sn: size " + std::to_string(n) + " exceeds the guard of 9");
  std::vector<Permutation> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do out.push_back(Permutation::trusted(w));
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Inversion set over value pairs (a < b with b placed before a); weak order
/// is inclusion of these sets. Words of up to 16 entries.
using InversionSet = std::bitset<120>;

inline InversionSet inversion_set(std::span<const int> w) {
  const int m = static_cast<int>(w.size());
  if (m > 16) throw GuardExceeded("inversion_set supports at most 16 entries");
  InversionSet set;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (w[i] > w[j]) {
        const int a = w[j] - 1, b = w[i] - 1;
        set.set(static_cast<std::size_t>(b * (b - 1) / 2 + a));
      }
    }
  }
  return set;
}

inline bool weak_leq(std::span<const int> a, std::span<const int> b) {
  return (inversion_set(a) & ~inversion_set(b)).none();
}

/// Hasse diagram of a family of words under the weak order.
template <class Carrier>
CoverList weak_induced_covers(const std::vector<Carrier>& elements) {
  std::vector<InversionSet> sets;
  sets.reserve(elements.size());
  for (const auto& x : elements) sets.push_back(inversion_set(x.word()));
  return hasse_covers(elements.size(), [&](std::size_t a, std::size_t b) { return (sets[a] & ~sets[b]).none(); });
}

/// Weak(A_{n-1}) on S_n; y covers x when y swaps one ascent of x into a descent.
inline WeakALattice weak_a_lattice(int n, LatticeOptions options = {}) {
  if (n < 1) throw InvalidInput("weak-a needs n >= 1");
  if (n > 7) throw GuardExceeded("weak-a: n = " + std::to_string(n) + " exceeds the guard of 7");
  auto elements = enumerate_sn(n);
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  CoverList covers;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Word w = elements[i].word();
    for (int p = 0; p + 1 < n; ++p) {
      if (w[p] < w[p + 1]) {
        std::swap(w[p], w[p + 1]);
        covers.emplace_back(i, index.at(Permutation::trusted(w)));
        std::swap(w[p], w[p + 1]);
      }
    }
  }
  return WeakALattice(std::move(elements), covers, options);
}

/// Upper covers of x in Weak(B_n), one per ascent at positions 1..n. The
/// position-n ascent is the central swap; the others are mirrored pairs.
inline std::vector<SignedPermutation> weak_b_upper_covers(const SignedPermutation& x) {
  const int n = x.rank();
  const int len = 2 * n;
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= n; ++i) {
    if (x.at(i) > x.at(i + 1)) continue;
    Word w = x.word();
    std::swap(w[i - 1], w[i]);
    if (i < n) std::swap(w[len - i - 1], w[len - i]);
    out.push_back(SignedPermutation::trusted(Permutation::trusted(std::move(w))));
  }
  return out;
}

/// Weak(B_n). Rank 5 (3840 elements) requires allow_rank5.
inline WeakBLattice weak_b_lattice(int n, LatticeOptions options = {}, bool allow_rank5 = false) {
  if (n < 1) throw InvalidInput("weak-b needs n >= 1");
  if (n > 5 || (n == 5 && !allow_rank5)) {
    throw GuardExceeded("weak-b: n = " + std::to_string(n) + " exceeds the guard (4, or 5 when opted in)");
  }
  auto elements = enumerate_bn(n);
  std::unordered_map<SignedPermutation, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  CoverList covers;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& up : weak_b_upper_covers(elements[i])) covers.emplace_back(i, index.at(up));
  }
  return WeakBLattice(std::move(elements), covers, options);
}

/// Pop on the weak order: reverse every descending run.
inline Permutation pop_direct(const Permutation& p) { return rev(p); }
inline SignedPermutation pop_direct(const SignedPermutation& x) {
  return SignedPermutation::trusted(rev(x.permutation()));
}

/// The first entry of each ascending run is smaller than the last entry of the
/// next one. Necessary for membership in the Pop image of Weak(B_n).
inline bool image_necessary_condition(std::span<const int> x) {
  const auto runs = ascending_runs(x);
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    if (runs[k].front() > runs[k + 1].back()) return false;
  }
  return true;
}

/// 1 . (y+1) . 2n for y in B_{n-1}.
inline SignedPermutation lift_one_one(const SignedPermutation& y) {
  const int n = y.rank() + 1;
  Word w{1};
  for (int v : y.word()) w.push_back(v + 1);
  w.push_back(2 * n);
  return SignedPermutation::trusted(Permutation::trusted(std::move(w)));
}

/// The explicit |U| = n-1 image element with x_1 = 1 that is not a lift from rank n-1.
inline SignedPermutation family_one_two(int n, int j) {
  if (j < 1 || j > n - 1) throw InvalidInput("family_one_two: need 1 <= j <= n-1");
  const int len = 2 * n;
  Word w(len);
  for (int i = 1; i <= len; ++i) {
    int v;
    if (i == 1) {
      v = 1;
    } else if (i <= j + 1) {
      v = len - j + i - 2;
    } else if (i <= len - j - 1) {
      v = i;
    } else if (i <= len - 1) {
      v = j + i - len + 2;
    } else {
      v = len;
    }
    w[i - 1] = v;
  }
  return validate_signed(w);
}

/// Image elements with exactly n-1 upper covers, counted by first entry 1..2n.
inline std::map<int, BigInt> census_by_first_entry(const WeakBLattice& lattice, int n) {
  std::map<int, BigInt> counts;
  for (int i = 1; i <= 2 * n; ++i) counts[i] = 0;
  for (const auto& x : lattice.pop_down_image()) {
    if (lattice.upper_cover_count(x) == n - 1) counts[x.at(1)] += 1;
  }
  return counts;
}

inline std::map<int, BigInt> census_by_first_entry(int n) {
  if (n > 4) throw GuardExceeded("census: exhaustive mode supports n <= 4");
  return census_by_first_entry(weak_b_lattice(n), n);
}

}  // namespace poplat
