#pragma once

// Tam(A_n) on 312-avoiding permutations of S_{n+1} and Tam(B_n) on
// 312*-avoiding elements of B_n, both as sublattices of the weak order.
// Pop on either is the congruence projection of rev(x).

#include <algorithm>
#include <optional>
#include <vector>

#include "poplat/core.hpp"
#include "poplat/lattice.hpp"
#include "poplat/signed_permutation.hpp"
#include "poplat/weak.hpp"

namespace poplat {

using TamALattice = CarrierLattice<Permutation>;
using TamBLattice = CarrierLattice<SignedPermutation>;

inline TamALattice tam_a_lattice(int n, LatticeOptions options = {}) {
  if (n < 0) throw InvalidInput("tam-a needs n >= 0");
  if (n > 8) throw GuardExceeded("tam-a: n = " + std::to_string(n) + " exceeds the guard of 8");
  std::vector<Permutation> elements;
  for (auto& p : enumerate_sn(n + 1)) {
    if (avoids_312(p.word())) elements.push_back(std::move(p));
  }
  auto covers = weak_induced_covers(elements);
  return TamALattice(std::move(elements), covers, options);
}

inline TamBLattice tam_b_lattice(int n, LatticeOptions options = {}) {
  if (n < 1) throw InvalidInput("tam-b needs n >= 1");
  if (n > 6) throw GuardExceeded("tam-b: n = " + std::to_string(n) + " exceeds the guard of 6");
  std::vector<SignedPermutation> elements;
  for (auto& x : enumerate_bn(n)) {
    if (avoids_312_star(x.word())) elements.push_back(std::move(x));
  }
  auto covers = weak_induced_covers(elements);
  return TamBLattice(std::move(elements), covers, options);
}

// ---------------------------------------------------------------------------
// Adjacency moves. Each move takes a descent c a to a c and so goes down in
// the weak order; the congruence is the symmetric closure.

struct AdjacencyMoveA {
  int position;  // 1-based position of c
  int c, a, b;   // b is a witness with a < b < c placed after a
};

struct AdjacencyMoveB {
  int position;  // 1-based position of c, at most n
  int c, a, b;
  bool central;  // a + c = 2n+1, a single swap at positions n, n+1
};

inline std::optional<AdjacencyMoveA> tam_a_move_at(std::span<const int> w, int position) {
  const int i = position - 1;
  if (i < 0 || i + 1 >= static_cast<int>(w.size())) return std::nullopt;
  const int c = w[i], a = w[i + 1];
  if (c < a) return std::nullopt;
  for (std::size_t j = i + 2; j < w.size(); ++j) {
    if (a < w[j] && w[j] < c) return AdjacencyMoveA{position, c, a, w[j]};
  }
  return std::nullopt;
}

inline std::vector<AdjacencyMoveA> tam_a_moves(std::span<const int> w) {
  std::vector<AdjacencyMoveA> out;
  for (int p = 1; p < static_cast<int>(w.size()); ++p) {
    if (auto m = tam_a_move_at(w, p)) out.push_back(*m);
  }
  return out;
}

inline Word apply_move(std::span<const int> w, const AdjacencyMoveA& m) {
  Word out(w.begin(), w.end());
  std::swap(out[m.position - 1], out[m.position]);
  return out;
}

/// Move at the descent in positions (position, position+1). Descents right of
/// the centre are the mirror images of moves at position <= n and are reported
/// through their left partner.
inline std::optional<AdjacencyMoveB> tam_b_move_at(std::span<const int> w, int position) {
  const int len = static_cast<int>(w.size());
  const int n = len / 2;
  if (position > n) position = len - position;
  const int i = position - 1;
  if (i < 0 || position > n) return std::nullopt;
  const int c = w[i], a = w[i + 1];
  if (c < a) return std::nullopt;
  for (int j = 0; j < len; ++j) {
    const int b = w[j];
    if (b <= a || b >= c) continue;
    // Large b must come after a; small b must come before it.
    if ((b >= n + 1 && j > i + 1) || (b <= n && j < i)) {
      return AdjacencyMoveB{position, c, a, b, position == n};
    }
  }
  return std::nullopt;
}

inline std::vector<AdjacencyMoveB> tam_b_moves(std::span<const int> w) {
  std::vector<AdjacencyMoveB> out;
  for (int p = 1; p <= static_cast<int>(w.size()) / 2; ++p) {
    if (auto m = tam_b_move_at(w, p)) out.push_back(*m);
  }
  return out;
}

/// Swap positions p, p+1 and, off the centre, the mirrored pair.
inline Word symmetric_swap(std::span<const int> w, int position) {
  const int len = static_cast<int>(w.size());
  Word out(w.begin(), w.end());
  std::swap(out[position - 1], out[position]);
  if (2 * position != len) std::swap(out[len - position - 1], out[len - position]);
  return out;
}

inline Word apply_move(std::span<const int> w, const AdjacencyMoveB& m) { return symmetric_swap(w, m.position); }

// ---------------------------------------------------------------------------
// Projections to the class minimum.

/// Rewrites with the leftmost move until none applies.
inline Permutation project_tam_a(const Permutation& p) {
  Word w = p.word();
  for (;;) {
    bool moved = false;
    for (int pos = 1; pos < static_cast<int>(w.size()); ++pos) {
      if (auto m = tam_a_move_at(w, pos)) {
        w = apply_move(w, *m);
        moved = true;
        break;
      }
    }
    if (!moved) return Permutation::trusted(std::move(w));
  }
}

inline SignedPermutation project_tam_b(const SignedPermutation& x) {
  Word w = x.word();
  for (;;) {
    bool moved = false;
    for (int pos = 1; pos <= x.rank(); ++pos) {
      if (auto m = tam_b_move_at(w, pos)) {
        w = apply_move(w, *m);
        moved = true;
        break;
      }
    }
    if (!moved) return SignedPermutation::trusted(Permutation::trusted(std::move(w)));
  }
}

/// Congruence classes of the ambient weak order generated by the adjacency moves.
inline CongruenceClasses tam_a_congruence(const WeakALattice& weak) {
  return CongruenceClasses(weak.lattice(), [&](std::size_t i) {
    std::vector<std::size_t> out;
    const auto& w = weak.element(i).word();
    for (const auto& m : tam_a_moves(w)) out.push_back(weak.index(Permutation::trusted(apply_move(w, m))));
    return out;
  });
}

inline CongruenceClasses tam_b_congruence(const WeakBLattice& weak) {
  return CongruenceClasses(weak.lattice(), [&](std::size_t i) {
    std::vector<std::size_t> out;
    const auto& w = weak.element(i).word();
    for (const auto& m : tam_b_moves(w)) {
      out.push_back(weak.index(SignedPermutation::trusted(Permutation::trusted(apply_move(w, m)))));
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// Pop.

inline Permutation pop_tam(const Permutation& p) {
  if (!avoids_312(p.word())) throw InvalidInput(to_text(p) + " contains 312, so it is not in Tam(A)");
  return project_tam_a(rev(p));
}

inline SignedPermutation pop_tam(const SignedPermutation& x) {
  if (!avoids_312_star(x.word())) throw InvalidInput(to_text(x) + " contains 312*, so it is not in Tam(B)");
  return project_tam_b(SignedPermutation::trusted(rev(x.permutation())));
}

// ---------------------------------------------------------------------------
// Image characterizations.

/// 312-avoiding, ends with its maximum, no double descent.
inline bool hong_image_predicate(std::span<const int> p) {
  if (p.empty()) return true;
  const int m = static_cast<int>(p.size());
  return avoids_312(p) && p.back() == m && !has_double_descent(p);
}

namespace detail {
inline bool blocks_reduce_to_hong_images(const SignedPermutation& x) {
  for (const auto& block : half_decompose(x).blocks) {
    if (!hong_image_predicate(reduce(block.entries).word())) return false;
  }
  return true;
}
}  // namespace detail

/// Membership in Pop(Tam(B_n)): 2n sits in the right half and every maximal
/// block of large entries reduces to a Pop(Tam(A)) image element.
inline bool tam_b_image_predicate(const SignedPermutation& x) {
  const int n = x.rank();
  return index_of(x.permutation(), 2 * n) >= n + 1 && detail::blocks_reduce_to_hong_images(x);
}

/// Variant that tests the block condition on Pop(x) rather than on x.
inline bool tam_b_image_predicate_on_pop(const SignedPermutation& x) {
  const int n = x.rank();
  return index_of(x.permutation(), 2 * n) >= n + 1 && detail::blocks_reduce_to_hong_images(pop_tam(x));
}

// ---------------------------------------------------------------------------
// Preimages.

namespace detail {
inline Word preimage_end1_word(std::span<const int> x) {
  const int m = static_cast<int>(x.size());
  if (m == 0) return {};
  const int k = static_cast<int>(std::find(x.begin(), x.end(), 1) - x.begin()) + 1;
  Word z = preimage_end1_word(reduce(x.subspan(0, k - 1)).word());
  Word w = preimage_end1_word(reduce(x.subspan(k)).word());
  Word y;
  y.reserve(m);
  for (int v : z) y.push_back(v + 1);
  for (int v : w) y.push_back(v + k);
  y.push_back(1);
  return y;
}

/// Relabels a permutation of 1..m onto the sorted values of `values`.
inline Word relabel(std::span<const int> perm, std::span<const int> values) {
  Word sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Word out;
  out.reserve(perm.size());
  for (int v : perm) out.push_back(sorted[v - 1]);
  return out;
}
}  // namespace detail

/// y in Tam(A) ending in 1 with Pop(y) = x.
inline Permutation preimage_end1(const Permutation& x) {
  if (!hong_image_predicate(x.word())) throw InvalidInput(to_text(x) + " is not in the Pop image of Tam(A)");
  return Permutation::trusted(detail::preimage_end1_word(x.word()));
}

/// y in Tam(B_n) with Pop(y) = x: each large block of y is an end-in-1 preimage
/// of the matching block of x, and y = half_1 half^c_l half_2 half^c_{l-1} ...
inline SignedPermutation preimage_tam_b(const SignedPermutation& x) {
  if (!tam_b_image_predicate(x)) throw InvalidInput(to_text(x) + " is not in the Pop image of Tam(B)");
  const int n = x.rank();
  const auto halves = half_decompose(x);
  std::vector<Word> blocks;
  for (const auto& b : halves.blocks) {
    blocks.push_back(detail::relabel(detail::preimage_end1_word(reduce(b.entries).word()), b.entries));
  }
  // x opens with a large entry: the last block and its (leading) complement are empty.
  if (x.at(1) >= n + 1) blocks.emplace_back();
  Word y;
  const std::size_t count = blocks.size();
  for (std::size_t k = 0; k < count; ++k) {
    y.insert(y.end(), blocks[k].begin(), blocks[k].end());
    const Word mirror = block_complement(blocks[count - 1 - k], n);
    y.insert(y.end(), mirror.begin(), mirror.end());
  }
  auto result = validate_signed(y);
  if (pop_tam(result) != x) throw Error("preimage_tam_b: construction failed for " + to_text(x));
  return result;
}

// ---------------------------------------------------------------------------

/// Lifts a Tam(A) move x -> y (x = X c a Y b Z, y = X a c Y b Z) to a chain of
/// Tam(B_n) moves starting at z, where red(half(z)) = x: c+n is carried to the
/// right one symmetric swap at a time until it meets a+n, then the two are
/// exchanged. Every step is checked to be a legal move.
inline std::vector<SignedPermutation> adjacency_chain_demo(const Permutation& x, const Permutation& y,
                                                           const SignedPermutation& z) {
  const int n = z.rank();
  if (x.size() != n || y.size() != n) throw InvalidInput("x and y must have the rank of z");
  const auto moves = tam_a_moves(x.word());
  const auto move = std::find_if(moves.begin(), moves.end(), [&](const AdjacencyMoveA& m) {
    return apply_move(x.word(), m) == y.word();
  });
  if (move == moves.end()) throw InvalidInput(to_text(x) + " and " + to_text(y) + " are not Tam(A)-adjacent");
  if (reduce(half_decompose(z).half) != x) throw InvalidInput("red(half(z)) must equal x");

  const int c = move->c + n, a = move->a + n;
  std::vector<SignedPermutation> chain{z};
  Word w = z.word();
  for (;;) {
    const int p = static_cast<int>(std::find(w.begin(), w.end(), c) - w.begin()) + 1;
    if (p >= 2 * n) throw Error("adjacency_chain_demo: ran off the end");
    if (!tam_b_move_at(w, p)) {
      throw Error("adjacency_chain_demo: illegal step at position " + std::to_string(p) + " of " + format_word(w));
    }
    const bool last = w[p] == a;
    w = symmetric_swap(w, p);
    chain.push_back(SignedPermutation::trusted(Permutation::trusted(w)));
    if (last) break;
  }
  return chain;
}

}  // namespace poplat
