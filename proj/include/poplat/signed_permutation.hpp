#pragma once

// The hyperoctahedral group B_n, realised as permutations x of [2n] with
// x_i + x_{2n+1-i} = 2n+1, and the run/half decompositions used on it.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "poplat/core.hpp"

namespace poplat {

class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Throws SymmetryViolation at the first position that breaks the identity.
  explicit SignedPermutation(Permutation p) : perm_(std::move(p)) {
    const int len = perm_.size();
    if (len % 2 != 0) throw InvalidInput("signed permutation needs even length");
    for (int i = 1; i <= len; ++i) {
      if (perm_.at(i) + perm_.at(len + 1 - i) != len + 1) {
        throw SymmetryViolation("x_" + std::to_string(i) + " + x_" + std::to_string(len + 1 - i) +
                                    " != " + std::to_string(len + 1),
                                i);
      }
    }
  }

  static SignedPermutation trusted(Permutation p) {
    SignedPermutation s;
    s.perm_ = std::move(p);
    return s;
  }

  static SignedPermutation identity(int rank) { return trusted(Permutation::identity(2 * rank)); }

  int rank() const noexcept { return perm_.size() / 2; }
  int size() const noexcept { return perm_.size(); }
  int operator[](std::size_t i) const { return perm_[i]; }
  int at(int position) const { return perm_.at(position); }

  const Permutation& permutation() const noexcept { return perm_; }
  const Word& word() const noexcept { return perm_.word(); }
  operator std::span<const int>() const noexcept { return perm_.word(); }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  Permutation perm_;
};

inline SignedPermutation validate_signed(std::span<const int> word) {
  return SignedPermutation(Permutation(Word(word.begin(), word.end())));
}

inline SignedPermutation parse_signed(std::string_view text) { return validate_signed(parse_word(text)); }

inline std::string to_text(const SignedPermutation& x) { return format_word(x.word()); }

/// Every element of B_n in lexicographic order; n <= 7.
inline std::vector<SignedPermutation> enumerate_bn(int n) {
  if (n < 0) throw InvalidInput("rank must be non-negative");
  if (n > 7) throw GuardExceeded("enumerate_bn: rank " + std::to_string(n) + " exceeds the guard of 7");
  std::vector<SignedPermutation> out;
  const int len = 2 * n;
  if (n <= 4) {
    Word w(len);
    std::iota(w.begin(), w.end(), 1);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = w[i] + w[len - 1 - i] == len + 1;
      if (ok) out.push_back(SignedPermutation::trusted(Permutation::trusted(w)));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
  }
  // First half: an arrangement of 1..n with a choice of v or 2n+1-v per slot.
  Word base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      Word w(len);
      for (int i = 0; i < n; ++i) {
        const int v = (signs >> i) & 1 ? len + 1 - base[i] : base[i];
        w[i] = v;
        w[len - 1 - i] = len + 1 - v;
      }
      out.push_back(SignedPermutation::trusted(Permutation::trusted(std::move(w))));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

struct AscDecomposition {
  std::vector<Word> runs;        // asc_1, asc_2, ... from the left
  std::vector<int> lengths;      // l_k
  Word mid;                      // run containing positions n and n+1, or empty

  /// asc_k for k >= 1, asc_{-k} for k <= -1.
  const Word& asc(int k) const {
    const int count = static_cast<int>(runs.size());
    if (k == 0 || k > count || -k > count) throw InvalidInput("asc index out of range");
    return k > 0 ? runs[k - 1] : runs[count + k];
  }
};

inline AscDecomposition asc_decompose(const SignedPermutation& x) {
  AscDecomposition d;
  d.runs = ascending_runs(x.word());
  const int n = x.rank();
  int position = 0;
  for (const auto& run : d.runs) {
    d.lengths.push_back(static_cast<int>(run.size()));
    const int first = position + 1;
    const int last = position + static_cast<int>(run.size());
    if (n >= 1 && first <= n && last >= n + 1) d.mid = run;
    position = last;
  }
  return d;
}

// ---------------------------------------------------------------------------

struct HalfBlock {
  int start;        // 1-based position of the first entry
  int length;
  Word entries;     // half_k(x)
  Word complement;  // half^c_k(x): reversed and complemented by 2n+1
};

struct HalfDecomposition {
  Word half;                    // subsequence of entries >= n+1
  std::vector<HalfBlock> blocks;
};

/// Complement of a block inside B_n: reverse the entries and map v -> 2n+1-v.
inline Word block_complement(std::span<const int> block, int rank) {
  Word out(block.rbegin(), block.rend());
  for (int& v : out) v = 2 * rank + 1 - v;
  return out;
}

inline HalfDecomposition half_decompose(const SignedPermutation& x) {
  HalfDecomposition d;
  const int n = x.rank();
  const int len = x.size();
  for (int i = 0; i < len; ++i) {
    const int v = x[i];
    if (v < n + 1) continue;
    d.half.push_back(v);
    if (i == 0 || x[i - 1] < n + 1) d.blocks.push_back(HalfBlock{i + 1, 0, {}, {}});
    auto& block = d.blocks.back();
    ++block.length;
    block.entries.push_back(v);
  }
  for (auto& block : d.blocks) block.complement = block_complement(block.entries, n);
  return d;
}

}  // namespace poplat

template <>
struct std::hash<poplat::SignedPermutation> {
  std::size_t operator()(const poplat::SignedPermutation& x) const noexcept {
    return std::hash<poplat::Permutation>{}(x.permutation());
  }
};
