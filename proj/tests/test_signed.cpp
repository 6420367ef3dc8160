#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poplat/signed_permutation.hpp"
#include "poplat/tamari.hpp"

using namespace poplat;

TEST(Signed, Validate) {
  EXPECT_EQ(parse_signed("6,5,7,1,8,2,4,3").rank(), 4);
  EXPECT_EQ(parse_signed("1,2").rank(), 1);
  try {
    parse_signed("2,1,3,4");
    FAIL() << "expected a symmetry violation";
  } catch (const SymmetryViolation& e) {
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(parse_signed("1,2,3"), InvalidInput);
}

TEST(Signed, EnumerationMatchesFilteredSymmetricGroup) {
  EXPECT_EQ(enumerate_bn(1).size(), 2u);
  std::vector<std::string> b2;
  for (const auto& x : enumerate_bn(2)) b2.push_back(to_text(x));
  EXPECT_EQ(b2, (std::vector<std::string>{"1,2,3,4", "1,3,2,4", "2,1,4,3", "2,4,1,3", "3,1,4,2", "3,4,1,2",
                                          "4,2,3,1", "4,3,2,1"}));
  EXPECT_EQ(enumerate_bn(3).size(), 48u);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Word> words;
    for (const auto& x : enumerate_bn(n)) words.push_back(x.word());
    EXPECT_EQ(words, oracle::signed_permutations(n)) << n;
  }
  const auto b5 = enumerate_bn(5);
  EXPECT_EQ(b5.size(), 3840u);
  EXPECT_TRUE(std::is_sorted(b5.begin(), b5.end()));
  EXPECT_EQ(enumerate_bn(6).size(), 46080u);
  EXPECT_THROW(enumerate_bn(8), GuardExceeded);
}

TEST(Signed, AscDecomposition) {
  const auto d = asc_decompose(parse_signed("6,8,2,4,5,7,1,3"));
  EXPECT_EQ(d.runs, (std::vector<Word>{{6, 8}, {2, 4, 5, 7}, {1, 3}}));
  EXPECT_EQ(d.lengths, (std::vector<int>{2, 4, 2}));
  EXPECT_EQ(d.mid, (Word{2, 4, 5, 7}));
  EXPECT_EQ(d.asc(-1), (Word{1, 3}));
  EXPECT_TRUE(asc_decompose(parse_signed("6,8,2,5,4,7,1,3")).mid.empty());
  EXPECT_EQ(asc_decompose(SignedPermutation::identity(3)).mid, (Word{1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(d.asc(4), InvalidInput);
}

TEST(Signed, HalfDecomposition) {
  const auto d = half_decompose(parse_signed("6,5,7,1,8,2,4,3"));
  EXPECT_EQ(d.half, (Word{6, 5, 7, 8}));
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].entries, (Word{6, 5, 7}));
  EXPECT_EQ(d.blocks[0].start, 1);
  EXPECT_EQ(d.blocks[0].length, 3);
  EXPECT_EQ(d.blocks[0].complement, (Word{2, 4, 3}));
  EXPECT_EQ(d.blocks[1].entries, (Word{8}));
  EXPECT_EQ(d.blocks[1].start, 5);
  EXPECT_EQ(d.blocks[1].complement, (Word{1}));

  const auto e = half_decompose(parse_signed("2,1,4,3"));
  ASSERT_EQ(e.blocks.size(), 1u);
  EXPECT_EQ(e.blocks[0].entries, (Word{4, 3}));
  const auto f = half_decompose(parse_signed("1,3,2,4"));
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0].complement, (Word{2}));
  EXPECT_EQ(f.blocks[1].complement, (Word{1}));
}

TEST(Signed, HalfDecompositionInvariants) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& x : enumerate_bn(n)) {
      const auto& w = x.word();
      const auto d = half_decompose(x);
      // Blocks are maximal runs of large entries.
      Word rebuilt(w.size(), 0);
      for (const auto& b : d.blocks) {
        ASSERT_EQ(static_cast<int>(b.entries.size()), b.length);
        for (int j = 0; j < b.length; ++j) {
          ASSERT_GE(b.entries[j], n + 1);
          rebuilt[b.start - 1 + j] = b.entries[j];
          ASSERT_EQ(b.complement[j], 2 * n + 1 - b.entries[b.length - 1 - j]);
        }
        if (b.start > 1) ASSERT_LE(w[b.start - 2], n);
        if (b.start + b.length <= 2 * n) ASSERT_LE(w[b.start + b.length - 1], n);
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (rebuilt[i] == 0) rebuilt[i] = w[i];
      }
      ASSERT_EQ(rebuilt, w);
      // Small entries read backwards and complemented give half(x).
      Word mirror;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it <= n) mirror.push_back(2 * n + 1 - *it);
      }
      ASSERT_EQ(mirror, d.half);
    }
  }
}

TEST(Signed, TamariBlocksIncrease) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& x : enumerate_bn(n)) {
      if (!avoids_312_star(x.word())) continue;
      const auto d = half_decompose(x);
      for (std::size_t k = 1; k < d.blocks.size(); ++k) {
        ASSERT_GT(*std::min_element(d.blocks[k].entries.begin(), d.blocks[k].entries.end()),
                  *std::max_element(d.blocks[k - 1].entries.begin(), d.blocks[k - 1].entries.end()))
            << to_text(x);
      }
      const auto r = SignedPermutation::trusted(rev(x.permutation()));
      ASSERT_EQ(half_decompose(r).half, reverse_descending_runs(d.half)) << to_text(x);
    }
  }
}

TEST(Signed, LargeEntriesOnLeftSitInFirstRun) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& x : enumerate_bn(n)) {
      if (bounded_ascent_count(x.word(), n) != n - 1) continue;
      const auto first = asc_decompose(x).asc(1);
      for (int i = 1; i <= n; ++i) {
        if (x.at(i) >= n + 1) {
          ASSERT_NE(std::find(first.begin(), first.end(), x.at(i)), first.end()) << to_text(x);
        }
      }
    }
  }
}
