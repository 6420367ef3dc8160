#pragma once

// Generic finite-lattice kernel: order, meet, join, Pop (down and up),
// Pop(M; q) in both directions, and congruence-class minima.
//
// Elements are re-indexed internally by a topological order of the cover
// graph. Principal down-sets and up-sets are kept as bit rows over that order,
// so a meet is the highest set bit of the intersection of two down-sets and a
// join is the lowest set bit of the intersection of two up-sets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "poplat/errors.hpp"
#include "poplat/qpolynomial.hpp"

namespace poplat {

using CoverList = std::vector<std::pair<std::size_t, std::size_t>>;  // (lower, upper)

struct LatticeOptions {
  /// Check cover minimality and existence of all meets at build time.
  bool validate = true;
  std::size_t max_elements = 50000;
};

enum class PopDirection {
  /// Image of Pop-down, each element weighted by q^{#upper covers}.
  down_with_upper_covers,
  /// Image of Pop-up, each element weighted by q^{#lower covers}.
  up_with_lower_covers,
};

namespace detail {

class BitRows {
 public:
  BitRows() = default;
  BitRows(std::size_t rows, std::size_t bits)
      : words_((bits + 63) / 64), bits_(bits), data_(rows * words_, 0) {}

  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t bits() const noexcept { return bits_; }

  static void set(std::uint64_t* row, std::size_t bit) { row[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  static bool test(const std::uint64_t* row, std::size_t bit) { return (row[bit >> 6] >> (bit & 63)) & 1u; }

  /// Highest set bit of a row, or npos.
  static std::size_t highest(const std::uint64_t* row, std::size_t words) {
    for (std::size_t w = words; w-- > 0;) {
      if (row[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(row[w]));
    }
    return npos;
  }
  static std::size_t lowest(const std::uint64_t* row, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
      if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    return npos;
  }
  static std::size_t popcount(const std::uint64_t* row, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(row[w]));
    return c;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t words_ = 0;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace detail

class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// covers holds (lower, upper) index pairs into keys. Throws GuardExceeded,
  /// CycleDetected, InvalidInput (non-minimal cover) or NotALattice.
  FiniteLattice(std::vector<std::string> keys, const CoverList& covers, LatticeOptions options = {})
      : keys_(std::move(keys)) {
    const std::size_t n = keys_.size();
    if (n == 0) throw InvalidInput("a lattice needs at least one element");
    if (n > options.max_elements) {
      throw GuardExceeded("lattice with " + std::to_string(n) + " elements exceeds the guard of " +
                          std::to_string(options.max_elements));
    }
    lower_.resize(n);
    upper_.resize(n);
    for (auto [lo, up] : covers) {
      if (lo >= n || up >= n) throw InvalidInput("cover index out of range");
      if (lo == up) throw CycleDetected("self-cover at " + keys_[lo]);
      lower_[up].push_back(lo);
      upper_[lo].push_back(up);
    }
    for (auto* lists : {&lower_, &upper_}) {
      for (auto& l : *lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
      }
    }
    topological_sort();
    build_rows();
    find_extremes();
    if (options.validate) validate();
  }

  std::size_t size() const noexcept { return keys_.size(); }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  const std::vector<std::string>& keys() const& noexcept { return keys_; }
  std::vector<std::string> keys() && { return std::move(keys_); }

  std::size_t index_of(const std::string& key) const {
    if (key_index_.empty()) {
      for (std::size_t i = 0; i < keys_.size(); ++i) key_index_.emplace(keys_[i], i);
    }
    auto it = key_index_.find(key);
    if (it == key_index_.end()) throw InvalidInput("unknown lattice element " + key);
    return it->second;
  }

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_.at(x); }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_.at(x); }

  CoverList covers() const {
    CoverList out;
    for (std::size_t lo = 0; lo < size(); ++lo) {
      for (std::size_t up : upper_[lo]) out.emplace_back(lo, up);
    }
    return out;
  }

  bool leq(std::size_t a, std::size_t b) const {
    return detail::BitRows::test(down_.row(position_.at(b)), position_.at(a));
  }

  std::size_t meet(std::size_t a, std::size_t b) const {
    std::vector<std::uint64_t> buf(down_.row(position_.at(a)), down_.row(position_.at(a)) + down_.words());
    and_row(buf, down_, position_.at(b));
    return top_of(buf, a, b);
  }

  std::size_t join(std::size_t a, std::size_t b) const {
    std::vector<std::uint64_t> buf(up_.row(position_.at(a)), up_.row(position_.at(a)) + up_.words());
    and_row(buf, up_, position_.at(b));
    return bottom_of(buf, a, b);
  }

  /// Meet of x and all elements it covers.
  std::size_t pop_down(std::size_t x) const {
    const auto& lows = lower_covers(x);
    if (lows.empty()) return x;
    std::vector<std::uint64_t> buf(down_.row(position_[lows[0]]), down_.row(position_[lows[0]]) + down_.words());
    for (std::size_t i = 1; i < lows.size(); ++i) and_row(buf, down_, position_[lows[i]]);
    return top_of(buf, x, x);
  }

  /// Join of x and all elements covering it.
  std::size_t pop_up(std::size_t x) const {
    const auto& ups = upper_covers(x);
    if (ups.empty()) return x;
    std::vector<std::uint64_t> buf(up_.row(position_[ups[0]]), up_.row(position_[ups[0]]) + up_.words());
    for (std::size_t i = 1; i < ups.size(); ++i) and_row(buf, up_, position_[ups[i]]);
    return bottom_of(buf, x, x);
  }

  std::vector<std::size_t> pop_down_image() const { return image_of([this](std::size_t x) { return pop_down(x); }); }
  std::vector<std::size_t> pop_up_image() const { return image_of([this](std::size_t x) { return pop_up(x); }); }

  QPolynomial pop_polynomial(PopDirection direction) const {
    QPolynomial poly;
    if (direction == PopDirection::down_with_upper_covers) {
      for (std::size_t x : pop_down_image()) poly.add_term(static_cast<int>(upper_[x].size()), 1);
    } else {
      for (std::size_t x : pop_up_image()) poly.add_term(static_cast<int>(lower_[x].size()), 1);
    }
    return poly;
  }

  /// Members of the principal down-set of x (indices, ascending).
  std::vector<std::size_t> down_set(std::size_t x) const { return members(down_.row(position_.at(x))); }
  std::vector<std::size_t> up_set(std::size_t x) const { return members(up_.row(position_.at(x))); }

 private:
  friend class CongruenceClasses;

  void topological_sort() {
    const std::size_t n = size();
    std::vector<std::size_t> indegree(n);
    for (std::size_t x = 0; x < n; ++x) indegree[x] = lower_[x].size();
    std::queue<std::size_t> ready;
    for (std::size_t x = 0; x < n; ++x) {
      if (indegree[x] == 0) ready.push(x);
    }
    order_.clear();
    while (!ready.empty()) {
      const std::size_t x = ready.front();
      ready.pop();
      order_.push_back(x);
      for (std::size_t y : upper_[x]) {
        if (--indegree[y] == 0) ready.push(y);
      }
    }
    if (order_.size() != n) throw CycleDetected("cover relation contains a cycle");
    position_.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;
  }

  void build_rows() {
    const std::size_t n = size();
    down_ = detail::BitRows(n, n);
    up_ = detail::BitRows(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t x = order_[p];
      auto* row = down_.row(p);
      detail::BitRows::set(row, p);
      for (std::size_t lo : lower_[x]) or_row(row, down_, position_[lo]);
    }
    for (std::size_t p = n; p-- > 0;) {
      const std::size_t x = order_[p];
      auto* row = up_.row(p);
      detail::BitRows::set(row, p);
      for (std::size_t up : upper_[x]) or_row(row, up_, position_[up]);
    }
  }

  void find_extremes() {
    std::vector<std::size_t> minima, maxima;
    for (std::size_t x = 0; x < size(); ++x) {
      if (lower_[x].empty()) minima.push_back(x);
      if (upper_[x].empty()) maxima.push_back(x);
    }
    if (minima.size() != 1) {
      throw NotALattice("no unique bottom element", keys_[minima[0]], keys_[minima.size() > 1 ? minima[1] : minima[0]]);
    }
    if (maxima.size() != 1) {
      throw NotALattice("no unique top element", keys_[maxima[0]], keys_[maxima.size() > 1 ? maxima[1] : maxima[0]]);
    }
    bottom_ = minima[0];
    top_ = maxima[0];
  }

  void validate() const {
    const std::size_t n = size();
    const std::size_t words = down_.words();
    // Each cover edge must be minimal: a lower cover of y may not lie below another lower cover of y.
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a : lower_[y]) {
        for (std::size_t c : lower_[y]) {
          if (c != a && leq(a, c)) {
            throw InvalidInput("cover (" + keys_[a] + ", " + keys_[y] + ") is implied by " + keys_[c]);
          }
        }
      }
    }
    // A finite poset with a top in which every pair has a meet is a lattice.
    std::vector<std::uint64_t> buf(words);
    for (std::size_t p = 0; p < n; ++p) {
      const auto* row_p = down_.row(p);
      for (std::size_t q = p + 1; q < n; ++q) {
        const auto* row_q = down_.row(q);
        for (std::size_t w = 0; w < words; ++w) buf[w] = row_p[w] & row_q[w];
        const std::size_t m = detail::BitRows::highest(buf.data(), words);
        if (m == detail::BitRows::npos) {
          throw NotALattice("no common lower bound", keys_[order_[p]], keys_[order_[q]]);
        }
        const auto* row_m = down_.row(m);
        for (std::size_t w = 0; w < words; ++w) {
          if (row_m[w] != buf[w]) {
            throw NotALattice(keys_[order_[p]] + " and " + keys_[order_[q]] +
                                  " have incomparable maximal lower bounds",
                              keys_[order_[p]], keys_[order_[q]]);
          }
        }
      }
    }
  }

  static void and_row(std::vector<std::uint64_t>& buf, const detail::BitRows& rows, std::size_t r) {
    const auto* row = rows.row(r);
    for (std::size_t w = 0; w < buf.size(); ++w) buf[w] &= row[w];
  }
  static void or_row(std::uint64_t* dst, const detail::BitRows& rows, std::size_t r) {
    const auto* row = rows.row(r);
    for (std::size_t w = 0; w < rows.words(); ++w) dst[w] |= row[w];
  }

  std::size_t top_of(const std::vector<std::uint64_t>& buf, std::size_t a, std::size_t b) const {
    const std::size_t m = detail::BitRows::highest(buf.data(), buf.size());
    if (m == detail::BitRows::npos) throw NotALattice("meet does not exist", keys_[a], keys_[b]);
    return order_[m];
  }
  std::size_t bottom_of(const std::vector<std::uint64_t>& buf, std::size_t a, std::size_t b) const {
    const std::size_t m = detail::BitRows::lowest(buf.data(), buf.size());
    if (m == detail::BitRows::npos) throw NotALattice("join does not exist", keys_[a], keys_[b]);
    return order_[m];
  }

  std::vector<std::size_t> members(const std::uint64_t* row) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size(); ++p) {
      if (detail::BitRows::test(row, p)) out.push_back(order_[p]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  template <class F>
  std::vector<std::size_t> image_of(F&& f) const {
    std::vector<bool> hit(size(), false);
    for (std::size_t x = 0; x < size(); ++x) hit[f(x)] = true;
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      if (hit[x]) out.push_back(x);
    }
    return out;
  }

  std::vector<std::string> keys_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::size_t> order_;     // topological position -> element
  std::vector<std::size_t> position_;  // element -> topological position
  detail::BitRows down_;
  detail::BitRows up_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  mutable std::unordered_map<std::string, std::size_t> key_index_;
};

// ---------------------------------------------------------------------------

/// Returns the congruence-adjacent elements of an element; the relation is
/// closed under symmetry internally.
using CongruenceSpec = std::function<std::vector<std::size_t>(std::size_t)>;

/// Connected components of a congruence adjacency, each checked to be an
/// interval of the lattice.
class CongruenceClasses {
 public:
  CongruenceClasses(const FiniteLattice& lattice, const CongruenceSpec& adjacency) {
    const std::size_t n = lattice.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y : adjacency(x)) {
        if (y >= n) throw InvalidInput("congruence adjacency index out of range");
        parent[find(x)] = find(y);
      }
    }
    class_of_.assign(n, 0);
    std::unordered_map<std::size_t, std::size_t> root_to_class;
    for (std::size_t x = 0; x < n; ++x) {
      auto [it, inserted] = root_to_class.try_emplace(find(x), classes_.size());
      if (inserted) classes_.emplace_back();
      class_of_[x] = it->second;
      classes_[it->second].push_back(x);
    }

    const std::size_t words = lattice.down_.words();
    minimum_.resize(classes_.size());
    maximum_.resize(classes_.size());
    std::vector<std::uint64_t> mask(words), buf(words);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      std::fill(mask.begin(), mask.end(), 0);
      for (std::size_t x : classes_[c]) detail::BitRows::set(mask.data(), lattice.position_[x]);
      std::vector<std::size_t> minimal, maximal;
      for (std::size_t x : classes_[c]) {
        const std::size_t p = lattice.position_[x];
        const auto* down = lattice.down_.row(p);
        const auto* up = lattice.up_.row(p);
        std::size_t below = 0, above = 0;
        for (std::size_t w = 0; w < words; ++w) {
          below += static_cast<std::size_t>(std::popcount(down[w] & mask[w]));
          above += static_cast<std::size_t>(std::popcount(up[w] & mask[w]));
        }
        if (below == 1) minimal.push_back(x);
        if (above == 1) maximal.push_back(x);
      }
      if (minimal.size() != 1 || maximal.size() != 1) {
        throw NonIntervalClass("congruence class of " + lattice.key(classes_[c][0]) + " has " +
                               std::to_string(minimal.size()) + " minimal and " + std::to_string(maximal.size()) +
                               " maximal elements");
      }
      const auto* up = lattice.up_.row(lattice.position_[minimal[0]]);
      const auto* down = lattice.down_.row(lattice.position_[maximal[0]]);
      for (std::size_t w = 0; w < words; ++w) {
        if ((up[w] & down[w]) != mask[w]) {
          throw NonIntervalClass("congruence class of " + lattice.key(classes_[c][0]) + " is not an interval");
        }
      }
      minimum_[c] = minimal[0];
      maximum_[c] = maximal[0];
    }
  }

  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t x) const { return class_of_.at(x); }
  const std::vector<std::size_t>& members(std::size_t c) const { return classes_.at(c); }
  std::size_t minimum(std::size_t x) const { return minimum_[class_of(x)]; }
  std::size_t maximum(std::size_t x) const { return maximum_[class_of(x)]; }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> minimum_;
  std::vector<std::size_t> maximum_;
};

/// pi_down: the minimum of x's congruence class.
inline std::size_t congruence_project(const FiniteLattice& lattice, const CongruenceSpec& adjacency, std::size_t x) {
  return CongruenceClasses(lattice, adjacency).minimum(x);
}

// ---------------------------------------------------------------------------

/// Hasse diagram of a partial order given by a predicate leq(a, b) on 0..n-1.
template <class Leq>
CoverList hasse_covers(std::size_t n, Leq&& leq) {
  detail::BitRows above(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b)) detail::BitRows::set(above.row(a), b);
    }
  }
  CoverList covers;
  std::vector<std::uint64_t> candidates(above.words());
  for (std::size_t a = 0; a < n; ++a) {
    const auto* row = above.row(a);
    std::copy(row, row + above.words(), candidates.begin());
    for (std::size_t z = 0; z < n; ++z) {
      if (!detail::BitRows::test(row, z)) continue;
      const auto* higher = above.row(z);
      for (std::size_t w = 0; w < above.words(); ++w) candidates[w] &= ~higher[w];
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (detail::BitRows::test(candidates.data(), b)) covers.emplace_back(a, b);
    }
  }
  return covers;
}

// ---------------------------------------------------------------------------

/// A FiniteLattice whose elements carry typed values (permutations, paths).
/// Carrier must provide to_text(const Carrier&) and std::hash<Carrier>.
template <class Carrier>
class CarrierLattice {
 public:
  CarrierLattice() = default;

  CarrierLattice(std::vector<Carrier> elements, const CoverList& covers, LatticeOptions options = {})
      : elements_(std::move(elements)) {
    std::vector<std::string> keys;
    keys.reserve(elements_.size());
    for (const auto& e : elements_) keys.push_back(to_text(e));
    lattice_ = FiniteLattice(std::move(keys), covers, options);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  const FiniteLattice& lattice() const& noexcept { return lattice_; }
  const std::vector<Carrier>& elements() const& noexcept { return elements_; }
  // Temporaries hand over their data so `for (x : build(n).elements())` is safe.
  FiniteLattice lattice() && { return std::move(lattice_); }
  std::vector<Carrier> elements() && { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  const Carrier& element(std::size_t i) const { return elements_.at(i); }

  bool contains(const Carrier& c) const { return index_.count(c) != 0; }
  std::size_t index(const Carrier& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw InvalidInput("element " + to_text(c) + " is not in the lattice");
    return it->second;
  }

  Carrier pop_down(const Carrier& c) const { return elements_[lattice_.pop_down(index(c))]; }
  Carrier pop_up(const Carrier& c) const { return elements_[lattice_.pop_up(index(c))]; }
  Carrier meet(const Carrier& a, const Carrier& b) const { return elements_[lattice_.meet(index(a), index(b))]; }
  Carrier join(const Carrier& a, const Carrier& b) const { return elements_[lattice_.join(index(a), index(b))]; }
  bool leq(const Carrier& a, const Carrier& b) const { return lattice_.leq(index(a), index(b)); }
  int upper_cover_count(const Carrier& c) const { return static_cast<int>(lattice_.upper_covers(index(c)).size()); }
  int lower_cover_count(const Carrier& c) const { return static_cast<int>(lattice_.lower_covers(index(c)).size()); }

  std::vector<Carrier> pop_down_image() const { return select(lattice_.pop_down_image()); }
  std::vector<Carrier> pop_up_image() const { return select(lattice_.pop_up_image()); }
  QPolynomial pop_polynomial(PopDirection direction = PopDirection::down_with_upper_covers) const {
    return lattice_.pop_polynomial(direction);
  }

 private:
  std::vector<Carrier> select(const std::vector<std::size_t>& ids) const {
    std::vector<Carrier> out;
    out.reserve(ids.size());
    for (std::size_t i : ids) out.push_back(elements_[i]);
    return out;
  }

  std::vector<Carrier> elements_;
  FiniteLattice lattice_;
  std::unordered_map<Carrier, std::size_t> index_;
};

}  // namespace poplat
