#pragma once

// Dyck paths as order ideals of the type A and type B root posets.
// J_A(m): all paths of semi-length m. J_B(n): paths of semi-length 2n that are
// symmetric about x = 2n. In both, going up one cover turns one valley (or one
// mirrored pair of valleys) into a peak.

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "poplat/errors.hpp"
#include "poplat/lattice.hpp"

namespace poplat {

class DyckPath {
 public:
  DyckPath() = default;

  /// steps over {'r', 'f'}; throws if the path dips below the axis or does not return.
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    int h = 0;
    for (char s : steps_) {
      if (s == 'r') {
        ++h;
      } else if (s == 'f') {
        if (--h < 0) throw InvalidInput("path \"" + steps_ + "\" goes below the axis");
      } else {
        throw InvalidInput(std::string("unexpected step '") + s + "' in path");
      }
    }
    if (h != 0) throw InvalidInput("path \"" + steps_ + "\" does not end on the axis");
  }

  static DyckPath trusted(std::string steps) {
    DyckPath p;
    p.steps_ = std::move(steps);
    return p;
  }

  const std::string& steps() const noexcept { return steps_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }
  int length() const noexcept { return static_cast<int>(steps_.size()); }

  /// h_0 .. h_{2m}.
  std::vector<int> heights() const {
    std::vector<int> h{0};
    for (char s : steps_) h.push_back(h.back() + (s == 'r' ? 1 : -1));
    return h;
  }

  /// x-coordinates of valleys (fall then rise).
  std::vector<int> valleys() const {
    std::vector<int> out;
    for (int i = 1; i < length(); ++i) {
      if (steps_[i - 1] == 'f' && steps_[i] == 'r') out.push_back(i);
    }
    return out;
  }

  /// x-coordinates of peaks (rise then fall).
  std::vector<int> peaks() const {
    std::vector<int> out;
    for (int i = 1; i < length(); ++i) {
      if (steps_[i - 1] == 'r' && steps_[i] == 'f') out.push_back(i);
    }
    return out;
  }

  /// Peaks with apex height at least 2, the ones that can be pushed down.
  std::vector<int> flippable_peaks() const {
    const auto h = heights();
    std::vector<int> out;
    for (int x : peaks()) {
      if (h[x] >= 2) out.push_back(x);
    }
    return out;
  }

  /// Mirror image about x = m: reverse and swap rises with falls.
  DyckPath mirrored() const {
    std::string out(steps_.rbegin(), steps_.rend());
    for (char& s : out) s = s == 'r' ? 'f' : 'r';
    return trusted(std::move(out));
  }

  bool is_symmetric() const { return mirrored() == *this; }

  /// Pointwise height comparison, the inclusion order on ideals.
  bool below(const DyckPath& other) const {
    if (length() != other.length()) throw InvalidInput("paths of different lengths are incomparable");
    const auto a = heights(), b = other.heights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

inline std::string to_text(const DyckPath& p) { return p.steps(); }
inline DyckPath parse_path(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r' && ch != ',') s.push_back(ch);
  }
  return DyckPath(std::move(s));
}

inline DyckPath parse_symmetric_path(std::string_view text) {
  auto p = parse_path(text);
  if (p.semilength() % 2 != 0 || !p.is_symmetric()) {
    throw InvalidInput("path \"" + p.steps() + "\" is not symmetric of even semi-length");
  }
  return p;
}

}  // namespace poplat

template <>
struct std::hash<poplat::DyckPath> {
  std::size_t operator()(const poplat::DyckPath& p) const noexcept { return std::hash<std::string>{}(p.steps()); }
};

namespace poplat {

/// All paths of semi-length m in lexicographic order ('f' < 'r').
inline std::vector<DyckPath> enumerate_dyck(int m) {
  if (m < 0) throw InvalidInput("semi-length must be non-negative");
  if (m > 14) throw GuardExceeded("enumerate_dyck: semi-length " + std::to_string(m) + " exceeds the guard of 14");
  std::vector<DyckPath> out;
  std::string s(2 * m, ' ');
  std::function<void(int, int, int)> go = [&](int pos, int up, int h) {
    if (pos == 2 * m) {
      out.push_back(DyckPath::trusted(s));
      return;
    }
    if (h > 0) {
      s[pos] = 'f';
      go(pos + 1, up, h - 1);
    }
    if (up < m) {
      s[pos] = 'r';
      go(pos + 1, up + 1, h + 1);
    }
  };
  go(0, 0, 0);
  return out;
}

inline std::vector<DyckPath> enumerate_symmetric_dyck(int n) {
  std::vector<DyckPath> out;
  for (auto& p : enumerate_dyck(2 * n)) {
    if (p.is_symmetric()) out.push_back(std::move(p));
  }
  return out;
}

namespace detail {
inline DyckPath flip_valley(const DyckPath& p, int x) {
  std::string s = p.steps();
  s[x - 1] = 'r';
  s[x] = 'f';
  return DyckPath::trusted(std::move(s));
}
}  // namespace detail

/// Pop-up on either ideal lattice: every valley becomes a peak at once.
inline DyckPath pop_up_path(const DyckPath& p) {
  std::string s = p.steps();
  for (int x : p.valleys()) {
    s[x - 1] = 'r';
    s[x] = 'f';
  }
  return DyckPath::trusted(std::move(s));
}

/// Upper covers in J_A: flip one valley.
inline std::vector<DyckPath> j_a_upper_covers(const DyckPath& p) {
  std::vector<DyckPath> out;
  for (int x : p.valleys()) out.push_back(detail::flip_valley(p, x));
  return out;
}

/// Upper covers in J_B: flip the central valley, or an off-centre valley together with its mirror.
inline std::vector<DyckPath> j_b_upper_covers(const DyckPath& p) {
  const int centre = p.semilength();
  std::vector<DyckPath> out;
  for (int x : p.valleys()) {
    if (x == centre) {
      out.push_back(detail::flip_valley(p, x));
    } else if (x < centre) {
      out.push_back(detail::flip_valley(detail::flip_valley(p, x), p.length() - x));
    }
  }
  return out;
}

using IdealLattice = CarrierLattice<DyckPath>;

namespace detail {
template <class Covers>
IdealLattice build_ideal_lattice(std::vector<DyckPath> elements, Covers&& upper, LatticeOptions options) {
  std::unordered_map<DyckPath, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  CoverList covers;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& up : upper(elements[i])) covers.emplace_back(i, index.at(up));
  }
  return IdealLattice(std::move(elements), covers, options);
}
}  // namespace detail

inline IdealLattice build_j_a(int m, LatticeOptions options = {}) {
  if (m < 1) throw InvalidInput("j-a needs semi-length >= 1");
  if (m > 10) throw GuardExceeded("j-a: semi-length " + std::to_string(m) + " exceeds the guard of 10");
  return detail::build_ideal_lattice(enumerate_dyck(m), j_a_upper_covers, options);
}

inline IdealLattice build_j_b(int n, LatticeOptions options = {}) {
  if (n < 1) throw InvalidInput("j-b needs n >= 1");
  if (n > 5) throw GuardExceeded("j-b: n = " + std::to_string(n) + " exceeds the guard of 5");
  return detail::build_ideal_lattice(enumerate_symmetric_dyck(n), j_b_upper_covers, options);
}

/// Membership in the Pop-up image: no ffrr factor and no interior contact with the axis.
inline bool image_predicate(const DyckPath& p) {
  if (p.steps().find("ffrr") != std::string::npos) return false;
  const auto h = p.heights();
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] == 0) return false;
  }
  return true;
}

inline bool image_predicate_a(const DyckPath& p) { return image_predicate(p); }

inline bool image_predicate_b(const DyckPath& p) {
  if (!p.is_symmetric()) throw InvalidInput("path \"" + p.steps() + "\" is not symmetric");
  return image_predicate(p);
}

inline bool has_ffrr(const DyckPath& p) { return p.steps().find("ffrr") != std::string::npos; }

/// Number of lower covers of p in the lattice.
inline int d_statistic(const IdealLattice& lattice, const DyckPath& p) { return lattice.lower_cover_count(p); }

/// Peaks of a symmetric path with x-coordinate at most half its width.
inline int p_statistic(const DyckPath& p) {
  if (!p.is_symmetric()) throw InvalidInput("path \"" + p.steps() + "\" is not symmetric");
  const int centre = p.semilength();
  const auto peaks = p.peaks();
  return static_cast<int>(std::count_if(peaks.begin(), peaks.end(), [&](int x) { return x <= centre; }));
}

/// Strip the first rise and the last fall.
inline DyckPath strip_elevation(const DyckPath& p) {
  if (p.length() < 2 || p.steps().front() != 'r' || p.steps().back() != 'f') {
    throw InvalidInput("path is not elevated");
  }
  return DyckPath(p.steps().substr(1, p.steps().size() - 2));
}

}  // namespace poplat
