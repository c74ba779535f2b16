#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slantops {

/// Arbitrary-precision signed integer. Lattice coordinates never overflow,
/// which matters for iterated index expressions like k^2 m' - m + (k^2+k) e_j.
using Int = boost::multiprecision::cpp_int;

/// A point of Z^n, indexing the Fourier basis vector e_m = z^m.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }

  MultiIndex(std::initializer_list<long long> entries)
      : entries_(entries.begin(), entries.end()) {
    if (entries_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }

  static MultiIndex zero(int n) {
    if (n < 1) throw std::invalid_argument("MultiIndex::zero: dimension must be >= 1");
    return MultiIndex(std::vector<Int>(static_cast<std::size_t>(n)));
  }

  int dim() const { return static_cast<int>(entries_.size()); }
  const Int& operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  Int& operator[](int j) { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
  }

  MultiIndex operator+(const MultiIndex& o) const {
    check_dim(o);
    MultiIndex r(*this);
    for (int j = 0; j < dim(); ++j) r.entries_[static_cast<std::size_t>(j)] += o[j];
    return r;
  }

  MultiIndex operator-(const MultiIndex& o) const {
    check_dim(o);
    MultiIndex r(*this);
    for (int j = 0; j < dim(); ++j) r.entries_[static_cast<std::size_t>(j)] -= o[j];
    return r;
  }

  MultiIndex operator-() const {
    MultiIndex r(*this);
    for (auto& v : r.entries_) v = -v;
    return r;
  }

  friend MultiIndex operator*(const Int& c, const MultiIndex& m) {
    MultiIndex r(m);
    for (auto& v : r.entries_) v *= c;
    return r;
  }

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }

  /// Lexicographic order; also the documented enumeration order of boxes.
  bool operator<(const MultiIndex& o) const {
    check_dim(o);
    for (int j = 0; j < dim(); ++j) {
      if (entries_[static_cast<std::size_t>(j)] < o[j]) return true;
      if (o[j] < entries_[static_cast<std::size_t>(j)]) return false;
    }
    return false;
  }

  /// Serializes as comma-separated integers in parentheses, e.g. "(-2,0,3)".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (int j = 0; j < dim(); ++j) {
      if (j) os << ',';
      os << entries_[static_cast<std::size_t>(j)];
    }
    os << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
    return os << m.to_string();
  }

 private:
  void check_dim(const MultiIndex& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("MultiIndex: dimension mismatch");
  }

  std::vector<Int> entries_;
};

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) { return a + b; }
inline MultiIndex negate(const MultiIndex& m) { return -m; }
inline MultiIndex scale(const Int& c, const MultiIndex& m) { return c * m; }

/// The unit index eps_j: 1 in slot j (1-based), 0 elsewhere.
inline MultiIndex unit(int j, int n) {
  if (n < 1) throw std::invalid_argument("unit: dimension must be >= 1");
  if (j < 1 || j > n) throw std::out_of_range("unit: coordinate out of range");
  MultiIndex m = MultiIndex::zero(n);
  m[j - 1] = 1;
  return m;
}

/// True iff k divides every component of m, so that m/k lies in Z^n.
inline bool divides(const Int& k, const MultiIndex& m) {
  for (int j = 0; j < m.dim(); ++j) {
    if (m[j] % k != 0) return false;
  }
  return true;
}

/// Componentwise exact division; caller must have checked divides(k, m).
inline MultiIndex divide_exact(const MultiIndex& m, const Int& k) {
  MultiIndex r(m);
  for (int j = 0; j < m.dim(); ++j) r[j] /= k;
  return r;
}

/// Inclusive coordinate-aligned box of lattice points.
class Box {
 public:
  Box(MultiIndex lower, MultiIndex upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.dim() != upper_.dim()) throw std::invalid_argument("Box: dimension mismatch");
    for (int j = 0; j < lower_.dim(); ++j) {
      if (upper_[j] < lower_[j]) throw std::invalid_argument("Box: lower must not exceed upper");
    }
  }

  /// The centered cube [-h, h]^n.
  static Box centered(int n, const Int& h) {
    MultiIndex lo = MultiIndex::zero(n), hi = MultiIndex::zero(n);
    for (int j = 0; j < n; ++j) {
      lo[j] = -h;
      hi[j] = h;
    }
    return Box(std::move(lo), std::move(hi));
  }

  /// Cube with per-coordinate halfwidths h_j.
  static Box centered(const std::vector<Int>& halfwidths) {
    const int n = static_cast<int>(halfwidths.size());
    MultiIndex lo = MultiIndex::zero(n), hi = MultiIndex::zero(n);
    for (int j = 0; j < n; ++j) {
      lo[j] = -halfwidths[static_cast<std::size_t>(j)];
      hi[j] = halfwidths[static_cast<std::size_t>(j)];
    }
    return Box(std::move(lo), std::move(hi));
  }

  int dim() const { return lower_.dim(); }
  const MultiIndex& lower() const { return lower_; }
  const MultiIndex& upper() const { return upper_; }

  bool contains(const MultiIndex& m) const {
    if (m.dim() != dim()) return false;
    for (int j = 0; j < dim(); ++j) {
      if (m[j] < lower_[j] || upper_[j] < m[j]) return false;
    }
    return true;
  }

  Int cardinality() const {
    Int c = 1;
    for (int j = 0; j < dim(); ++j) c *= upper_[j] - lower_[j] + 1;
    return c;
  }

  /// Streams all points in lexicographic order without materializing them.
  /// fn returning false stops the walk early.
  template <class Fn>
  void for_each(Fn&& fn) const {
    MultiIndex cur = lower_;
    for (;;) {
      if constexpr (std::is_void_v<decltype(fn(cur))>) {
        fn(cur);
      } else {
        if (!fn(cur)) return;
      }
      int j = dim() - 1;
      while (j >= 0) {
        if (cur[j] < upper_[j]) {
          ++cur[j];
          break;
        }
        cur[j] = lower_[j];
        --j;
      }
      if (j < 0) return;
    }
  }

  bool operator==(const Box& o) const { return lower_ == o.lower_ && upper_ == o.upper_; }

  std::string to_string() const { return lower_.to_string() + ".." + upper_.to_string(); }

 private:
  MultiIndex lower_, upper_;
};

/// All lattice points of b in lexicographic order, no repeats.
inline std::vector<MultiIndex> enumerate_box(const Box& b) {
  std::vector<MultiIndex> out;
  b.for_each([&](const MultiIndex& m) { out.push_back(m); });
  return out;
}

}  // namespace slantops
