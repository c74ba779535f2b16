#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slantops/lattice.hpp"
#include "slantops/operator_word.hpp"
#include "slantops/scalar.hpp"

namespace slantops {

/// Dense finite block of entries <T e_m, e_{m'}> with m ranging over cols and
/// m' over rows, both in lexicographic enumeration order.
class MatrixWindow {
 public:
  MatrixWindow(Box rows, Box cols)
      : rows_(std::move(rows)), cols_(std::move(cols)) {
    if (rows_.dim() != cols_.dim()) throw std::invalid_argument("MatrixWindow: dimension mismatch");
    const Int total = rows_.cardinality() * cols_.cardinality();
    if (total > Int(1) << 26) throw std::invalid_argument("MatrixWindow: window too large");
    n_rows_ = static_cast<std::size_t>(rows_.cardinality());
    n_cols_ = static_cast<std::size_t>(cols_.cardinality());
    entries_.assign(n_rows_ * n_cols_, RatComplex());
  }

  int dim() const { return rows_.dim(); }
  const Box& rows() const { return rows_; }
  const Box& cols() const { return cols_; }
  std::size_t row_count() const { return n_rows_; }
  std::size_t col_count() const { return n_cols_; }

  const RatComplex& at(const MultiIndex& m_prime, const MultiIndex& m) const {
    return entries_[ordinal(rows_, m_prime) * n_cols_ + ordinal(cols_, m)];
  }

  RatComplex& at(const MultiIndex& m_prime, const MultiIndex& m) {
    return entries_[ordinal(rows_, m_prime) * n_cols_ + ordinal(cols_, m)];
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  /// Lexicographic position of m inside box b; throws if m is outside.
  static std::size_t ordinal(const Box& b, const MultiIndex& m) {
    if (!b.contains(m)) throw std::out_of_range("MatrixWindow: index outside box");
    Int ord = 0;
    for (int j = 0; j < b.dim(); ++j) {
      const Int width = b.upper()[j] - b.lower()[j] + 1;
      ord = ord * width + (m[j] - b.lower()[j]);
    }
    return static_cast<std::size_t>(ord);
  }

  /// Row per m', column per m; multi-index labels are quoted since they
  /// contain commas.
  void write_csv(std::ostream& os) const {
    os << "\"m' \\\\ m\"";
    cols_.for_each([&](const MultiIndex& m) { os << ",\"" << m.to_string() << '"'; });
    os << '\n';
    rows_.for_each([&](const MultiIndex& mp) {
      os << '"' << mp.to_string() << '"';
      cols_.for_each([&](const MultiIndex& m) { os << ',' << format_scalar(at(mp, m)); });
      os << '\n';
    });
  }

 private:
  Box rows_, cols_;
  std::size_t n_rows_ = 0, n_cols_ = 0;
  std::vector<RatComplex> entries_;
};

/// Dense table of entry(word, m, m') for m in cols, m' in rows. The word is
/// applied once per column and its coefficients scattered into the table, so
/// truncation never corrupts the slant action: entries are exact.
inline MatrixWindow matrix_window(const OperatorWord& word, const Box& rows, const Box& cols,
                                  const EngineOptions& opts = {}) {
  if (word.dim() != rows.dim() || word.dim() != cols.dim()) {
    throw std::invalid_argument("matrix_window: dimension mismatch");
  }
  MatrixWindow wnd(rows, cols);
  cols.for_each([&](const MultiIndex& m) {
    const FourierVector image = apply(word, basis_vector(m), opts);
    for (const auto& [idx, c] : image.terms()) {
      if (rows.contains(idx)) wnd.at(idx, m) = c;
    }
  });
  return wnd;
}

}  // namespace slantops
