#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slantops/lattice.hpp"
#include "slantops/scalar.hpp"

namespace slantops {

/// A multivariate Laurent polynomial phi(z) = sum_r a_r z^r with finitely many
/// nonzero Fourier coefficients, kept in canonical form: the coefficient map
/// stores only nonzero entries, and the zero symbol has an empty map.
///
/// The same representation serves both roles of the calculus: symbols phi in
/// L^inf (which multiply) and finitely supported vectors g in L^2 (which are
/// acted upon). FourierVector below is an alias for the second role.
class LaurentSymbol {
 public:
  using TermMap = std::map<MultiIndex, RatComplex>;

  explicit LaurentSymbol(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentSymbol: dimension must be >= 1");
  }

  static LaurentSymbol zero(int dim) { return LaurentSymbol(dim); }

  static LaurentSymbol constant(int dim, RatComplex c) {
    LaurentSymbol s(dim);
    s.set_coeff(MultiIndex::zero(dim), std::move(c));
    return s;
  }

  static LaurentSymbol monomial(RatComplex c, const MultiIndex& exponent) {
    LaurentSymbol s(exponent.dim());
    s.set_coeff(exponent, std::move(c));
    return s;
  }

  /// The coordinate symbol z_j^power (1-based j).
  static LaurentSymbol coordinate(int j, int n, const Int& power = 1) {
    return monomial(RatComplex::one(), scale(power, unit(j, n)));
  }

  int dim() const { return dim_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }
  const TermMap& terms() const { return coeffs_; }

  RatComplex coeff(const MultiIndex& r) const {
    check_index(r);
    auto it = coeffs_.find(r);
    return it == coeffs_.end() ? RatComplex() : it->second;
  }

  void set_coeff(const MultiIndex& r, RatComplex c) {
    check_index(r);
    if (c.is_zero()) {
      coeffs_.erase(r);
    } else {
      coeffs_[r] = std::move(c);
    }
  }

  void add_to_coeff(const MultiIndex& r, const RatComplex& c) {
    check_index(r);
    auto [it, inserted] = coeffs_.try_emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    } else if (it->second.is_zero()) {
      coeffs_.erase(it);
    }
  }

  LaurentSymbol operator+(const LaurentSymbol& o) const {
    check_dim(o);
    LaurentSymbol r(*this);
    for (const auto& [idx, c] : o.coeffs_) r.add_to_coeff(idx, c);
    return r;
  }

  LaurentSymbol operator-(const LaurentSymbol& o) const {
    check_dim(o);
    LaurentSymbol r(*this);
    for (const auto& [idx, c] : o.coeffs_) r.add_to_coeff(idx, -c);
    return r;
  }

  LaurentSymbol operator-() const {
    LaurentSymbol r(dim_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
  }

  /// Coefficient convolution: realizes the pointwise product on the torus.
  LaurentSymbol operator*(const LaurentSymbol& o) const {
    check_dim(o);
    LaurentSymbol r(dim_);
    for (const auto& [s, a] : coeffs_) {
      for (const auto& [t, b] : o.coeffs_) {
        r.add_to_coeff(s + t, a * b);
      }
    }
    return r;
  }

  LaurentSymbol scaled(const RatComplex& c) const {
    LaurentSymbol r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [idx, a] : coeffs_) r.coeffs_.emplace(idx, c * a);
    return r;
  }

  bool operator==(const LaurentSymbol& o) const { return dim_ == o.dim_ && coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentSymbol& o) const { return !(*this == o); }

  /// Conjugation on the torus: |z| = 1 forces conj(z^r) = z^{-r}, so
  /// a_r z^r maps to conj(a_r) z^{-r}.
  LaurentSymbol conjugate() const {
    LaurentSymbol r(dim_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(-idx, c.conj());
    return r;
  }

  /// phi(z^{-k}): the coefficient of z^r moves to z^{-k r}.
  LaurentSymbol substitute_neg_k(const Int& k) const {
    LaurentSymbol r(dim_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(scale(-k, idx), c);
    return r;
  }

  /// The symbol-level action of V_k^n: sum u_m z^m maps to sum u_{km} z^{-m}.
  /// Indices not divisible by k are discarded.
  LaurentSymbol slant_transform(const Int& k) const {
    LaurentSymbol r(dim_);
    for (const auto& [idx, c] : coeffs_) {
      if (divides(k, idx)) r.coeffs_.emplace(-divide_exact(idx, k), c);
    }
    return r;
  }

  /// sum_r |a_r|^2, exact.
  Rational l2_norm_sq() const {
    Rational s(0);
    for (const auto& [idx, c] : coeffs_) s += c.norm_sq();
    return s;
  }

  /// Max of |phi(z)| over the uniform grid z_j = exp(2 pi i t_j / grid_per_dim).
  /// A lower bound of the true sup norm; float-only, never used for verdicts.
  double sup_norm_estimate(int grid_per_dim) const {
    if (grid_per_dim < 1) throw std::invalid_argument("sup_norm_estimate: grid must be >= 1");
    if (coeffs_.empty()) return 0.0;
    double best = 0.0;
    std::vector<int> t(static_cast<std::size_t>(dim_), 0);
    const double step = 2.0 * std::numbers::pi / grid_per_dim;
    for (;;) {
      std::complex<double> val(0.0, 0.0);
      for (const auto& [idx, c] : coeffs_) {
        double angle = 0.0;
        for (int j = 0; j < dim_; ++j) {
          angle += static_cast<double>(idx[j]) * step * t[static_cast<std::size_t>(j)];
        }
        val += c.to_complex_double() * std::complex<double>(std::cos(angle), std::sin(angle));
      }
      best = std::max(best, std::abs(val));
      int j = dim_ - 1;
      while (j >= 0) {
        if (++t[static_cast<std::size_t>(j)] < grid_per_dim) break;
        t[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
    return best;
  }

  /// Per-coordinate max of |r_j| over the support; all zeros for the zero symbol.
  std::vector<Int> support_extents() const {
    std::vector<Int> ext(static_cast<std::size_t>(dim_), Int(0));
    for (const auto& [idx, c] : coeffs_) {
      for (int j = 0; j < dim_; ++j) {
        Int a = abs(idx[j]);
        if (ext[static_cast<std::size_t>(j)] < a) ext[static_cast<std::size_t>(j)] = a;
      }
    }
    return ext;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      os << '(' << format_scalar(c) << ")z^" << idx.to_string();
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentSymbol& s) {
    return os << s.to_string();
  }

 private:
  void check_dim(const LaurentSymbol& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("LaurentSymbol: dimension mismatch");
  }
  void check_index(const MultiIndex& r) const {
    if (r.dim() != dim_) throw std::invalid_argument("LaurentSymbol: index dimension mismatch");
  }

  int dim_;
  TermMap coeffs_;
};

/// A finitely supported element of L^2(T^n), represented by its coefficient
/// map exactly like a symbol.
using FourierVector = LaurentSymbol;

/// The basis vector e_m.
inline FourierVector basis_vector(const MultiIndex& m) {
  return LaurentSymbol::monomial(RatComplex::one(), m);
}

inline LaurentSymbol sym_add(const LaurentSymbol& a, const LaurentSymbol& b) { return a + b; }
inline LaurentSymbol sym_mul(const LaurentSymbol& a, const LaurentSymbol& b) { return a * b; }
inline bool sym_equal(const LaurentSymbol& a, const LaurentSymbol& b) { return a == b; }

}  // namespace slantops
