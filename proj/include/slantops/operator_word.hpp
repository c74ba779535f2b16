#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slantops/lattice.hpp"
#include "slantops/scalar.hpp"
#include "slantops/symbol.hpp"

namespace slantops {

/// Deliberate engine defects, selectable at run time so the verification
/// campaign can demonstrate that its theorem tags actually discriminate.
/// Production paths always run with Mutation::none.
enum class Mutation {
  none,
  v_keeps_sign,           // V e_m = e_{+m/k} instead of e_{-m/k}
  v_skips_divisibility,   // V never drops; divides m by k with truncation
  adjoint_wrong_slant,    // star(V) = W*, star(V*) = W (negation lost in pairing)
  unit_vector_skewed,     // eps_j becomes eps_j + eps_{j+1 (cyclic)}
  conjugate_keeps_index,  // adjoint of Mul conjugates coefficients but not indices
};

struct EngineOptions {
  Mutation mutation = Mutation::none;
};

inline const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::v_keeps_sign: return "v-keeps-sign";
    case Mutation::v_skips_divisibility: return "v-skips-divisibility";
    case Mutation::adjoint_wrong_slant: return "adjoint-wrong-slant";
    case Mutation::unit_vector_skewed: return "unit-vector-skewed";
    case Mutation::conjugate_keeps_index: return "conjugate-keeps-index";
  }
  return "?";
}

/// eps_j as used by recurrence and intertwining checks; the mutated variant
/// exists only to exercise the suite's counterexample machinery.
inline MultiIndex unit_for_checks(int j, int n, const EngineOptions& opts) {
  MultiIndex e = unit(j, n);
  if (opts.mutation == Mutation::unit_vector_skewed) {
    e = e + unit(j % n + 1, n);
  }
  return e;
}

/// One generator letter: a multiplication operator M_phi or a slant letter
/// W_k, W_k*, V_k, V_k* of order k >= 2.
class Generator {
 public:
  enum class Kind { mul, slant_w, slant_w_adj, slant_v, slant_v_adj };

  static Generator mul(LaurentSymbol phi) {
    Generator g;
    g.kind_ = Kind::mul;
    g.dim_ = phi.dim();
    g.symbol_ = std::move(phi);
    return g;
  }

  static Generator slant(Kind kind, int k, int n) {
    if (kind == Kind::mul) throw std::invalid_argument("Generator::slant: not a slant kind");
    if (k < 2) throw std::invalid_argument("Generator: slant order k must be >= 2");
    if (n < 1) throw std::invalid_argument("Generator: dimension must be >= 1");
    Generator g;
    g.kind_ = kind;
    g.k_ = k;
    g.dim_ = n;
    return g;
  }

  static Generator slant_w(int k, int n) { return slant(Kind::slant_w, k, n); }
  static Generator slant_w_adj(int k, int n) { return slant(Kind::slant_w_adj, k, n); }
  static Generator slant_v(int k, int n) { return slant(Kind::slant_v, k, n); }
  static Generator slant_v_adj(int k, int n) { return slant(Kind::slant_v_adj, k, n); }

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int k() const { return k_; }
  const LaurentSymbol& symbol() const { return symbol_; }

  bool drops_indices() const { return kind_ == Kind::slant_w || kind_ == Kind::slant_v; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::mul: {
        std::ostringstream os;
        os << "M[" << symbol_.term_count() << " terms]";
        return os.str();
      }
      case Kind::slant_w: return "W" + std::to_string(k_);
      case Kind::slant_w_adj: return "W*" + std::to_string(k_);
      case Kind::slant_v: return "V" + std::to_string(k_);
      case Kind::slant_v_adj: return "V*" + std::to_string(k_);
    }
    return "?";
  }

 private:
  Generator() : symbol_(1) {}

  Kind kind_ = Kind::mul;
  int k_ = 0;
  int dim_ = 1;
  LaurentSymbol symbol_;
};

/// Componentwise truncating division; only the v_skips_divisibility mutant
/// reaches indices where the division is inexact.
inline MultiIndex divide_exact_truncating(const MultiIndex& m, const Int& k) {
  MultiIndex r(m);
  for (int j = 0; j < m.dim(); ++j) r[j] /= k;  // cpp_int truncates toward zero
  return r;
}

/// Exact action of a single generator on a finitely supported vector.
inline FourierVector apply_generator(const Generator& g, const FourierVector& v,
                                     const EngineOptions& opts = {}) {
  if (g.dim() != v.dim()) throw std::invalid_argument("apply_generator: dimension mismatch");
  FourierVector out(v.dim());
  switch (g.kind()) {
    case Generator::Kind::mul: {
      for (const auto& [s, c] : v.terms()) {
        if (c.is_one()) {
          for (const auto& [r, a] : g.symbol().terms()) out.add_to_coeff(r + s, a);
        } else {
          for (const auto& [r, a] : g.symbol().terms()) out.add_to_coeff(r + s, a * c);
        }
      }
      return out;
    }
    case Generator::Kind::slant_w: {
      const Int k(g.k());
      for (const auto& [m, c] : v.terms()) {
        if (divides(k, m)) out.add_to_coeff(divide_exact(m, k), c);
      }
      return out;
    }
    case Generator::Kind::slant_v: {
      const Int k(g.k());
      for (const auto& [m, c] : v.terms()) {
        if (opts.mutation == Mutation::v_skips_divisibility) {
          out.add_to_coeff(-divide_exact_truncating(m, k), c);
        } else if (divides(k, m)) {
          if (opts.mutation == Mutation::v_keeps_sign) {
            out.add_to_coeff(divide_exact(m, k), c);
          } else {
            out.add_to_coeff(-divide_exact(m, k), c);
          }
        }
      }
      return out;
    }
    case Generator::Kind::slant_w_adj: {
      const Int k(g.k());
      for (const auto& [m, c] : v.terms()) out.add_to_coeff(scale(k, m), c);
      return out;
    }
    case Generator::Kind::slant_v_adj: {
      const Int k(g.k());
      for (const auto& [m, c] : v.terms()) out.add_to_coeff(scale(-k, m), c);
      return out;
    }
  }
  return out;
}

/// A finite composition of generators. The leftmost letter applies last,
/// matching operator notation T = L1 L2 ... Lp. The empty word is the
/// identity operator.
class OperatorWord {
 public:
  explicit OperatorWord(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("OperatorWord: dimension must be >= 1");
  }

  OperatorWord(int dim, std::vector<Generator> letters) : OperatorWord(dim) {
    for (auto& g : letters) {
      if (g.dim() != dim_) throw std::invalid_argument("OperatorWord: letter dimension mismatch");
    }
    letters_ = std::move(letters);
  }

  static OperatorWord identity(int dim) { return OperatorWord(dim); }

  int dim() const { return dim_; }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Generator>& letters() const { return letters_; }

  OperatorWord& append(Generator g) {
    if (g.dim() != dim_) throw std::invalid_argument("OperatorWord: letter dimension mismatch");
    letters_.push_back(std::move(g));
    return *this;
  }

  /// Slant orders occurring in the word; more than one element means mixed
  /// orders, which is legal but worth flagging in reports.
  std::set<int> slant_orders() const {
    std::set<int> ks;
    for (const auto& g : letters_) {
      if (g.kind() != Generator::Kind::mul) ks.insert(g.k());
    }
    return ks;
  }

  bool has_mixed_slant_orders() const { return slant_orders().size() > 1; }

  /// Number of letters whose action can drop basis vectors (W and V).
  int dropping_letter_count() const {
    int c = 0;
    for (const auto& g : letters_) c += g.drops_indices() ? 1 : 0;
    return c;
  }

  std::string to_string() const {
    if (letters_.empty()) return "I";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << letters_[i].to_string();
    }
    return os.str();
  }

 private:
  int dim_;
  std::vector<Generator> letters_;
};

/// compose(w1, w2) acts as w1 after w2.
inline OperatorWord compose(const OperatorWord& w1, const OperatorWord& w2) {
  if (w1.dim() != w2.dim()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<Generator> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return OperatorWord(w1.dim(), std::move(letters));
}

/// Right-to-left fold of apply_generator; exact and linear in v.
inline FourierVector apply(const OperatorWord& w, const FourierVector& v,
                           const EngineOptions& opts = {}) {
  if (w.dim() != v.dim()) throw std::invalid_argument("apply: dimension mismatch");
  FourierVector cur = v;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    cur = apply_generator(*it, cur, opts);
    if (cur.is_zero()) break;
  }
  return cur;
}

/// Stars one letter. M_phi* = M_{conj phi}; V and V* swap, W and W* swap.
inline Generator star_letter(const Generator& g, const EngineOptions& opts = {}) {
  switch (g.kind()) {
    case Generator::Kind::mul: {
      if (opts.mutation == Mutation::conjugate_keeps_index) {
        LaurentSymbol broken(g.symbol().dim());
        for (const auto& [idx, c] : g.symbol().terms()) broken.set_coeff(idx, c.conj());
        return Generator::mul(std::move(broken));
      }
      return Generator::mul(g.symbol().conjugate());
    }
    case Generator::Kind::slant_w:
      return Generator::slant_w_adj(g.k(), g.dim());
    case Generator::Kind::slant_w_adj:
      return Generator::slant_w(g.k(), g.dim());
    case Generator::Kind::slant_v:
      return opts.mutation == Mutation::adjoint_wrong_slant
                 ? Generator::slant_w_adj(g.k(), g.dim())
                 : Generator::slant_v_adj(g.k(), g.dim());
    case Generator::Kind::slant_v_adj:
      return opts.mutation == Mutation::adjoint_wrong_slant
                 ? Generator::slant_w(g.k(), g.dim())
                 : Generator::slant_v(g.k(), g.dim());
  }
  throw std::logic_error("star_letter: unreachable");
}

/// Reverses the word and stars each letter.
inline OperatorWord adjoint(const OperatorWord& w, const EngineOptions& opts = {}) {
  std::vector<Generator> letters;
  letters.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(star_letter(*it, opts));
  }
  return OperatorWord(w.dim(), std::move(letters));
}

/// <T e_m, e_{m'}>: the coefficient of e_{m'} in apply(w, e_m).
inline RatComplex entry(const OperatorWord& w, const MultiIndex& m, const MultiIndex& m_prime,
                        const EngineOptions& opts = {}) {
  return apply(w, basis_vector(m), opts).coeff(m_prime);
}

/// S_phi^{k,n} = V_k^n M_phi.
inline OperatorWord make_slant_hankel(const LaurentSymbol& phi, int k) {
  OperatorWord w(phi.dim());
  w.append(Generator::slant_v(k, phi.dim()));
  w.append(Generator::mul(phi));
  return w;
}

/// A_phi^{k,n} = W_k^n M_phi.
inline OperatorWord make_slant_toeplitz(const LaurentSymbol& phi, int k) {
  OperatorWord w(phi.dim());
  w.append(Generator::slant_w(k, phi.dim()));
  w.append(Generator::mul(phi));
  return w;
}

inline OperatorWord make_mul(const LaurentSymbol& phi) {
  OperatorWord w(phi.dim());
  w.append(Generator::mul(phi));
  return w;
}

/// A rational combination of words; lets identities with operator sums
/// (commutators, differences) be compared exactly on basis vectors.
struct WordSum {
  std::vector<std::pair<RatComplex, OperatorWord>> terms;

  static WordSum of(OperatorWord w) {
    WordSum s;
    s.terms.emplace_back(RatComplex::one(), std::move(w));
    return s;
  }

  static WordSum difference(OperatorWord a, OperatorWord b) {
    WordSum s;
    s.terms.emplace_back(RatComplex::one(), std::move(a));
    s.terms.emplace_back(-RatComplex::one(), std::move(b));
    return s;
  }

  int dim() const { return terms.empty() ? 1 : terms.front().second.dim(); }
};

inline FourierVector apply_sum(const WordSum& s, const FourierVector& v,
                               const EngineOptions& opts = {}) {
  FourierVector acc(v.dim());
  for (const auto& [coeff, word] : s.terms) {
    FourierVector img = apply(word, v, opts);
    if (coeff.is_one()) {
      acc = acc + img;
    } else {
      acc = acc + img.scaled(coeff);
    }
  }
  return acc;
}

/// Witness of inequality found by a box comparison.
struct BoxCounterexample {
  MultiIndex input;
  FourierVector lhs;
  FourierVector rhs;
};

struct BoxComparison {
  bool equal = true;
  std::optional<BoxCounterexample> counterexample;
};

namespace detail {
template <class LhsFn, class RhsFn>
BoxComparison compare_on_box(LhsFn&& lhs, RhsFn&& rhs, const Box& cols) {
  BoxComparison result;
  cols.for_each([&](const MultiIndex& m) -> bool {
    FourierVector a = lhs(m);
    FourierVector b = rhs(m);
    if (a != b) {
      result.equal = false;
      result.counterexample = BoxCounterexample{m, std::move(a), std::move(b)};
      return false;
    }
    return true;
  });
  return result;
}
}  // namespace detail

/// True iff apply(w1, e_m) = apply(w2, e_m) exactly for every m in cols;
/// on failure carries the lexicographically first witnessing m and both
/// images. Both sides are linear, so equality on the box's basis vectors
/// proves equality on their span.
inline BoxComparison equal_on_box(const OperatorWord& w1, const OperatorWord& w2, const Box& cols,
                                  const EngineOptions& opts = {}) {
  if (w1.dim() != w2.dim() || w1.dim() != cols.dim()) {
    throw std::invalid_argument("equal_on_box: dimension mismatch");
  }
  return detail::compare_on_box(
      [&](const MultiIndex& m) { return apply(w1, basis_vector(m), opts); },
      [&](const MultiIndex& m) { return apply(w2, basis_vector(m), opts); }, cols);
}

inline BoxComparison equal_on_box(const WordSum& s1, const WordSum& s2, const Box& cols,
                                  const EngineOptions& opts = {}) {
  return detail::compare_on_box(
      [&](const MultiIndex& m) { return apply_sum(s1, basis_vector(m), opts); },
      [&](const MultiIndex& m) { return apply_sum(s2, basis_vector(m), opts); }, cols);
}

/// Comparison box for a word identity. Per coordinate the halfwidth covers
/// the largest Minkowski-combined symbol support among the compared words,
/// plus one full divisibility period k^d (d = most dropping letters in any
/// word, capped at 2) and one cell of padding, so every stored coefficient
/// is exercised at indices where each side can act nontrivially and no
/// identity passes vacuously.
inline Box comparison_box(const std::vector<const OperatorWord*>& words) {
  if (words.empty()) throw std::invalid_argument("comparison_box: no words");
  const int n = words.front()->dim();
  int max_order = 2;
  int max_drops = 0;
  std::vector<Int> halfwidth(static_cast<std::size_t>(n), Int(0));
  for (const OperatorWord* w : words) {
    if (w->dim() != n) throw std::invalid_argument("comparison_box: dimension mismatch");
    std::vector<Int> word_extent(static_cast<std::size_t>(n), Int(0));
    for (const auto& g : w->letters()) {
      if (g.kind() == Generator::Kind::mul) {
        auto ext = g.symbol().support_extents();
        for (int j = 0; j < n; ++j) word_extent[static_cast<std::size_t>(j)] += ext[static_cast<std::size_t>(j)];
      } else {
        max_order = std::max(max_order, g.k());
      }
    }
    max_drops = std::max(max_drops, w->dropping_letter_count());
    for (int j = 0; j < n; ++j) {
      halfwidth[static_cast<std::size_t>(j)] =
          std::max(halfwidth[static_cast<std::size_t>(j)], word_extent[static_cast<std::size_t>(j)]);
    }
  }
  Int pad = 1;
  const int depth = std::min(max_drops, 2);
  for (int i = 0; i < depth; ++i) pad *= max_order;
  for (auto& h : halfwidth) h += pad + 1;
  return Box::centered(halfwidth);
}

inline Box comparison_box(const OperatorWord& a, const OperatorWord& b) {
  return comparison_box({&a, &b});
}

}  // namespace slantops
