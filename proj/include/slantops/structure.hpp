#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slantops/lattice.hpp"
#include "slantops/matrix_window.hpp"
#include "slantops/operator_word.hpp"
#include "slantops/scalar.hpp"
#include "slantops/symbol.hpp"

namespace slantops {

enum class ViolationKind { entry_recurrence, intertwining, norm_defect };

inline const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::entry_recurrence: return "entry-recurrence";
    case ViolationKind::intertwining: return "intertwining";
    case ViolationKind::norm_defect: return "norm-defect";
  }
  return "?";
}

/// A located counterexample: two scalar values that should agree but do not.
/// m is the column (input) index, m_prime the row (output) index, coord the
/// 1-based coordinate j of the recurrence direction (0 when not applicable).
struct Violation {
  ViolationKind kind = ViolationKind::entry_recurrence;
  MultiIndex m;
  MultiIndex m_prime;
  int coord = 0;
  RatComplex lhs;
  RatComplex rhs;
  std::string theorem_tag;
};

enum class TriState { yes, no, inconclusive };

inline const char* tristate_name(TriState t) {
  switch (t) {
    case TriState::yes: return "true";
    case TriState::no: return "false";
    case TriState::inconclusive: return "inconclusive";
  }
  return "?";
}

/// First coefficient where two vectors disagree; both are canonical maps, so
/// walking the union of supports in order finds the lexicographically first.
inline std::optional<std::tuple<MultiIndex, RatComplex, RatComplex>> first_difference(
    const FourierVector& a, const FourierVector& b) {
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      return std::make_tuple(ia->first, ia->second, RatComplex());
    }
    if (ia == ea || (ib != eb && ib->first < ia->first)) {
      return std::make_tuple(ib->first, RatComplex(), ib->second);
    }
    if (ia->second != ib->second) return std::make_tuple(ia->first, ia->second, ib->second);
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

/// Converts a failed box comparison into a located Violation.
inline Violation violation_from_counterexample(ViolationKind kind, const BoxCounterexample& ce,
                                               int coord = 0) {
  auto diff = first_difference(ce.lhs, ce.rhs);
  if (!diff) throw std::logic_error("violation_from_counterexample: images are equal");
  Violation v;
  v.kind = kind;
  v.m = ce.input;
  v.m_prime = std::get<0>(*diff);
  v.coord = coord;
  v.lhs = std::get<1>(*diff);
  v.rhs = std::get<2>(*diff);
  return v;
}

struct WindowCheckResult {
  TriState verdict = TriState::inconclusive;
  std::vector<Violation> violations;
  long long pairs_checked = 0;
};

inline constexpr std::size_t kMaxReportedViolations = 16;

/// Checks the defining recurrence of a k-th order slant Hankel matrix of
/// level n on a finite window: entries[m'+eps_j][m-k eps_j] = entries[m'][m]
/// for every coordinate j and every pair with both positions inside the
/// window. Windows too small to contain a single checkable pair yield an
/// inconclusive verdict rather than a vacuous true.
inline WindowCheckResult is_slant_hankel_window(const MatrixWindow& wnd, int k,
                                                const EngineOptions& opts = {}) {
  if (k < 2) throw std::invalid_argument("is_slant_hankel_window: k must be >= 2");
  const int n = wnd.dim();
  WindowCheckResult result;
  for (int j = 1; j <= n; ++j) {
    const MultiIndex eps = unit_for_checks(j, n, opts);
    const MultiIndex k_eps = scale(Int(k), eps);
    wnd.rows().for_each([&](const MultiIndex& mp) {
      const MultiIndex mp_shift = mp + eps;
      if (!wnd.rows().contains(mp_shift)) return;
      wnd.cols().for_each([&](const MultiIndex& m) {
        const MultiIndex m_shift = m - k_eps;
        if (!wnd.cols().contains(m_shift)) return;
        ++result.pairs_checked;
        const RatComplex& shifted = wnd.at(mp_shift, m_shift);
        const RatComplex& base = wnd.at(mp, m);
        if (shifted != base) {
          if (result.violations.size() < kMaxReportedViolations) {
            Violation v;
            v.kind = ViolationKind::entry_recurrence;
            v.m = m;
            v.m_prime = mp;
            v.coord = j;
            v.lhs = shifted;
            v.rhs = base;
            result.violations.push_back(std::move(v));
          }
        }
      });
    });
  }
  if (result.pairs_checked == 0) {
    result.verdict = TriState::inconclusive;
  } else {
    result.verdict = result.violations.empty() ? TriState::yes : TriState::no;
  }
  return result;
}

struct IntertwiningResult {
  bool ok = true;
  std::vector<Violation> violations;
};

/// The operator characterization M_{z_j} S = S M_{z_j^{-k}} for every
/// coordinate j, verified exactly on the basis vectors of box.
inline IntertwiningResult check_intertwining(const OperatorWord& word, int k, const Box& box,
                                             const EngineOptions& opts = {}) {
  if (k < 2) throw std::invalid_argument("check_intertwining: k must be >= 2");
  const int n = word.dim();
  IntertwiningResult result;
  for (int j = 1; j <= n; ++j) {
    const MultiIndex eps = unit_for_checks(j, n, opts);
    const OperatorWord lhs = compose(make_mul(LaurentSymbol::monomial(RatComplex::one(), eps)), word);
    const OperatorWord rhs =
        compose(word, make_mul(LaurentSymbol::monomial(RatComplex::one(), scale(Int(-k), eps))));
    BoxComparison cmp = equal_on_box(lhs, rhs, box, opts);
    if (!cmp.equal) {
      result.ok = false;
      Violation v = violation_from_counterexample(ViolationKind::intertwining, *cmp.counterexample, j);
      result.violations.push_back(std::move(v));
    }
  }
  return result;
}

struct HyponormalityWitness {
  MultiIndex m;
  Rational adjoint_norm_sq;
  Rational direct_norm_sq;
};

/// Smallest box with -supp(phi) in its interior; the hyponormality and
/// injectivity searches are guaranteed to conclude inside it.
inline Box support_search_box(const LaurentSymbol& phi, int pad = 1) {
  auto ext = phi.support_extents();
  for (auto& e : ext) e += pad;
  return Box::centered(ext);
}

/// Searches box for m with ||S_phi* e_m||^2 > ||S_phi e_m||^2, i.e. a basis
/// vector breaking hyponormality. Returns the lexicographically smallest
/// witness, or nothing (in particular always nothing for phi = 0).
inline std::optional<HyponormalityWitness> hyponormality_witness(const LaurentSymbol& phi, int k,
                                                                 const Box& box,
                                                                 const EngineOptions& opts = {}) {
  const OperatorWord s = make_slant_hankel(phi, k);
  const OperatorWord s_adj = adjoint(s, opts);
  std::optional<HyponormalityWitness> found;
  box.for_each([&](const MultiIndex& m) -> bool {
    const Rational a = apply(s_adj, basis_vector(m), opts).l2_norm_sq();
    const Rational b = apply(s, basis_vector(m), opts).l2_norm_sq();
    if (a > b) {
      found = HyponormalityWitness{m, a, b};
      return false;
    }
    return true;
  });
  return found;
}

struct IsometryDefect {
  Rational max_defect{0};
  std::optional<MultiIndex> argmax;
  bool identity_check = false;
};

/// Direct basis-vector isometry defects max_m | ||S_phi e_m||^2 - 1 | over
/// box, plus the exact operator identity S_phi S_phi* = M_{V(|phi|^2)}.
inline IsometryDefect isometry_defect(const LaurentSymbol& phi, int k, const Box& box,
                                      const EngineOptions& opts = {}) {
  const OperatorWord s = make_slant_hankel(phi, k);
  IsometryDefect result;
  box.for_each([&](const MultiIndex& m) {
    Rational d = apply(s, basis_vector(m), opts).l2_norm_sq() - 1;
    if (d < 0) d = -d;
    if (!result.argmax || d > result.max_defect) {
      result.max_defect = d;
      result.argmax = m;
    }
  });
  const LaurentSymbol upsilon = (phi * phi.conjugate()).slant_transform(Int(k));
  const OperatorWord lhs = compose(s, adjoint(s, opts));
  const OperatorWord rhs = make_mul(upsilon);
  result.identity_check = equal_on_box(lhs, rhs, comparison_box(lhs, rhs), opts).equal;
  return result;
}

/// Certificate that S_phi is not isometric: a basis vector with
/// S_phi* S_phi e_m != e_m. Since z^{-m}(S* S - I)e_m depends only on
/// m mod k componentwise, the box [0,k-1]^n decides the question for all of
/// Z^n; a witness exists for every phi (the paper's non-isometry theorem),
/// including symbols whose basis-vector norms are identically 1.
inline std::optional<Violation> isometry_certificate(const LaurentSymbol& phi, int k,
                                                     const EngineOptions& opts = {}) {
  const int n = phi.dim();
  const OperatorWord s = make_slant_hankel(phi, k);
  const OperatorWord sts = compose(adjoint(s, opts), s);
  MultiIndex lo = MultiIndex::zero(n), hi = MultiIndex::zero(n);
  for (int j = 0; j < n; ++j) hi[j] = k - 1;
  BoxComparison cmp = equal_on_box(sts, OperatorWord::identity(n), Box(lo, hi), opts);
  if (cmp.equal) return std::nullopt;
  return violation_from_counterexample(ViolationKind::norm_defect, *cmp.counterexample);
}

/// sigma = phi(z^{-k}) psi - psi(z^{-k}) phi; the commutator
/// S_phi S_psi - S_psi S_phi acts as (V_k^n)^2 M_sigma.
inline LaurentSymbol commutator_symbol(const LaurentSymbol& phi, const LaurentSymbol& psi, int k) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("commutator_symbol: dimension mismatch");
  return phi.substitute_neg_k(Int(k)) * psi - psi.substitute_neg_k(Int(k)) * phi;
}

struct ProductVanishing {
  bool symbol_zero = false;
  bool operator_zero = false;
  TriState window_slant_hankel = TriState::inconclusive;
  LaurentSymbol residual;

  explicit ProductVanishing(int dim) : residual(dim) {}
};

/// The three equivalent statements of the vanishing-product theorem, decided
/// exactly: phi(z^{-k}) psi = 0, S_phi S_psi = 0, and the window of
/// S_phi S_psi being a slant Hankel matrix.
inline ProductVanishing product_vanishing_check(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                                int k, const EngineOptions& opts = {}) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("product_vanishing_check: dimension mismatch");
  const int n = phi.dim();
  ProductVanishing result(n);
  result.residual = phi.substitute_neg_k(Int(k)) * psi;
  result.symbol_zero = result.residual.is_zero();

  const OperatorWord product = compose(make_slant_hankel(phi, k), make_slant_hankel(psi, k));
  const OperatorWord zero_word = make_mul(LaurentSymbol::zero(n));
  result.operator_zero = equal_on_box(product, zero_word, comparison_box(product, zero_word), opts).equal;

  auto ext = result.residual.support_extents();
  for (auto& e : ext) e += k + 1;
  const MatrixWindow wnd = matrix_window(product, Box::centered(n, 1), Box::centered(ext), opts);
  result.window_slant_hankel = is_slant_hankel_window(wnd, k, opts).verdict;
  return result;
}

/// Raised when a requested coefficient recovery cannot be represented inside
/// the caller's box.
class InsufficientBoxError : public std::invalid_argument {
 public:
  InsufficientBoxError(const std::string& msg, MultiIndex coeff)
      : std::invalid_argument(msg), coefficient(std::move(coeff)) {}
  MultiIndex coefficient;
};

/// Injectivity of Omega: phi -> S_phi at window scale. Every a_r is recovered
/// from entry(S_phi, -r, 0) = a_{-k 0 - (-r)} = a_r, so the box must contain
/// -r for each r in supp(phi); otherwise an error names the unreachable
/// coefficient. Returns true iff (S_phi = 0 on box <=> phi = 0).
inline bool injectivity_check(const LaurentSymbol& phi, int k, const Box& box,
                              const EngineOptions& opts = {}) {
  const int n = phi.dim();
  const OperatorWord s = make_slant_hankel(phi, k);
  const MultiIndex origin = MultiIndex::zero(n);
  for (const auto& [r, a] : phi.terms()) {
    const MultiIndex probe = -r;
    if (!box.contains(probe)) {
      throw InsufficientBoxError(
          "injectivity_check: box " + box.to_string() + " cannot reach coefficient at " + r.to_string(),
          r);
    }
    if (entry(s, probe, origin, opts) != a) return false;  // recovery failed: S_phi misrepresents a_r
  }
  bool operator_zero_on_box = true;
  box.for_each([&](const MultiIndex& m) -> bool {
    if (!apply(s, basis_vector(m), opts).is_zero()) {
      operator_zero_on_box = false;
      return false;
    }
    return true;
  });
  return operator_zero_on_box == phi.is_zero();
}

/// Theorem-style conjugation identities: V M_{z^{-km}} V* = M_{z^m} always,
/// and V M_{z^{-l}} V* = 0 whenever k does not divide l.
inline bool conjugation_identity_check(int k, int n, const MultiIndex& m, const MultiIndex& l,
                                       const Box& box, const EngineOptions& opts = {}) {
  if (m.dim() != n || l.dim() != n) throw std::invalid_argument("conjugation_identity_check: dimension mismatch");
  if (divides(Int(k), l)) throw std::invalid_argument("conjugation_identity_check: l must not be divisible by k");
  const Generator v = Generator::slant_v(k, n);
  const Generator v_adj = Generator::slant_v_adj(k, n);

  OperatorWord lhs1(n);
  lhs1.append(v);
  lhs1.append(Generator::mul(LaurentSymbol::monomial(RatComplex::one(), scale(Int(-k), m))));
  lhs1.append(v_adj);
  const OperatorWord rhs1 = make_mul(LaurentSymbol::monomial(RatComplex::one(), m));
  if (!equal_on_box(lhs1, rhs1, box, opts).equal) return false;

  OperatorWord lhs2(n);
  lhs2.append(v);
  lhs2.append(Generator::mul(LaurentSymbol::monomial(RatComplex::one(), -l)));
  lhs2.append(v_adj);
  const OperatorWord rhs2 = make_mul(LaurentSymbol::zero(n));
  return equal_on_box(lhs2, rhs2, box, opts).equal;
}

struct MulReductionResult {
  bool chi_identity = false;
  bool lambda_identity = false;
};

/// Multiplication-operator reductions used by the compactness arguments:
///   (i)  V (S_phi M_{z^t})* = M_chi,    chi    = V(conj(z^t phi))
///   (ii) V^2 (S_phi S_psi)* = M_Lambda, Lambda = V^2(conj(psi) conj(phi)(z^{-k}))
/// both verified as exact word equalities on box.
inline MulReductionResult mul_reduction_check(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                              const MultiIndex& t, int k, const Box& box,
                                              const EngineOptions& opts = {}) {
  if (phi.dim() != psi.dim() || phi.dim() != t.dim()) {
    throw std::invalid_argument("mul_reduction_check: dimension mismatch");
  }
  const int n = phi.dim();
  const Generator v = Generator::slant_v(k, n);
  MulReductionResult result;

  const LaurentSymbol zt = LaurentSymbol::monomial(RatComplex::one(), t);
  OperatorWord lhs1(n);
  lhs1.append(v);
  const OperatorWord s_phi_zt = compose(make_slant_hankel(phi, k), make_mul(zt));
  lhs1 = compose(lhs1, adjoint(s_phi_zt, opts));
  const LaurentSymbol chi = (zt * phi).conjugate().slant_transform(Int(k));
  result.chi_identity = equal_on_box(lhs1, make_mul(chi), box, opts).equal;

  OperatorWord vv(n);
  vv.append(v);
  vv.append(v);
  const OperatorWord s_product = compose(make_slant_hankel(phi, k), make_slant_hankel(psi, k));
  const OperatorWord lhs2 = compose(vv, adjoint(s_product, opts));
  const LaurentSymbol lambda = (psi.conjugate() * phi.conjugate().substitute_neg_k(Int(k)))
                                   .slant_transform(Int(k))
                                   .slant_transform(Int(k));
  result.lambda_identity = equal_on_box(lhs2, make_mul(lambda), box, opts).equal;
  return result;
}

}  // namespace slantops
