#pragma once

#include <string>
#include <vector>

#include "alcove/tuples.hpp"

namespace alcove {

/// Finite set of T-fixed points together with how it was produced.
struct FixedPointSet {
  std::vector<AffElem> elements;  // sorted by (length, u, mu)
  std::string description;

  bool contains(const RootSystem& rs, const AffElem& w) const;
};

bool same_elements(const FixedPointSet& a, const FixedPointSet& b);

/// Fixed-point model of the Schubert and semi-infinite closure sets.
class SchubertModel {
public:
  explicit SchubertModel(const Orders& ord) : ord_(ord), rs_(ord.root_system()) {}

  const Orders& orders() const { return ord_; }

  FixedPointSet lower_interval(const AffElem& w) const;

  /// {w' : w' <=_C w_C for all C}, enumerated over the lattice window of
  /// V^{<= pi(w-bar)} with a +1 margin per psi coordinate (the margin must
  /// contribute nothing; InvariantViolation otherwise).
  FixedPointSet tuple_fixed_points(const ChamberTuple& t) const;

  /// The unique admissible tuple with w_C the <=_C-maximum of the lower
  /// interval of w.  Missing maximum or inadmissibility raises
  /// InvariantViolation (a theorem violation, never expected).
  ChamberTuple schubert_tuple(const AffElem& w) const;

  bool verify_thm_sch(const AffElem& w) const;

  /// T:sch(b) constant from the proof recipe: max of 2<psi, mu0> over base
  /// fundamental weights, mu0 the minimal regular dominant vector.
  Int sch_regularity_r() const;

  /// C:ineq(a) tuple {u w_+}; requires w_+ in C0.
  ChamberTuple claim_ineq_tuple(const AffElem& w_plus) const;

  /// Constant-tuple generator decomposition of FP(a) and FP(b); the covering
  /// equality is asserted.
  std::vector<ChamberTuple> intersect_tuple_models(const ChamberTuple& a,
                                                   const ChamberTuple& b) const;

  /// C:bound(a) constant by brute force over (C, alpha, u, u'); window-based
  /// with a stability check between widening bounds.
  Int claim_bound_r() const;
  /// C:bound(b) analogue over psi with <psi, coroot(alpha)> = 1.
  Int claim_bound_r_psi() const;
  /// Intersection regularity margin: twice the bound constant.
  Int effective_intersection_r() const { return 2 * claim_bound_r(); }

  Int lemma_finite_r() const;  // max <alpha, mu0> over base simples
  /// L:finite witness x-bar = mu-bar^{-1} pi(w-bar); inclusion asserted.
  QACoords lemma_finite_witness(const ChamberTuple& w) const;

  Int lemma_seq_r() const;
  /// L:seq stream of m-regular coordinate tuples, e_psi increments.
  std::vector<QACoords> lemma_seq_sequence(const QACoords& x, Int m, int steps) const;

  /// L:semiinf(b) criterion.
  bool psi_closure_leq(const ChamberTuple& w, const AffElem& u, int psi) const;

private:
  std::vector<AffElem> window_candidates(const std::vector<Int>& psi_bounds) const;
  bool tuple_leq_all(const AffElem& w, const ChamberTuple& t) const;

  const Orders& ord_;
  const RootSystem& rs_;
};

std::vector<AffElem> sorted_elements(const RootSystem& rs, std::vector<AffElem> v);

}  // namespace alcove
