#pragma once

#include <vector>

#include "alcove/tuples.hpp"

namespace alcove {

/// Sublattice of the coroot lattice, given by a basis.
struct Sublattice {
  std::vector<VecI> basis;
  std::vector<int> perp_roots;  // roots alpha with <alpha, v> = 0 for all basis v
};

Sublattice make_sublattice(const RootSystem& rs, const std::vector<VecI>& basis);

bool sublattice_member(const RootSystem& rs, const Sublattice& sub, const VecI& v);

/// Lambda'_{x-bar} = Lambda' intersected with V^{<= x-bar}, enumerated exactly.
std::vector<VecI> filtration_set(const RootSystem& rs, const Sublattice& sub,
                                 const QACoords& x);

/// Element (mu, x-bar) of the Rees monoid R(Lambda').
struct ReesElem {
  VecI mu;
  std::vector<Int> degree;  // in Z_{>=0}^Psi

  bool operator==(const ReesElem& o) const {
    return vec_eq<Int>(mu, o.mu) && degree == o.degree;
  }
};

bool rees_member(const RootSystem& rs, const Sublattice& sub, const ReesElem& e);

struct HilbertBasisResult {
  std::vector<ReesElem> basis;
  bool stable = false;          // no new basis elements at the top degree
  Int bound = 0;
  bool generation_verified = false;
};

/// Hilbert basis of R(Lambda') by bounded-degree saturation: members of total
/// degree <= bound that are not sums of two nonzero members.
HilbertBasisResult hilbert_basis(const RootSystem& rs, const Sublattice& sub, Int bound);

/// E:filt(d)-style covering: for every x-bar with |x-bar| <= bound,
/// Lambda'_{x-bar} is covered by Lambda'_{x-bar - s} + Lambda'_{s} over s in
/// degrees, s <= x-bar.
bool filtration_finitely_generated(const RootSystem& rs, const Sublattice& sub,
                                   const std::vector<std::vector<Int>>& degrees, Int bound);

struct TruncCheckResult {
  bool holds = false;
  bool hypothesis_ok = false;
  std::string mechanism;  // "perp-root" or "weight-perp"
};

/// L:trunc shadow: filtration_set(sub, x) == filtration_set(sub, x + e_psi)
/// for regular x.  Hypotheses: psi-check outside the rational span of the
/// sublattice, plus a mechanism making the raised face miss the sublattice:
/// either a root alpha perp to Lambda' with <alpha, psi-check> > 0 (the
/// L:k-reg route), or psi itself vanishing on Lambda' (then the raised face
/// sits at positive psi level while the sublattice pairs to zero).
TruncCheckResult trunc_check(const RootSystem& rs, const Sublattice& sub, int psi,
                             const QACoords& x);

}  // namespace alcove
