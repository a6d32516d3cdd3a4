#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

/// Chain witnessing w' <= w'': affine roots applied successively to the upper
/// element, each step an allowed decreasing reflection with root in Phi'.
using StepChain = std::vector<AffRoot>;

bool validate_chain(const RootSystem& rs, RootMask phi, const AffElem& upper,
                    const AffElem& lower, const StepChain& chain);

/// Decision procedures for the semi-infinite orders.  Pure over immutable
/// inputs; the Bruhat memo supports concurrent readers.
class Orders {
public:
  explicit Orders(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  const BruhatOrder& bruhat() const { return bruhat_; }

  bool bruhat_leq(const AffElem& a, const AffElem& b) const { return bruhat_.leq(a, b); }

  /// s_a w <_a w, i.e. w^{-1}(a) > 0.
  bool step_allowed(const AffRoot& a, const AffElem& w) const;

  /// Order generated by decreasing reflection steps with roots in phi.
  /// Pointed subsets run a window-pruned BFS; phi = Phi(psi) collapses states
  /// to Levi cosets.  Other subsets with lineality are unsupported.
  bool leq_subset(const AffElem& a, const AffElem& b, RootMask phi,
                  StepChain* chain = nullptr) const;

  /// Translation method: pick regular mu in C with both translates in C and
  /// compare in Bruhat order; asserted stable under one further translation.
  bool leq_chamber(const AffElem& a, const AffElem& b, int chamber_u) const;

  /// leq_subset for Phi(psi).
  bool leq_psi(const AffElem& a, const AffElem& b, int psi, StepChain* chain = nullptr) const;

  /// y - x in the cone spanned by the coroots of phi.
  bool leq_cone(const VecR& x, const VecR& y, RootMask phi) const;

  RootMask chamber_mask(int chamber_u) const { return rs_.chamber(chamber_u).positive; }
  RootMask psi_mask(int psi) const { return rs_.psi(psi).phi_of_psi; }
  RootMask single_mask(int root) const { return RootMask(1) << root; }

private:
  struct SearchState;

  bool cone_member_mask(RootMask phi, const VecR& z) const;
  bool bfs_pointed(const AffElem& a, const AffElem& b, RootMask phi, StepChain* chain) const;
  bool bfs_collapsed(const AffElem& a, const AffElem& b, int psi, StepChain* chain) const;
  std::vector<int> mask_roots(RootMask phi) const;

  const RootSystem& rs_;
  BruhatOrder bruhat_;
  // phi -> chamber index when phi is some Phi_C; psi index when phi = Phi(psi)
  std::map<RootMask, int> chamber_of_mask_;
  std::map<RootMask, int> psi_of_mask_;
  mutable std::mutex gens_mutex_;
  mutable std::map<RootMask, MatR> gens_cache_;
};

}  // namespace alcove
