#pragma once

#include <cstdint>
#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Element w = t_mu . u of the affine Weyl group, acting by w(x) = u(x) + mu.
struct AffElem {
  VecI mu;   // translation, simple-coroot coordinates
  int u = 0; // finite part, index into W

  bool operator==(const AffElem& o) const { return u == o.u && vec_eq<Int>(mu, o.mu); }
  bool operator!=(const AffElem& o) const { return !(*this == o); }
};

/// Affine root (alpha, n), the affine function alpha(x) + n.
struct AffRoot {
  int root = 0;  // root index
  Int level = 0;
};

struct AffElemHash {
  std::size_t operator()(const AffElem& w) const {
    return hash_veci(w.mu, 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(w.u));
  }
};

using AffElemSet = std::unordered_set<AffElem, AffElemHash>;

AffElem aff_identity(const RootSystem& rs);
AffElem aff_translation(const RootSystem& rs, const VecI& mu);
AffElem aff_finite(const RootSystem& rs, int u);
AffElem aff_mult(const RootSystem& rs, const AffElem& a, const AffElem& b);
AffElem aff_inverse(const RootSystem& rs, const AffElem& w);

VecR aff_apply(const RootSystem& rs, const AffElem& w, const VecR& x);
VecI aff_apply(const RootSystem& rs, const AffElem& w, const VecI& x);
inline VecI aff_pi(const AffElem& w) { return w.mu; }  // projection to the lattice

bool aff_root_positive(const RootSystem& rs, const AffRoot& a);
AffRoot aff_act_root(const RootSystem& rs, const AffElem& w, const AffRoot& a);
/// s_{(alpha,n)} = t_{-n coroot(alpha)} . s_alpha
AffElem aff_reflection(const RootSystem& rs, const AffRoot& a);
/// Value of the affine function (alpha, n) at a rational point.
Rat aff_root_value(const RootSystem& rs, const AffRoot& a, const VecR& x);

int aff_length(const RootSystem& rs, const AffElem& w);

/// Simple affine generators: index 0..rank, where 1..rank are the finite
/// simple reflections and 0 is the reflection in (-theta, 1).
int num_aff_generators(const RootSystem& rs);
AffRoot aff_generator_root(const RootSystem& rs, int i);
AffElem aff_generator(const RootSystem& rs, int i);
bool left_descent(const RootSystem& rs, const AffElem& w, int i);
bool right_descent(const RootSystem& rs, const AffElem& w, int i);
/// Reduced word in generators 0..rank, smallest left descent stripped first.
std::vector<int> aff_reduced_word(const RootSystem& rs, const AffElem& w);
AffElem aff_from_word(const RootSystem& rs, const VecI& mu, const std::vector<int>& finite_word);

/// w in C, tested by w^{-1}(Phi_C) > 0.
bool in_chamber(const RootSystem& rs, const AffElem& w, int chamber_u);

/// Bruhat order on the affine Weyl group via the descent recursion, memoized.
/// Thread safe: concurrent readers, serialized writers.
class BruhatOrder {
public:
  explicit BruhatOrder(const RootSystem& rs) : rs_(rs) {}

  bool leq(const AffElem& a, const AffElem& b) const;

  /// The finite set {w' : w' <= w} from the subword property of any reduced
  /// word (prefix dynamic programming).
  std::vector<AffElem> lower_interval(const AffElem& w) const;

  const RootSystem& root_system() const { return rs_; }

private:
  struct Key {
    std::uint64_t a, b;
    bool operator==(const Key& o) const { return a == o.a && b == o.b; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::uint64_t>()(k.a);
      return h ^ (std::hash<std::uint64_t>()(k.b) + 0x9e3779b97f4a7c15ull + (h << 6));
    }
  };
  Key make_key(const AffElem& a, const AffElem& b) const;

  const RootSystem& rs_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, bool, KeyHash> memo_;
};

// --- psi-coset machinery (E:fund-style factorization) ---

struct PsiFactorization {
  AffElem levi;  // w^psi, in the affine group of Phi^psi
  AffElem min;   // w_psi, the W~_psi coset representative
};

/// Subsystem simple affine roots of Phi^psi w.r.t. its base chamber:
/// (beta, 0) for subsystem simples and (-theta_c, 1) per component highest.
std::vector<AffRoot> levi_simple_affine_roots(const RootSystem& rs, int psi);

/// Membership in W~_psi: w^{-1} maps every positive affine root of the
/// subsystem to a positive affine root.
bool in_min_coset(const RootSystem& rs, int psi, const AffElem& w);

/// Membership in the affine group W~^psi = W^psi x Lambda^psi.
bool in_levi_affine(const RootSystem& rs, int psi, const AffElem& w);

/// Unique decomposition w = levi . min with levi in W~^psi, min in W~_psi.
PsiFactorization psi_factorize(const RootSystem& rs, int psi, const AffElem& w);

/// Writes q (must lie in W~^psi) as a product of reflections in affine roots
/// of the subsystem: q = s_{r_k} ... s_{r_1}.
std::vector<AffRoot> levi_reflection_word(const RootSystem& rs, int psi, const AffElem& q);

/// Membership in W~_alpha (reflections with root part +-alpha).
bool in_rank_one_group(const RootSystem& rs, int root, const AffElem& w);

}  // namespace alcove
