#pragma once

#include <vector>

#include "alcove/orders.hpp"

namespace alcove {

/// Chamber-indexed tuple of affine Weyl elements; lattice tuples keep every
/// entry a pure translation.
struct ChamberTuple {
  bool lattice = false;
  std::vector<AffElem> entries;  // indexed by chamber u

  bool operator==(const ChamberTuple& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!(entries[i] == o.entries[i])) return false;
    return true;
  }
};

/// Z^Psi coordinates of a quasi-admissible lattice tuple.
struct QACoords {
  std::vector<Int> coords;  // indexed by Psi index

  bool operator==(const QACoords& o) const { return coords == o.coords; }
};

/// Truncation of a tuple to the subsystem Phi^psi; entry j corresponds to the
/// Levi chamber C^psi of chambers_containing[j].
struct PsiTuple {
  int psi = 0;
  std::vector<AffElem> entries;
};

ChamberTuple constant_tuple(const RootSystem& rs, const AffElem& w);
ChamberTuple lattice_tuple(const RootSystem& rs, const std::vector<VecI>& mus);

bool is_quasi_admissible(const RootSystem& rs, const ChamberTuple& t);
bool is_admissible(const Orders& ord, const ChamberTuple& t);

QACoords to_coords(const RootSystem& rs, const ChamberTuple& t);
ChamberTuple from_coords(const RootSystem& rs, const QACoords& c);

/// Largest m such that the tuple is m-regular (pairings over all C-positive
/// roots of pi(w_C)).
Int regularity(const RootSystem& rs, const ChamberTuple& t);
Int regularity(const RootSystem& rs, const QACoords& c);

QACoords meet(const QACoords& a, const QACoords& b);
QACoords subtract_e_psi(const QACoords& c, int psi, Int d);
QACoords add_e_psi(const QACoords& c, int psi, Int d);

/// Entrywise product {t_{mu_C} w_C}; both inputs must be tuples over the same
/// system, the first one a lattice tuple.
ChamberTuple translate(const RootSystem& rs, const ChamberTuple& mus, const ChamberTuple& ws);

/// E:exam-style standard tuples.
ChamberTuple standard_weyl_tuple(const RootSystem& rs);                 // (w_st)_{u(C0)} = u
ChamberTuple dominant_tuple(const RootSystem& rs, const VecI& mu);      // mu_{u(C0)} = u(mu)
QACoords dominant_coords(const RootSystem& rs, const VecI& mu);

/// The common W~_psi representative of the entries at chambers containing psi.
AffElem tuple_psi(const RootSystem& rs, const ChamberTuple& t, int psi);

PsiTuple psi_truncate(const RootSystem& rs, const ChamberTuple& t, int psi);
bool psi_tuple_admissible(const Orders& ord, const PsiTuple& t);
Int psi_tuple_regularity(const RootSystem& rs, const PsiTuple& t);

/// Membership of x in V^{<= mu-bar} via the Psi inequalities.
bool polytope_contains(const RootSystem& rs, const VecR& x, const QACoords& c);

/// Exact vertex enumeration of V^{<= mu-bar} at rank <= 3.
std::vector<VecR> polytope_vertices(const RootSystem& rs, const QACoords& c);

/// L:k-reg shadow: on the face <psi, x> = mu_psi of V^{<= mu-bar}, every root
/// with <alpha, psi-check> > 0 stays strictly positive; the face equals the
/// convex hull of {mu_C}_{C containing psi}.
bool kreg_face_check(const RootSystem& rs, const QACoords& c, int psi);

struct Order2Constant {
  Int m_prime = 0;
  VecI mu;       // dominant vector realizing the wall bound
  Int m = 0;     // regularity threshold for the implication
};
Order2Constant lemma_order2_constant(const RootSystem& rs, const ChamberTuple& u_tuple);

}  // namespace alcove
