#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/linalg.hpp"

namespace alcove {

// Coordinate conventions used throughout:
//   * roots live in V* and carry coordinates in the simple-root basis of the
//     fixed base chamber C0;
//   * points of V (coweights, lattice vectors, alcove points) carry
//     coordinates in the simple-coroot basis;
//   * weights carry coordinates in the fundamental-weight basis, so that
//     <psi, x> is a plain dot product with the point coordinates;
//   * cartan(i,j) = <alpha_j, coroot_i>, hence <alpha, x> = (A c) . d for a
//     root with coordinates c and a point with coordinates d.
// Everything downstream (affine elements, orders, tuples) relies on these
// bases being fixed once and for all.

enum class CartanType { A1, A2, B2, C2, G2, A3 };

CartanType parse_cartan_type(const std::string& label);
std::string to_string(CartanType t);

using RootMask = std::uint32_t;  // bitmask over root indices; at most 12 roots

struct Root {
  VecI coords;    // simple-root basis
  VecI coroot;    // coroot of this root, simple-coroot basis
  VecI weights;   // pairings <alpha, coroot_i>, i.e. cartan * coords
  int negative = -1;
  bool positive = false;
  int height = 0;  // sum of coords
};

struct WeylElt {
  MatI on_points;          // action on V, simple-coroot coordinates
  MatI on_roots;           // action on V*, simple-root coordinates
  std::vector<int> root_perm;
  std::vector<int> word;   // ShortLex reduced word, 0-based generators
  int inverse = 0;
  int length = 0;
};

struct Chamber {
  int u = 0;                      // chamber is u(C0)
  RootMask positive = 0;          // C-positive roots
  std::vector<int> simple_roots;  // j-th entry is u(alpha_j)
  std::vector<int> psi;           // j-th entry is Psi index of u(varpi_j)
};

struct PsiData {
  VecI weight;    // fundamental-weight coordinates
  VecR coweight;  // simple-coroot coordinates of psi-check
  RootMask phi_of_psi = 0;  // <alpha, psi-check> >= 0
  RootMask phi_perp = 0;    // <alpha, psi-check> == 0
  std::vector<int> chambers_containing;  // u indices, ascending
  // Levi subsystem Phi^psi, with its base chamber C0^psi fixed as C^psi for
  // the first chamber (ShortLex order on W) containing psi.
  int base_chamber = 0;
  RootMask perp_positive = 0;       // positives of Phi^psi w.r.t. C0^psi
  std::vector<int> perp_simples;    // root indices
  std::vector<int> perp_highest;    // one highest root per component
  std::vector<int> levi_weyl;       // W^psi as sorted W indices
};

class RootSystem {
public:
  static RootSystem build(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  const MatI& cartan() const { return cartan_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Root& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
  const std::vector<Root>& roots() const { return roots_; }
  int root_index(const VecI& coords) const;  // -1 when not a root
  int simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  int highest_root() const { return highest_root_; }

  int weyl_order() const { return static_cast<int>(weyl_.size()); }
  const WeylElt& weyl(int u) const { return weyl_[static_cast<std::size_t>(u)]; }
  int weyl_mult(int a, int b) const {
    return mult_[static_cast<std::size_t>(a) * weyl_.size() + static_cast<std::size_t>(b)];
  }
  int weyl_inverse(int u) const { return weyl_[static_cast<std::size_t>(u)].inverse; }
  int simple_reflection(int i) const { return simple_refl_[static_cast<std::size_t>(i)]; }
  int reflection_of_root(int r) const { return root_refl_[static_cast<std::size_t>(r)]; }
  int longest_element() const { return longest_; }
  int act_root(int u, int r) const {
    return weyl_[static_cast<std::size_t>(u)].root_perm[static_cast<std::size_t>(r)];
  }
  VecI act_point(int u, const VecI& x) const { return weyl(u).on_points * x; }
  VecR act_point(int u, const VecR& x) const { return to_rat(weyl(u).on_points) * x; }

  const Chamber& chamber(int u) const { return chambers_[static_cast<std::size_t>(u)]; }

  int num_psi() const { return static_cast<int>(psi_.size()); }
  const PsiData& psi(int p) const { return psi_[static_cast<std::size_t>(p)]; }
  const std::vector<PsiData>& psis() const { return psi_; }
  int psi_orbit(int u, int i) const {  // Psi index of u(varpi_i)
    return psi_orbit_[static_cast<std::size_t>(u) * static_cast<std::size_t>(rank_) +
                      static_cast<std::size_t>(i)];
  }
  int psi_index(const VecI& weight) const;  // -1 when not in Psi
  /// For C containing psi, the chamber C' containing psi whose Levi chamber is
  /// s_beta(C^psi); beta must be a root of Phi^psi.
  int levi_wall_neighbor(int p, int u, int beta) const;

  // Pairings.
  Int pair(int root, const VecI& point) const {
    return roots_[static_cast<std::size_t>(root)].weights.dot(point);
  }
  Rat pair(int root, const VecR& point) const;
  Int pair_weight(const VecI& weight, const VecI& point) const { return weight.dot(point); }
  Rat pair_weight(const VecI& weight, const VecR& point) const;

  // Fundamental alcove data.
  const VecR& alcove_center() const { return alcove_center_; }  // x0
  const std::vector<VecR>& alcove_vertices() const { return alcove_vertices_; }
  Int alcove_denominator() const { return alcove_denom_; }
  const VecR& fundamental_coweight(int i) const {
    return fund_coweights_[static_cast<std::size_t>(i)];
  }

  /// Minimal regular dominant lattice vector under (coordinate sum, lex).
  const VecI& minimal_regular_dominant() const { return min_reg_dominant_; }

  /// True when <alpha_i, x> >= 1 for every base simple root.
  bool is_regular_dominant(const VecI& x) const;

private:
  RootSystem() = default;
  void build_roots();
  void build_weyl();
  void build_chambers();
  void build_psi();
  void build_alcove();

  CartanType type_ = CartanType::A1;
  int rank_ = 1;
  MatI cartan_;
  std::vector<Root> roots_;
  std::vector<int> simple_roots_;
  int highest_root_ = -1;
  std::vector<WeylElt> weyl_;
  std::vector<int> mult_;
  std::vector<int> simple_refl_;
  std::vector<int> root_refl_;
  int longest_ = 0;
  std::vector<Chamber> chambers_;
  std::vector<PsiData> psi_;
  std::vector<int> psi_orbit_;
  std::vector<VecR> fund_coweights_;
  VecR alcove_center_;
  std::vector<VecR> alcove_vertices_;
  Int alcove_denom_ = 1;
  VecI min_reg_dominant_;
};

}  // namespace alcove
