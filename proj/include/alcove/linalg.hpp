#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "alcove/rational.hpp"

namespace Eigen {

// Exact scalar plugged into Eigen's dense types.
template <>
struct NumTraits<alcove::Rat> {
  using Real = alcove::Rat;
  using NonInteger = alcove::Rat;
  using Nested = alcove::Rat;
  using Literal = alcove::Int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };
  static alcove::Rat epsilon() { return alcove::Rat(0); }
  static alcove::Rat dummy_precision() { return alcove::Rat(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace alcove {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecI = Vec<Int>;
using MatI = Mat<Int>;
using VecR = Vec<Rat>;
using MatR = Mat<Rat>;

inline VecR to_rat(const VecI& v) {
  VecR r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline MatR to_rat(const MatI& m) {
  MatR r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

template <class S>
bool vec_eq(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

template <class S>
bool mat_eq(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

inline bool vec_lex_less(const VecI& a, const VecI& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline std::size_t hash_veci(const VecI& v, std::size_t seed = 0xcbf29ce484222325ull) {
  std::size_t h = seed;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    h ^= static_cast<std::size_t>(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

/// Solves A x = b exactly over the rationals (Gauss with exact pivoting).
/// Returns nullopt when the system is inconsistent; for underdetermined
/// systems an arbitrary solution is produced.
std::optional<VecR> solve_exact(const MatR& a, const VecR& b);

/// Rank of a rational matrix, computed exactly.
int rank_exact(MatR a);

/// Inverse of a square rational matrix; throws on singular input.
MatR inverse_exact(const MatR& a);

/// Feasibility of { G lambda = z, lambda >= 0 }: is z in the cone spanned by
/// the columns of G?  Exact phase-1 simplex with Bland's rule.
bool cone_member(const MatR& gens, const VecR& z);

}  // namespace alcove
