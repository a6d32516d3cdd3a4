#include "alcove/linalg.hpp"

#include <stdexcept>

namespace alcove {

std::optional<VecR> solve_exact(const MatR& a, const VecR& b) {
  const Eigen::Index m = a.rows(), n = a.cols();
  MatR aug(m, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;

  std::vector<int> pivot_col(static_cast<std::size_t>(m), -1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m; ++r) {
      if (aug(r, col).sign() != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    aug.row(row).swap(aug.row(piv));
    Rat inv = Rat(1) / aug(row, col);
    for (Eigen::Index c = col; c <= n; ++c) aug(row, c) *= inv;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == row) continue;
      Rat f = aug(r, col);
      if (f.sign() == 0) continue;
      for (Eigen::Index c = col; c <= n; ++c) aug(r, c) -= f * aug(row, c);
    }
    pivot_col[static_cast<std::size_t>(row)] = static_cast<int>(col);
    ++row;
  }
  for (Eigen::Index r = row; r < m; ++r) {
    if (aug(r, n).sign() != 0) return std::nullopt;
  }
  VecR x = VecR::Zero(n);
  for (Eigen::Index r = 0; r < row; ++r) {
    x[pivot_col[static_cast<std::size_t>(r)]] = aug(r, n);
  }
  return x;
}

int rank_exact(MatR a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m; ++r) {
      if (a(r, col).sign() != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    a.row(row).swap(a.row(piv));
    Rat inv = Rat(1) / a(row, col);
    for (Eigen::Index c = col; c < n; ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == row) continue;
      Rat f = a(r, col);
      if (f.sign() == 0) continue;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

MatR inverse_exact(const MatR& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse_exact: not square");
  MatR aug(n, 2 * n);
  aug.leftCols(n) = a;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) aug(i, n + j) = Rat(i == j ? 1 : 0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (aug(r, col).sign() != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("inverse_exact: singular matrix");
    aug.row(col).swap(aug.row(piv));
    Rat inv = Rat(1) / aug(col, col);
    for (Eigen::Index c = 0; c < 2 * n; ++c) aug(col, c) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = aug(r, col);
      if (f.sign() == 0) continue;
      for (Eigen::Index c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
    }
  }
  return aug.rightCols(n);
}

namespace {

// Phase-1 simplex tableau for { G lambda = z, lambda >= 0 } with artificial
// variables; Bland's rule keeps it finite.
bool simplex_feasible(const MatR& gens, const VecR& z) {
  const Eigen::Index m = gens.rows();
  const Eigen::Index k = gens.cols();
  // Rows scaled so the right-hand side is nonnegative.
  MatR tab(m, k + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    int s = z[i].sign() < 0 ? -1 : 1;
    for (Eigen::Index j = 0; j < k; ++j) tab(i, j) = Rat(s) * gens(i, j);
    for (Eigen::Index j = 0; j < m; ++j) tab(i, k + j) = Rat(i == j ? 1 : 0);
    tab(i, k + m) = Rat(s) * z[i];
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = k + i;

  // Objective row: minimize the sum of artificials.
  VecR obj = VecR::Zero(k + m);
  Rat obj_val(0);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < k + m; ++j) obj[j] -= tab(i, j);
    obj_val -= tab(i, k + m);
  }
  for (Eigen::Index i = 0; i < m; ++i) obj[k + i] += Rat(1);

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + m; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rat best(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab(i, enter).sign() <= 0) continue;
      Rat ratio = tab(i, k + m) / tab(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] <
                                basis[static_cast<std::size_t>(leave)])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return false;  // unbounded phase-1: cannot happen, bail out
    Rat inv = Rat(1) / tab(leave, enter);
    for (Eigen::Index c = 0; c <= k + m; ++c) tab(leave, c) *= inv;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == leave) continue;
      Rat f = tab(r, enter);
      if (f.sign() == 0) continue;
      for (Eigen::Index c = 0; c <= k + m; ++c) tab(r, c) -= f * tab(leave, c);
    }
    Rat f = obj[enter];
    if (f.sign() != 0) {
      for (Eigen::Index c = 0; c < k + m; ++c) obj[c] -= f * tab(leave, c);
      obj_val -= f * tab(leave, k + m);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  return obj_val.sign() == 0;
}

}  // namespace

bool cone_member(const MatR& gens, const VecR& z) {
  if (z.size() != gens.rows()) throw std::invalid_argument("cone_member: size mismatch");
  bool zero = true;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (z[i].sign() != 0) zero = false;
  if (zero) return true;
  if (gens.cols() == 0) return false;
  return simplex_feasible(gens, z);
}

}  // namespace alcove
