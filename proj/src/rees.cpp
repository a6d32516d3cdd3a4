#include "alcove/rees.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace alcove {

Sublattice make_sublattice(const RootSystem& rs, const std::vector<VecI>& basis) {
  Sublattice sub;
  sub.basis = basis;
  if (!basis.empty()) {
    MatR m(static_cast<Eigen::Index>(basis.size()), rs.rank());
    for (std::size_t i = 0; i < basis.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rat(basis[i]).transpose();
    if (rank_exact(m) != static_cast<int>(basis.size()))
      throw UsageError("sublattice basis is linearly dependent");
  }
  for (int rt = 0; rt < rs.num_roots(); ++rt) {
    bool perp = true;
    for (const VecI& v : basis)
      if (rs.pair(rt, v) != 0) perp = false;
    if (perp) sub.perp_roots.push_back(rt);
  }
  return sub;
}

bool sublattice_member(const RootSystem& rs, const Sublattice& sub, const VecI& v) {
  if (sub.basis.empty()) return v.isZero();
  const int k = static_cast<int>(sub.basis.size());
  MatR m(rs.rank(), k);
  for (int j = 0; j < k; ++j) m.col(j) = to_rat(sub.basis[static_cast<std::size_t>(j)]);
  auto sol = solve_exact(m, to_rat(v));
  if (!sol) return false;
  VecR res = m * (*sol) - to_rat(v);
  for (int i = 0; i < rs.rank(); ++i)
    if (res[i].sign() != 0) return false;
  for (int j = 0; j < k; ++j)
    if (!(*sol)[j].is_integer()) return false;
  return true;
}

std::vector<VecI> filtration_set(const RootSystem& rs, const Sublattice& sub,
                                 const QACoords& x) {
  // Enumerate the ambient box of V^{<= x-bar} and keep sublattice members.
  const int r = rs.rank();
  VecI hi(r), lo(r);
  for (int i = 0; i < r; ++i) {
    int p = rs.psi_orbit(0, i);
    int pn = rs.psi_index(VecI(-rs.psi(p).weight));
    hi[i] = x.coords[static_cast<std::size_t>(p)];
    lo[i] = -x.coords[static_cast<std::size_t>(pn)];
  }
  std::vector<VecI> out;
  VecI mu(r);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == r) {
      for (int p = 0; p < rs.num_psi(); ++p)
        if (rs.pair_weight(rs.psi(p).weight, mu) > x.coords[static_cast<std::size_t>(p)]) return;
      if (sublattice_member(rs, sub, mu)) out.push_back(mu);
      return;
    }
    if (lo[pos] > hi[pos]) return;
    for (Int v = lo[pos]; v <= hi[pos]; ++v) {
      mu[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), vec_lex_less);
  return out;
}

bool rees_member(const RootSystem& rs, const Sublattice& sub, const ReesElem& e) {
  if (!sublattice_member(rs, sub, e.mu)) return false;
  for (int p = 0; p < rs.num_psi(); ++p) {
    if (e.degree[static_cast<std::size_t>(p)] < 0) return false;
    if (rs.pair_weight(rs.psi(p).weight, e.mu) > e.degree[static_cast<std::size_t>(p)])
      return false;
  }
  return true;
}

namespace {

// All degree vectors in Z_{>=0}^Psi with given total.
void degrees_of_total(int np, Int total, std::vector<Int>& cur,
                      std::vector<std::vector<Int>>& out, int pos = 0) {
  if (pos == np - 1) {
    cur[static_cast<std::size_t>(pos)] = total;
    out.push_back(cur);
    return;
  }
  for (Int v = 0; v <= total; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    degrees_of_total(np, total - v, cur, out, pos + 1);
  }
}

std::vector<ReesElem> members_of_degree(const RootSystem& rs, const Sublattice& sub,
                                        const std::vector<Int>& degree) {
  QACoords x;
  x.coords = degree;
  std::vector<ReesElem> out;
  for (const VecI& mu : filtration_set(rs, sub, x)) out.push_back(ReesElem{mu, degree});
  return out;
}

}  // namespace

HilbertBasisResult hilbert_basis(const RootSystem& rs, const Sublattice& sub, Int bound) {
  HilbertBasisResult result;
  result.bound = bound;
  const int np = rs.num_psi();
  std::vector<std::vector<ReesElem>> by_degree(static_cast<std::size_t>(bound) + 1);
  for (Int d = 1; d <= bound; ++d) {
    std::vector<std::vector<Int>> degs;
    std::vector<Int> cur(static_cast<std::size_t>(np), 0);
    degrees_of_total(np, d, cur, degs);
    for (const auto& deg : degs) {
      for (const ReesElem& m : members_of_degree(rs, sub, deg))
        by_degree[static_cast<std::size_t>(d)].push_back(m);
    }
  }
  auto is_member_pair = [&](const VecI& mu, const std::vector<Int>& deg) {
    ReesElem e{mu, deg};
    return rees_member(rs, sub, e);
  };
  bool new_at_top = false;
  for (Int d = 1; d <= bound; ++d) {
    for (const ReesElem& m : by_degree[static_cast<std::size_t>(d)]) {
      bool decomposable = false;
      for (Int d1 = 1; d1 <= d - 1 && !decomposable; ++d1) {
        for (const ReesElem& g : by_degree[static_cast<std::size_t>(d1)]) {
          std::vector<Int> rest(m.degree.size());
          bool ok = true;
          for (std::size_t i = 0; i < rest.size(); ++i) {
            rest[i] = m.degree[i] - g.degree[i];
            if (rest[i] < 0) ok = false;
          }
          if (!ok) continue;
          if (is_member_pair(VecI(m.mu - g.mu), rest)) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) {
        result.basis.push_back(m);
        if (d == bound) new_at_top = true;
      }
    }
  }
  result.stable = !new_at_top;

  // Generation check: every member of total degree <= bound is a sum of basis
  // elements (dynamic programming over degrees).
  result.generation_verified = true;
  std::map<std::vector<Int>, std::vector<VecI>> reachable;  // degree -> mus
  reachable[std::vector<Int>(static_cast<std::size_t>(np), 0)] = {VecI::Zero(rs.rank())};
  for (Int d = 1; d <= bound && result.generation_verified; ++d) {
    std::vector<std::vector<Int>> degs;
    std::vector<Int> cur(static_cast<std::size_t>(np), 0);
    degrees_of_total(np, d, cur, degs);
    for (const auto& deg : degs) {
      std::vector<VecI> reach;
      for (const ReesElem& g : result.basis) {
        std::vector<Int> rest(deg.size());
        bool ok = true;
        Int rest_total = 0;
        for (std::size_t i = 0; i < deg.size(); ++i) {
          rest[i] = deg[i] - g.degree[i];
          if (rest[i] < 0) ok = false;
          rest_total += rest[i];
        }
        if (!ok) continue;
        auto it = reachable.find(rest);
        if (it == reachable.end()) continue;
        for (const VecI& mu : it->second) {
          VecI sum = mu + g.mu;
          bool seen = false;
          for (const VecI& s : reach)
            if (vec_eq<Int>(s, sum)) seen = true;
          if (!seen) reach.push_back(sum);
        }
      }
      for (const ReesElem& m : members_of_degree(rs, sub, deg)) {
        bool found = false;
        for (const VecI& s : reach)
          if (vec_eq<Int>(s, m.mu)) found = true;
        if (!found) result.generation_verified = false;
      }
      reachable[deg] = std::move(reach);
    }
  }
  return result;
}

bool filtration_finitely_generated(const RootSystem& rs, const Sublattice& sub,
                                   const std::vector<std::vector<Int>>& degrees, Int bound) {
  const int np = rs.num_psi();
  for (Int total = 0; total <= bound; ++total) {
    std::vector<std::vector<Int>> xs;
    std::vector<Int> cur(static_cast<std::size_t>(np), 0);
    degrees_of_total(np, total, cur, xs);
    for (const auto& xdeg : xs) {
      QACoords x;
      x.coords = xdeg;
      std::vector<VecI> target = filtration_set(rs, sub, x);
      if (target.empty()) continue;
      for (const VecI& mu : target) {
        bool covered = false;
        for (const auto& s : degrees) {
          std::vector<Int> tau(static_cast<std::size_t>(np));
          bool ok = true;
          for (int i = 0; i < np; ++i) {
            tau[static_cast<std::size_t>(i)] = xdeg[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i)];
            if (tau[static_cast<std::size_t>(i)] < 0) ok = false;
          }
          if (!ok) continue;
          QACoords xt_part;
          xt_part.coords = tau;
          for (const VecI& a : filtration_set(rs, sub, xt_part)) {
            VecI b = mu - a;
            if (sublattice_member(rs, sub, b)) {
              bool in_xs = true;
              for (int p = 0; p < np; ++p)
                if (rs.pair_weight(rs.psi(p).weight, b) > s[static_cast<std::size_t>(p)])
                  in_xs = false;
              if (in_xs) {
                covered = true;
                break;
              }
            }
          }
          if (covered) break;
        }
        if (!covered) return false;
      }
    }
  }
  return true;
}

TruncCheckResult trunc_check(const RootSystem& rs, const Sublattice& sub, int psi,
                             const QACoords& x) {
  TruncCheckResult res;
  const PsiData& pd = rs.psi(psi);
  // psi-check must avoid the rational span of the sublattice.
  if (!sub.basis.empty()) {
    const int k = static_cast<int>(sub.basis.size());
    MatR m(rs.rank(), k);
    for (int j = 0; j < k; ++j) m.col(j) = to_rat(sub.basis[static_cast<std::size_t>(j)]);
    auto sol = solve_exact(m, pd.coweight);
    if (sol) {
      VecR res_v = m * (*sol) - pd.coweight;
      bool in_span = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (res_v[i].sign() != 0) in_span = false;
      if (in_span) throw DomainError("trunc_check: psi-check lies in the sublattice span");
    }
  }
  bool perp_root = false;
  for (int rt : sub.perp_roots)
    if (rs.pair(rt, pd.coweight).sign() > 0) perp_root = true;
  bool weight_perp = true;
  for (const VecI& v : sub.basis)
    if (rs.pair_weight(pd.weight, v) != 0) weight_perp = false;
  if (!perp_root && !weight_perp)
    throw DomainError("trunc_check: no perp root and psi does not vanish on the sublattice");
  res.hypothesis_ok = true;
  res.mechanism = perp_root ? "perp-root" : "weight-perp";

  std::vector<VecI> a = filtration_set(rs, sub, x);
  std::vector<VecI> b = filtration_set(rs, sub, add_e_psi(x, psi, 1));
  res.holds = a.size() == b.size();
  if (res.holds) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!vec_eq<Int>(a[i], b[i])) res.holds = false;
  }
  return res;
}

}  // namespace alcove
