#include "alcove/tuples.hpp"

#include <algorithm>

namespace alcove {

namespace {

// Wall data: for chamber C and position i, the i-th C-simple root, the
// neighbor chamber s_alpha(C), and the Psi index of the matching weight.
struct Wall {
  int chamber;
  int root;
  int neighbor;
  int psi;
};

std::vector<Wall> walls(const RootSystem& rs) {
  std::vector<Wall> out;
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    for (int i = 0; i < rs.rank(); ++i) {
      Wall w;
      w.chamber = u;
      w.root = ch.simple_roots[static_cast<std::size_t>(i)];
      w.neighbor = rs.weyl_mult(rs.reflection_of_root(w.root), u);
      w.psi = ch.psi[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

ChamberTuple constant_tuple(const RootSystem& rs, const AffElem& w) {
  ChamberTuple t;
  t.lattice = (w.u == 0);
  t.entries.assign(static_cast<std::size_t>(rs.weyl_order()), w);
  return t;
}

ChamberTuple lattice_tuple(const RootSystem& rs, const std::vector<VecI>& mus) {
  if (static_cast<int>(mus.size()) != rs.weyl_order())
    throw UsageError("lattice tuple needs one entry per chamber");
  ChamberTuple t;
  t.lattice = true;
  for (const VecI& mu : mus) t.entries.push_back(aff_translation(rs, mu));
  return t;
}

bool is_quasi_admissible(const RootSystem& rs, const ChamberTuple& t) {
  for (const Wall& w : walls(rs)) {
    AffElem d = aff_mult(rs, t.entries[static_cast<std::size_t>(w.neighbor)],
                         aff_inverse(rs, t.entries[static_cast<std::size_t>(w.chamber)]));
    if (!in_rank_one_group(rs, w.root, d)) return false;
  }
  return true;
}

bool is_admissible(const Orders& ord, const ChamberTuple& t) {
  const RootSystem& rs = ord.root_system();
  for (const Wall& w : walls(rs)) {
    if (!ord.leq_subset(t.entries[static_cast<std::size_t>(w.neighbor)],
                        t.entries[static_cast<std::size_t>(w.chamber)],
                        ord.single_mask(w.root)))
      return false;
  }
  return true;
}

QACoords to_coords(const RootSystem& rs, const ChamberTuple& t) {
  if (!t.lattice) throw DomainError("to_coords: not a lattice tuple");
  if (!is_quasi_admissible(rs, t)) throw DomainError("to_coords: tuple is not quasi-admissible");
  QACoords c;
  c.coords.assign(static_cast<std::size_t>(rs.num_psi()), 0);
  std::vector<bool> seen(static_cast<std::size_t>(rs.num_psi()), false);
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    for (int i = 0; i < rs.rank(); ++i) {
      int p = ch.psi[static_cast<std::size_t>(i)];
      Int v = rs.pair_weight(rs.psi(p).weight, t.entries[static_cast<std::size_t>(u)].mu);
      if (seen[static_cast<std::size_t>(p)] && c.coords[static_cast<std::size_t>(p)] != v)
        throw InvariantViolation("psi coordinate depends on the chamber");
      c.coords[static_cast<std::size_t>(p)] = v;
      seen[static_cast<std::size_t>(p)] = true;
    }
  }
  return c;
}

ChamberTuple from_coords(const RootSystem& rs, const QACoords& c) {
  if (static_cast<int>(c.coords.size()) != rs.num_psi())
    throw UsageError("coordinate vector has wrong length");
  ChamberTuple t;
  t.lattice = true;
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    VecI mu = VecI::Zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      int p = ch.psi[static_cast<std::size_t>(i)];
      mu += c.coords[static_cast<std::size_t>(p)] *
            rs.root(ch.simple_roots[static_cast<std::size_t>(i)]).coroot;
    }
    t.entries.push_back(aff_translation(rs, mu));
  }
  return t;
}

Int regularity(const RootSystem& rs, const ChamberTuple& t) {
  Int m = INT64_MAX;
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    const VecI& mu = t.entries[static_cast<std::size_t>(u)].mu;
    for (int rt = 0; rt < rs.num_roots(); ++rt) {
      if (!(ch.positive & (RootMask(1) << rt))) continue;
      m = std::min(m, rs.pair(rt, mu));
    }
  }
  return m;
}

Int regularity(const RootSystem& rs, const QACoords& c) {
  return regularity(rs, from_coords(rs, c));
}

QACoords meet(const QACoords& a, const QACoords& b) {
  if (a.coords.size() != b.coords.size()) throw UsageError("meet: size mismatch");
  QACoords m;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    m.coords.push_back(std::min(a.coords[i], b.coords[i]));
  return m;
}

QACoords subtract_e_psi(const QACoords& c, int psi, Int d) {
  QACoords out = c;
  out.coords.at(static_cast<std::size_t>(psi)) -= d;
  return out;
}

QACoords add_e_psi(const QACoords& c, int psi, Int d) { return subtract_e_psi(c, psi, -d); }

ChamberTuple translate(const RootSystem& rs, const ChamberTuple& mus, const ChamberTuple& ws) {
  if (!mus.lattice) throw DomainError("translate: first argument must be a lattice tuple");
  if (mus.entries.size() != ws.entries.size()) throw UsageError("translate: size mismatch");
  ChamberTuple t;
  t.lattice = ws.lattice;
  for (std::size_t i = 0; i < ws.entries.size(); ++i)
    t.entries.push_back(aff_mult(rs, mus.entries[i], ws.entries[i]));
  return t;
}

ChamberTuple standard_weyl_tuple(const RootSystem& rs) {
  ChamberTuple t;
  t.lattice = false;
  for (int u = 0; u < rs.weyl_order(); ++u) t.entries.push_back(aff_finite(rs, u));
  return t;
}

ChamberTuple dominant_tuple(const RootSystem& rs, const VecI& mu) {
  VecI pairings = rs.cartan().transpose() * mu;
  for (int i = 0; i < rs.rank(); ++i)
    if (pairings[i] < 0) throw DomainError("dominant_tuple: mu is not dominant");
  ChamberTuple t;
  t.lattice = true;
  for (int u = 0; u < rs.weyl_order(); ++u)
    t.entries.push_back(aff_translation(rs, rs.act_point(u, mu)));
  return t;
}

QACoords dominant_coords(const RootSystem& rs, const VecI& mu) {
  return to_coords(rs, dominant_tuple(rs, mu));
}

AffElem tuple_psi(const RootSystem& rs, const ChamberTuple& t, int psi) {
  if (!is_quasi_admissible(rs, t)) throw DomainError("tuple_psi: tuple is not quasi-admissible");
  const PsiData& pd = rs.psi(psi);
  bool have = false;
  AffElem common;
  for (int u : pd.chambers_containing) {
    AffElem rep = psi_factorize(rs, psi, t.entries[static_cast<std::size_t>(u)]).min;
    if (have && !(rep == common))
      throw InvariantViolation("tuple_psi: representative depends on the chamber");
    common = rep;
    have = true;
  }
  return common;
}

PsiTuple psi_truncate(const RootSystem& rs, const ChamberTuple& t, int psi) {
  const PsiData& pd = rs.psi(psi);
  PsiTuple out;
  out.psi = psi;
  for (int u : pd.chambers_containing)
    out.entries.push_back(psi_factorize(rs, psi, t.entries[static_cast<std::size_t>(u)]).levi);
  return out;
}

namespace {

// Simple roots of the positive system mask (roots not sums of two members).
std::vector<int> simples_of_mask(const RootSystem& rs, RootMask pos) {
  std::vector<int> roots;
  for (int rt = 0; rt < rs.num_roots(); ++rt)
    if (pos & (RootMask(1) << rt)) roots.push_back(rt);
  std::vector<int> out;
  for (int rt : roots) {
    bool decomposable = false;
    for (int a : roots)
      for (int b : roots)
        if (vec_eq<Int>(VecI(rs.root(a).coords + rs.root(b).coords), rs.root(rt).coords))
          decomposable = true;
    if (!decomposable) out.push_back(rt);
  }
  return out;
}

}  // namespace

bool psi_tuple_admissible(const Orders& ord, const PsiTuple& t) {
  const RootSystem& rs = ord.root_system();
  const PsiData& pd = rs.psi(t.psi);
  for (std::size_t j = 0; j < pd.chambers_containing.size(); ++j) {
    int u = pd.chambers_containing[j];
    RootMask pos = rs.chamber(u).positive & pd.phi_perp;
    for (int beta : simples_of_mask(rs, pos)) {
      int v = rs.levi_wall_neighbor(t.psi, u, beta);
      auto idx = std::find(pd.chambers_containing.begin(), pd.chambers_containing.end(), v) -
                 pd.chambers_containing.begin();
      if (!ord.leq_subset(t.entries[static_cast<std::size_t>(idx)], t.entries[j],
                          ord.single_mask(beta)))
        return false;
    }
  }
  return true;
}

Int psi_tuple_regularity(const RootSystem& rs, const PsiTuple& t) {
  const PsiData& pd = rs.psi(t.psi);
  Int m = INT64_MAX;
  bool any = false;
  for (std::size_t j = 0; j < pd.chambers_containing.size(); ++j) {
    int u = pd.chambers_containing[j];
    RootMask pos = rs.chamber(u).positive & pd.phi_perp;
    for (int rt = 0; rt < rs.num_roots(); ++rt) {
      if (!(pos & (RootMask(1) << rt))) continue;
      m = std::min(m, rs.pair(rt, t.entries[j].mu));
      any = true;
    }
  }
  return any ? m : INT64_MAX;
}

bool polytope_contains(const RootSystem& rs, const VecR& x, const QACoords& c) {
  for (int p = 0; p < rs.num_psi(); ++p) {
    if (rs.pair_weight(rs.psi(p).weight, x) > Rat(c.coords[static_cast<std::size_t>(p)]))
      return false;
  }
  return true;
}

std::vector<VecR> polytope_vertices(const RootSystem& rs, const QACoords& c) {
  const int r = rs.rank();
  const int np = rs.num_psi();
  std::vector<VecR> verts;
  std::vector<int> idx(static_cast<std::size_t>(r));
  // All r-subsets of the Psi hyperplanes.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      MatR a(r, r);
      VecR b(r);
      for (int i = 0; i < r; ++i) {
        const VecI& w = rs.psi(idx[static_cast<std::size_t>(i)]).weight;
        for (int j = 0; j < r; ++j) a(i, j) = Rat(w[j]);
        b[i] = Rat(c.coords[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
      }
      MatR chk = a;
      if (rank_exact(chk) < r) return;
      auto sol = solve_exact(a, b);
      if (!sol) return;
      if (!polytope_contains(rs, *sol, c)) return;
      for (const VecR& v : verts)
        if (vec_eq<Rat>(v, *sol)) return;
      verts.push_back(*sol);
      return;
    }
    for (int p = start; p < np; ++p) {
      idx[static_cast<std::size_t>(depth)] = p;
      rec(p + 1, depth + 1);
    }
  };
  rec(0, 0);
  return verts;
}

bool kreg_face_check(const RootSystem& rs, const QACoords& c, int psi) {
  if (regularity(rs, c) < 1) throw DomainError("kreg_face_check: tuple must be regular");
  if (!is_quasi_admissible(rs, from_coords(rs, c)))
    throw DomainError("kreg_face_check: tuple must be quasi-admissible");
  const PsiData& pd = rs.psi(psi);
  const Rat level(c.coords[static_cast<std::size_t>(psi)]);

  std::vector<VecR> face;
  for (const VecR& v : polytope_vertices(rs, c))
    if (rs.pair_weight(pd.weight, v) == level) face.push_back(v);

  // Face vertices must match conv{mu_C : C containing psi}: every mu_C lies on
  // the face, and every face vertex is a convex combination of the mu_C.
  ChamberTuple t = from_coords(rs, c);
  std::vector<VecR> mus;
  for (int u : pd.chambers_containing) {
    VecR m = to_rat(t.entries[static_cast<std::size_t>(u)].mu);
    if (rs.pair_weight(pd.weight, m) != level) return false;
    if (!polytope_contains(rs, m, c)) return false;
    mus.push_back(m);
  }
  const int r = rs.rank();
  MatR lifted(r + 1, static_cast<Eigen::Index>(mus.size()));
  for (std::size_t j = 0; j < mus.size(); ++j) {
    for (int i = 0; i < r; ++i) lifted(i, static_cast<Eigen::Index>(j)) = mus[j][i];
    lifted(r, static_cast<Eigen::Index>(j)) = Rat(1);
  }
  for (const VecR& v : face) {
    VecR lv(r + 1);
    for (int i = 0; i < r; ++i) lv[i] = v[i];
    lv[r] = Rat(1);
    if (!cone_member(lifted, lv)) return false;
  }

  // Strict positivity on the face for every root on the psi side.
  std::vector<VecR> samples = face;
  if (!face.empty()) {
    VecR centroid = VecR::Zero(r);
    for (const VecR& v : face) centroid += v;
    samples.push_back(centroid / Rat(static_cast<Int>(face.size())));
  }
  for (const VecR& x : samples) {
    for (int rt = 0; rt < rs.num_roots(); ++rt) {
      if (rs.pair(rt, pd.coweight).sign() <= 0) continue;
      if (rs.pair(rt, x).sign() <= 0) return false;
    }
  }
  return true;
}

Order2Constant lemma_order2_constant(const RootSystem& rs, const ChamberTuple& u_tuple) {
  Order2Constant out;
  out.m_prime = 0;
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    for (int i = 0; i < rs.rank(); ++i) {
      int alpha = ch.simple_roots[static_cast<std::size_t>(i)];
      int v = rs.weyl_mult(rs.reflection_of_root(alpha), u);
      const VecR coroot = to_rat(VecI(rs.root(alpha).coroot));
      for (const VecR& x : rs.alcove_vertices()) {
        VecR diff = aff_apply(rs, u_tuple.entries[static_cast<std::size_t>(u)], x) -
                    aff_apply(rs, u_tuple.entries[static_cast<std::size_t>(v)], x);
        // diff = m_{C,alpha,x} * coroot for an admissible tuple.
        Rat m(0);
        bool have = false;
        for (int j = 0; j < rs.rank(); ++j) {
          if (coroot[j].sign() == 0) {
            if (diff[j].sign() != 0)
              throw InvariantViolation("wall difference is not a coroot multiple");
            continue;
          }
          Rat q = diff[j] / coroot[j];
          if (have && q != m) throw InvariantViolation("wall difference is not a coroot multiple");
          m = q;
          have = true;
        }
        if (m.sign() < 0) throw InvariantViolation("negative wall coefficient on admissible tuple");
        // Supremum over the closed alcove is attained at the vertices.
        Int ceil_m = -((-m).floor());
        out.m_prime = std::max(out.m_prime, ceil_m);
      }
    }
  }
  // Minimal dominant regular mu with wall pairings >= m'.
  for (Int total = 1; total <= 256 && out.mu.size() == 0; ++total) {
    std::vector<VecI> level;
    VecI cur = VecI::Zero(rs.rank());
    std::function<void(int, Int)> rec = [&](int pos, Int left) {
      if (pos == rs.rank() - 1) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (Int vv = 0; vv <= left; ++vv) {
        cur[pos] = vv;
        rec(pos + 1, left - vv);
      }
    };
    rec(0, total);
    std::sort(level.begin(), level.end(), vec_lex_less);
    for (const VecI& cand : level) {
      VecI p = rs.cartan().transpose() * cand;
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (p[i] < std::max<Int>(out.m_prime, 1)) ok = false;
      if (ok) {
        out.mu = cand;
        break;
      }
    }
  }
  if (out.mu.size() == 0) throw SearchLimitError("lemma_order2_constant: no mu found");
  ChamberTuple mu_bar = dominant_tuple(rs, out.mu);
  out.m = 0;
  for (int u = 0; u < rs.weyl_order(); ++u) {
    const Chamber& ch = rs.chamber(u);
    for (int i = 0; i < rs.rank(); ++i) {
      int alpha = ch.simple_roots[static_cast<std::size_t>(i)];
      out.m = std::max(out.m,
                       rs.pair(alpha, mu_bar.entries[static_cast<std::size_t>(u)].mu) + 1);
    }
  }
  return out;
}

}  // namespace alcove
