#include "alcove/schubert.hpp"

#include <algorithm>
#include <map>

namespace alcove {

std::vector<AffElem> sorted_elements(const RootSystem& rs, std::vector<AffElem> v) {
  std::sort(v.begin(), v.end(), [&rs](const AffElem& a, const AffElem& b) {
    int la = aff_length(rs, a), lb = aff_length(rs, b);
    if (la != lb) return la < lb;
    if (a.u != b.u) return a.u < b.u;
    return vec_lex_less(a.mu, b.mu);
  });
  return v;
}

bool FixedPointSet::contains(const RootSystem& rs, const AffElem& w) const {
  (void)rs;
  for (const AffElem& e : elements)
    if (e == w) return true;
  return false;
}

bool same_elements(const FixedPointSet& a, const FixedPointSet& b) {
  if (a.elements.size() != b.elements.size()) return false;
  AffElemSet sa(a.elements.begin(), a.elements.end());
  for (const AffElem& e : b.elements)
    if (!sa.count(e)) return false;
  return true;
}

FixedPointSet SchubertModel::lower_interval(const AffElem& w) const {
  FixedPointSet fp;
  fp.elements = ord_.bruhat().lower_interval(w);
  fp.description = "bruhat lower interval";
  return fp;
}

std::vector<AffElem> SchubertModel::window_candidates(const std::vector<Int>& psi_bounds) const {
  // Box bounds per coroot coordinate come from the base fundamental weights
  // and their negatives (both lie in Psi).
  const int r = rs_.rank();
  VecI hi(r), lo(r);
  for (int i = 0; i < r; ++i) {
    int p = rs_.psi_orbit(0, i);
    hi[i] = psi_bounds[static_cast<std::size_t>(p)];
    VecI neg = -rs_.psi(p).weight;
    int pn = rs_.psi_index(neg);
    if (pn < 0) throw InvariantViolation("Psi is not symmetric under negation");
    lo[i] = -psi_bounds[static_cast<std::size_t>(pn)];
  }
  std::vector<AffElem> out;
  VecI mu(r);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == r) {
      for (int p = 0; p < rs_.num_psi(); ++p) {
        if (rs_.pair_weight(rs_.psi(p).weight, mu) > psi_bounds[static_cast<std::size_t>(p)])
          return;
      }
      for (int u = 0; u < rs_.weyl_order(); ++u) out.push_back(AffElem{mu, u});
      return;
    }
    for (Int v = lo[pos]; v <= hi[pos]; ++v) {
      mu[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

bool SchubertModel::tuple_leq_all(const AffElem& w, const ChamberTuple& t) const {
  for (int u = 0; u < rs_.weyl_order(); ++u) {
    if (!ord_.leq_chamber(w, t.entries[static_cast<std::size_t>(u)], u)) return false;
  }
  return true;
}

FixedPointSet SchubertModel::tuple_fixed_points(const ChamberTuple& t) const {
  // psi bounds with +1 margin; the margin zone must stay empty.
  std::vector<Int> bounds(static_cast<std::size_t>(rs_.num_psi()), INT64_MAX);
  for (int u = 0; u < rs_.weyl_order(); ++u) {
    const Chamber& ch = rs_.chamber(u);
    for (int i = 0; i < rs_.rank(); ++i) {
      int p = ch.psi[static_cast<std::size_t>(i)];
      Int v = rs_.pair_weight(rs_.psi(p).weight, t.entries[static_cast<std::size_t>(u)].mu);
      bounds[static_cast<std::size_t>(p)] = std::min(bounds[static_cast<std::size_t>(p)], v);
    }
  }
  std::vector<Int> margined = bounds;
  for (Int& b : margined) b += 1;
  const VecR x0 = rs_.alcove_center();
  std::vector<VecR> tuple_points;
  for (int u = 0; u < rs_.weyl_order(); ++u)
    tuple_points.push_back(aff_apply(rs_, t.entries[static_cast<std::size_t>(u)], x0));
  FixedPointSet fp;
  for (const AffElem& w : window_candidates(margined)) {
    // Necessary condition at the alcove point, cheap to test per chamber.
    VecR wp = aff_apply(rs_, w, x0);
    bool plausible = true;
    for (int u = 0; u < rs_.weyl_order() && plausible; ++u) {
      if (!ord_.leq_cone(wp, tuple_points[static_cast<std::size_t>(u)], ord_.chamber_mask(u)))
        plausible = false;
    }
    if (!plausible) continue;
    if (!tuple_leq_all(w, t)) continue;
    for (int p = 0; p < rs_.num_psi(); ++p) {
      if (rs_.pair_weight(rs_.psi(p).weight, w.mu) > bounds[static_cast<std::size_t>(p)])
        throw InvariantViolation("fixed point escaped the unmargined window");
    }
    fp.elements.push_back(w);
  }
  fp.elements = sorted_elements(rs_, fp.elements);
  fp.description = "tuple fixed points";
  return fp;
}

ChamberTuple SchubertModel::schubert_tuple(const AffElem& w) const {
  std::vector<AffElem> interval = ord_.bruhat().lower_interval(w);
  ChamberTuple t;
  t.lattice = false;
  for (int u = 0; u < rs_.weyl_order(); ++u) {
    AffElem best = interval.front();
    for (const AffElem& y : interval) {
      if (ord_.leq_chamber(best, y, u)) best = y;
    }
    for (const AffElem& y : interval) {
      if (!ord_.leq_chamber(y, best, u))
        throw InvariantViolation("lower interval has no <=_C maximum");
    }
    t.entries.push_back(best);
  }
  if (!is_admissible(ord_, t))
    throw InvariantViolation("Schubert tuple is not admissible");
  return t;
}

bool SchubertModel::verify_thm_sch(const AffElem& w) const {
  FixedPointSet a = lower_interval(w);
  FixedPointSet b = tuple_fixed_points(schubert_tuple(w));
  return same_elements(a, b);
}

Int SchubertModel::sch_regularity_r() const {
  const VecI& mu0 = rs_.minimal_regular_dominant();
  Int r = 0;
  for (int i = 0; i < rs_.rank(); ++i) r = std::max(r, 2 * mu0[i]);
  return r;
}

ChamberTuple SchubertModel::claim_ineq_tuple(const AffElem& w_plus) const {
  if (!in_chamber(rs_, w_plus, 0)) throw DomainError("claim_ineq_tuple: w_+ not in C0");
  ChamberTuple t;
  t.lattice = false;
  for (int u = 0; u < rs_.weyl_order(); ++u)
    t.entries.push_back(aff_mult(rs_, aff_finite(rs_, u), w_plus));
  ChamberTuple expect =
      schubert_tuple(aff_mult(rs_, aff_finite(rs_, rs_.longest_element()), w_plus));
  if (!(t == expect))
    throw InvariantViolation("claim_ineq tuple disagrees with the Schubert tuple");
  return t;
}

std::vector<ChamberTuple> SchubertModel::intersect_tuple_models(const ChamberTuple& a,
                                                                const ChamberTuple& b) const {
  FixedPointSet fa = tuple_fixed_points(a);
  FixedPointSet fb = tuple_fixed_points(b);
  AffElemSet sb(fb.elements.begin(), fb.elements.end());
  std::vector<AffElem> inter;
  for (const AffElem& e : fa.elements)
    if (sb.count(e)) inter.push_back(e);

  auto leq_all_chambers = [&](const AffElem& x, const AffElem& y) {
    for (int u = 0; u < rs_.weyl_order(); ++u)
      if (!ord_.leq_chamber(x, y, u)) return false;
    return true;
  };
  std::vector<AffElem> maximal;
  for (const AffElem& g : inter) {
    bool dominated = false;
    for (const AffElem& h : inter) {
      if (h == g) continue;
      if (leq_all_chambers(g, h)) dominated = true;
    }
    if (!dominated) maximal.push_back(g);
  }
  maximal = sorted_elements(rs_, maximal);

  // Covering: the union of the constant-generator fixed point sets is the
  // intersection.
  AffElemSet covered;
  std::vector<ChamberTuple> gens;
  for (const AffElem& g : maximal) {
    ChamberTuple cg = constant_tuple(rs_, g);
    for (const AffElem& e : tuple_fixed_points(cg).elements) {
      bool in_inter = false;
      for (const AffElem& x : inter)
        if (x == e) in_inter = true;
      if (!in_inter)
        throw InvariantViolation("generator fixed points escape the intersection");
      covered.insert(e);
    }
    gens.push_back(std::move(cg));
  }
  if (covered.size() != inter.size())
    throw InvariantViolation("generators do not cover the intersection");
  return gens;
}

namespace {

// Local maximality in the chamber cone: mu is maximal in a <=_C-downward
// closed set iff no single simple-coroot step stays inside.
std::vector<VecI> window_lattice(const RootSystem& rs, Int lo, Int hi) {
  std::vector<VecI> out;
  VecI mu(rs.rank());
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rs.rank()) {
      out.push_back(mu);
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      mu[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

Int SchubertModel::claim_bound_r() const {
  Int r = 0;
  // Conjugation covariance of the orders identifies the (C, u, u') data with
  // (C0, v^{-1}u, v^{-1}u'), preserving the psi pairing; the base chamber
  // already realizes the maximum.
  const VecR x0 = rs_.alcove_center();
  {
    const int cu = 0;
    const Chamber& ch = rs_.chamber(cu);
    for (int i = 0; i < rs_.rank(); ++i) {
      int psi = ch.psi[static_cast<std::size_t>(i)];
      const VecI& pw = rs_.psi(psi).weight;
      for (int uf = 0; uf < rs_.weyl_order(); ++uf) {
        for (int vf = 0; vf < rs_.weyl_order(); ++vf) {
          AffElem target = aff_finite(rs_, vf);
          const VecR target_pt = aff_apply(rs_, target, x0);
          auto member = [&](const VecI& mu) {
            AffElem w = aff_mult(rs_, aff_translation(rs_, mu), aff_finite(rs_, uf));
            // necessary cone condition first, the Bruhat translate after
            if (!ord_.leq_cone(aff_apply(rs_, w, x0), target_pt, ord_.chamber_mask(cu)))
              return false;
            return ord_.leq_chamber(w, target, cu);
          };
          Int prev_best = INT64_MIN;
          for (Int bound = 3;; bound += 2) {
            Int best = INT64_MIN;
            for (const VecI& mu : window_lattice(rs_, -bound, bound)) {
              if (!member(mu)) continue;
              bool maximal = true;
              for (int j = 0; j < rs_.rank() && maximal; ++j) {
                VecI up = mu + rs_.root(ch.simple_roots[static_cast<std::size_t>(j)]).coroot;
                if (member(up)) maximal = false;
              }
              if (maximal) best = std::max(best, -rs_.pair_weight(pw, mu));
            }
            if (best == prev_best) break;
            prev_best = best;
            if (bound > 9)
              throw SearchLimitError("claim_bound_r: maximal set did not stabilize");
          }
          r = std::max(r, prev_best);
        }
      }
    }
  }
  return r;
}

Int SchubertModel::claim_bound_r_psi() const {
  Int r = 0;
  // One psi per Weyl orbit suffices (conjugation covariance); the base
  // chamber's fundamental weights are orbit representatives.
  const VecR x0 = rs_.alcove_center();
  for (int p : rs_.chamber(0).psi) {
    const VecI& pw = rs_.psi(p).weight;
    for (int uf = 0; uf < rs_.weyl_order(); ++uf) {
      for (int vf = 0; vf < rs_.weyl_order(); ++vf) {
        AffElem target = aff_finite(rs_, vf);
        const VecR target_pt = aff_apply(rs_, target, x0);
        std::map<std::vector<Int>, bool> memo;
        auto member = [&](const VecI& mu) {
          std::vector<Int> key(mu.data(), mu.data() + mu.size());
          auto it = memo.find(key);
          if (it != memo.end()) return it->second;
          AffElem w = aff_mult(rs_, aff_translation(rs_, mu), aff_finite(rs_, uf));
          bool v = ord_.leq_cone(aff_apply(rs_, w, x0), target_pt, ord_.psi_mask(p)) &&
                   ord_.leq_psi(w, target, p);
          memo.emplace(key, v);
          return v;
        };
        std::map<std::pair<std::vector<Int>, std::vector<Int>>, bool> leq_memo;
        auto leq = [&](const VecI& a, const VecI& b) {
          std::pair<std::vector<Int>, std::vector<Int>> key{
              {a.data(), a.data() + a.size()}, {b.data(), b.data() + b.size()}};
          auto it = leq_memo.find(key);
          if (it != leq_memo.end()) return it->second;
          bool v = ord_.leq_psi(aff_translation(rs_, a), aff_translation(rs_, b), p);
          leq_memo.emplace(key, v);
          return v;
        };
        Int prev_best = INT64_MIN;
        for (Int bound = 2;; ++bound) {
          std::vector<VecI> members;
          for (const VecI& mu : window_lattice(rs_, -bound, bound))
            if (member(mu)) members.push_back(mu);
          Int best = INT64_MIN;
          for (const VecI& mu : members) {
            bool maximal = true;
            for (const VecI& nu : members) {
              if (vec_eq<Int>(mu, nu)) continue;
              if (leq(mu, nu) && !leq(nu, mu)) {
                maximal = false;
                break;
              }
            }
            if (maximal) best = std::max(best, -rs_.pair_weight(pw, mu));
          }
          if (best == prev_best) break;
          prev_best = best;
          if (bound > 5)
            throw SearchLimitError("claim_bound_r_psi: maximal set did not stabilize");
        }
        r = std::max(r, prev_best);
      }
    }
  }
  return r;
}

Int SchubertModel::lemma_finite_r() const {
  const VecI& mu0 = rs_.minimal_regular_dominant();
  VecI pairings = rs_.cartan().transpose() * mu0;
  Int r = 0;
  for (int i = 0; i < rs_.rank(); ++i) r = std::max(r, pairings[i]);
  return r;
}

QACoords SchubertModel::lemma_finite_witness(const ChamberTuple& w) const {
  Int r = lemma_finite_r();
  ChamberTuple pi;
  pi.lattice = true;
  for (const AffElem& e : w.entries) pi.entries.push_back(aff_translation(rs_, e.mu));
  Int reg = regularity(rs_, pi);
  if (reg < r) throw DomainError("lemma_finite_witness: tuple is not r-regular");
  QACoords x = to_coords(rs_, pi);
  QACoords mu_coords = dominant_coords(rs_, rs_.minimal_regular_dominant());
  for (std::size_t i = 0; i < x.coords.size(); ++i) x.coords[i] -= mu_coords.coords[i];
  if (regularity(rs_, x) < reg - r)
    throw InvariantViolation("lemma_finite witness lost too much regularity");
  // Inclusion x . w_st <= w, componentwise in <=_C.
  ChamberTuple xw = translate(rs_, from_coords(rs_, x), standard_weyl_tuple(rs_));
  for (int u = 0; u < rs_.weyl_order(); ++u) {
    if (!ord_.leq_chamber(xw.entries[static_cast<std::size_t>(u)],
                          w.entries[static_cast<std::size_t>(u)], u))
      throw InvariantViolation("lemma_finite witness inclusion failed");
  }
  return x;
}

Int SchubertModel::lemma_seq_r() const {
  QACoords y = dominant_coords(rs_, rs_.minimal_regular_dominant());
  QACoords acc;
  acc.coords.assign(y.coords.size(), 0);
  Int r = 0;
  for (std::size_t p = 0; p < y.coords.size(); ++p) {
    for (Int k = 0; k < y.coords[p]; ++k) {
      acc.coords[p] += 1;
      ChamberTuple t = from_coords(rs_, acc);
      for (int u = 0; u < rs_.weyl_order(); ++u) {
        const Chamber& ch = rs_.chamber(u);
        for (int rt = 0; rt < rs_.num_roots(); ++rt) {
          if (!(ch.positive & (RootMask(1) << rt))) continue;
          r = std::max(r, -rs_.pair(rt, t.entries[static_cast<std::size_t>(u)].mu));
        }
      }
    }
  }
  return r;
}

std::vector<QACoords> SchubertModel::lemma_seq_sequence(const QACoords& x, Int m,
                                                        int steps) const {
  if (regularity(rs_, x) < m + lemma_seq_r())
    throw DomainError("lemma_seq_sequence: insufficient regularity");
  QACoords y = dominant_coords(rs_, rs_.minimal_regular_dominant());
  for (Int c : y.coords)
    if (c < 1) throw InvariantViolation("dominant tuple coordinate below 1");
  std::vector<QACoords> out;
  QACoords cur = x;
  out.push_back(cur);
  std::size_t p = 0;
  Int used = 0;
  for (int s = 0; s < steps; ++s) {
    while (used >= y.coords[p]) {
      p = (p + 1) % y.coords.size();
      used = 0;
    }
    cur = add_e_psi(cur, static_cast<int>(p), 1);
    ++used;
    if (regularity(rs_, cur) < m)
      throw InvariantViolation("lemma_seq stream lost m-regularity");
    out.push_back(cur);
  }
  return out;
}

bool SchubertModel::psi_closure_leq(const ChamberTuple& w, const AffElem& u, int psi) const {
  return ord_.leq_psi(tuple_psi(rs_, w, psi), u, psi);
}

}  // namespace alcove
