#include "alcove/affine.hpp"

#include <algorithm>
#include <mutex>

namespace alcove {

AffElem aff_identity(const RootSystem& rs) { return AffElem{VecI::Zero(rs.rank()), 0}; }

AffElem aff_translation(const RootSystem& rs, const VecI& mu) {
  (void)rs;
  return AffElem{mu, 0};
}

AffElem aff_finite(const RootSystem& rs, int u) { return AffElem{VecI::Zero(rs.rank()), u}; }

AffElem aff_mult(const RootSystem& rs, const AffElem& a, const AffElem& b) {
  return AffElem{a.mu + rs.act_point(a.u, b.mu), rs.weyl_mult(a.u, b.u)};
}

AffElem aff_inverse(const RootSystem& rs, const AffElem& w) {
  int ui = rs.weyl_inverse(w.u);
  return AffElem{VecI(-rs.act_point(ui, w.mu)), ui};
}

VecR aff_apply(const RootSystem& rs, const AffElem& w, const VecR& x) {
  return rs.act_point(w.u, x) + to_rat(w.mu);
}

VecI aff_apply(const RootSystem& rs, const AffElem& w, const VecI& x) {
  return rs.act_point(w.u, x) + w.mu;
}

bool aff_root_positive(const RootSystem& rs, const AffRoot& a) {
  if (a.level != 0) return a.level > 0;
  return rs.root(a.root).positive;
}

AffRoot aff_act_root(const RootSystem& rs, const AffElem& w, const AffRoot& a) {
  int img = rs.act_root(w.u, a.root);
  return AffRoot{img, a.level - rs.pair(img, w.mu)};
}

AffElem aff_reflection(const RootSystem& rs, const AffRoot& a) {
  const Root& rt = rs.root(a.root);
  return AffElem{VecI(-a.level * rt.coroot), rs.reflection_of_root(a.root)};
}

Rat aff_root_value(const RootSystem& rs, const AffRoot& a, const VecR& x) {
  return rs.pair(a.root, x) + Rat(a.level);
}

int aff_length(const RootSystem& rs, const AffElem& w) {
  // #{affine roots (alpha, n) > 0 with w(alpha, n) < 0}, counted per alpha.
  int total = 0;
  for (int rt = 0; rt < rs.num_roots(); ++rt) {
    int img = rs.act_root(w.u, rt);
    Int p = rs.pair(img, w.mu);
    Int n0 = rs.root(rt).positive ? 0 : 1;
    if (p > n0) total += static_cast<int>(p - n0);
    if (p >= n0 && !rs.root(img).positive) total += 1;
  }
  return total;
}

int num_aff_generators(const RootSystem& rs) { return rs.rank() + 1; }

AffRoot aff_generator_root(const RootSystem& rs, int i) {
  if (i == 0) return AffRoot{rs.root(rs.highest_root()).negative, 1};
  return AffRoot{rs.simple_root(i - 1), 0};
}

AffElem aff_generator(const RootSystem& rs, int i) {
  return aff_reflection(rs, aff_generator_root(rs, i));
}

bool left_descent(const RootSystem& rs, const AffElem& w, int i) {
  AffRoot a = aff_generator_root(rs, i);
  return !aff_root_positive(rs, aff_act_root(rs, aff_inverse(rs, w), a));
}

bool right_descent(const RootSystem& rs, const AffElem& w, int i) {
  AffRoot a = aff_generator_root(rs, i);
  return !aff_root_positive(rs, aff_act_root(rs, w, a));
}

std::vector<int> aff_reduced_word(const RootSystem& rs, const AffElem& w) {
  std::vector<int> word;
  AffElem cur = w;
  AffElem id = aff_identity(rs);
  while (!(cur == id)) {
    bool found = false;
    for (int i = 0; i < num_aff_generators(rs); ++i) {
      if (left_descent(rs, cur, i)) {
        word.push_back(i);
        cur = aff_mult(rs, aff_generator(rs, i), cur);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("nontrivial element without left descent");
  }
  return word;
}

AffElem aff_from_word(const RootSystem& rs, const VecI& mu, const std::vector<int>& finite_word) {
  AffElem w = aff_translation(rs, mu);
  for (int i : finite_word) {
    if (i < 1 || i > rs.rank()) throw UsageError("word letter out of range");
    w = aff_mult(rs, w, aff_generator(rs, i));
  }
  return w;
}

bool in_chamber(const RootSystem& rs, const AffElem& w, int chamber_u) {
  const Chamber& ch = rs.chamber(chamber_u);
  AffElem wi = aff_inverse(rs, w);
  for (int rt = 0; rt < rs.num_roots(); ++rt) {
    if (!(ch.positive & (RootMask(1) << rt))) continue;
    if (!aff_root_positive(rs, aff_act_root(rs, wi, AffRoot{rt, 0}))) return false;
  }
  return true;
}

BruhatOrder::Key BruhatOrder::make_key(const AffElem& a, const AffElem& b) const {
  auto pack = [this](const AffElem& w) {
    std::uint64_t k = static_cast<std::uint64_t>(w.u);
    for (int i = 0; i < rs_.rank(); ++i) {
      Int c = w.mu[i];
      if (c < -30000 || c > 30000) throw SearchLimitError("Bruhat memo key out of range");
      k = (k << 16) | static_cast<std::uint64_t>(c + 32768);
    }
    return k;
  };
  return Key{pack(a), pack(b)};
}

bool BruhatOrder::leq(const AffElem& a, const AffElem& b) const {
  if (a == b) return true;
  int la = aff_length(rs_, a), lb = aff_length(rs_, b);
  if (la >= lb) return false;
  Key key = make_key(a, b);
  {
    std::shared_lock lk(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // Descent recursion: pick s with s.b < b; then a <= b iff
  // (sa < a ? sa <= sb : a <= sb).
  int s = -1;
  for (int i = 0; i < num_aff_generators(rs_); ++i) {
    if (left_descent(rs_, b, i)) {
      s = i;
      break;
    }
  }
  if (s < 0) throw InvariantViolation("length > 0 element without descent");
  AffElem sb = aff_mult(rs_, aff_generator(rs_, s), b);
  bool result;
  if (left_descent(rs_, a, s)) {
    result = leq(aff_mult(rs_, aff_generator(rs_, s), a), sb);
  } else {
    result = leq(a, sb);
  }
  {
    std::unique_lock lk(mutex_);
    memo_.emplace(key, result);
  }
  return result;
}

std::vector<AffElem> BruhatOrder::lower_interval(const AffElem& w) const {
  std::vector<int> word = aff_reduced_word(rs_, w);
  AffElemSet set;
  set.insert(aff_identity(rs_));
  for (int letter : word) {
    AffElem s = aff_generator(rs_, letter);
    AffElemSet next = set;
    for (const AffElem& x : set) next.insert(aff_mult(rs_, x, s));
    set = std::move(next);
  }
  std::vector<AffElem> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [this](const AffElem& x, const AffElem& y) {
    int lx = aff_length(rs_, x), ly = aff_length(rs_, y);
    if (lx != ly) return lx < ly;
    if (x.u != y.u) return x.u < y.u;
    return vec_lex_less(x.mu, y.mu);
  });
  return out;
}

std::vector<AffRoot> levi_simple_affine_roots(const RootSystem& rs, int psi) {
  const PsiData& pd = rs.psi(psi);
  std::vector<AffRoot> out;
  for (int rt : pd.perp_simples) out.push_back(AffRoot{rt, 0});
  for (int rt : pd.perp_highest) out.push_back(AffRoot{rs.root(rt).negative, 1});
  return out;
}

bool in_min_coset(const RootSystem& rs, int psi, const AffElem& w) {
  const PsiData& pd = rs.psi(psi);
  AffElem wi = aff_inverse(rs, w);
  for (int rt = 0; rt < rs.num_roots(); ++rt) {
    if (!(pd.phi_perp & (RootMask(1) << rt))) continue;
    bool pos = pd.perp_positive & (RootMask(1) << rt);
    // Worst case over levels: n = 0 for subsystem positives, n = 1 otherwise.
    AffRoot worst{rt, pos ? Int(0) : Int(1)};
    if (!aff_root_positive(rs, aff_act_root(rs, wi, worst))) return false;
  }
  return true;
}

bool in_levi_affine(const RootSystem& rs, int psi, const AffElem& w) {
  const PsiData& pd = rs.psi(psi);
  if (!std::binary_search(pd.levi_weyl.begin(), pd.levi_weyl.end(), w.u)) return false;
  // Translation part must be an integer combination of subsystem simple coroots.
  const int ns = static_cast<int>(pd.perp_simples.size());
  if (ns == 0) return w.mu.isZero();
  MatR basis(rs.rank(), ns);
  for (int j = 0; j < ns; ++j)
    basis.col(j) = to_rat(VecI(rs.root(pd.perp_simples[static_cast<std::size_t>(j)]).coroot));
  auto sol = solve_exact(basis, to_rat(w.mu));
  if (!sol) return false;
  VecR residual = basis * (*sol) - to_rat(w.mu);
  for (int i = 0; i < rs.rank(); ++i)
    if (residual[i].sign() != 0) return false;
  for (int j = 0; j < ns; ++j)
    if (!(*sol)[j].is_integer()) return false;
  return true;
}

PsiFactorization psi_factorize(const RootSystem& rs, int psi, const AffElem& w) {
  std::vector<AffRoot> simples = levi_simple_affine_roots(rs, psi);
  AffElem cur = w;
  for (int guard = 0; guard < 1000000; ++guard) {
    AffElem ci = aff_inverse(rs, cur);
    int found = -1;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (!aff_root_positive(rs, aff_act_root(rs, ci, simples[i]))) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) {
      PsiFactorization f;
      f.min = cur;
      f.levi = aff_mult(rs, w, aff_inverse(rs, cur));
      if (!in_min_coset(rs, psi, f.min))
        throw InvariantViolation("psi factorization produced a non-minimal representative");
      if (!in_levi_affine(rs, psi, f.levi))
        throw InvariantViolation("psi factorization left the Levi affine group");
      return f;
    }
    cur = aff_mult(rs, aff_reflection(rs, simples[static_cast<std::size_t>(found)]), cur);
  }
  throw SearchLimitError("psi_factorize did not terminate");
}

std::vector<AffRoot> levi_reflection_word(const RootSystem& rs, int psi, const AffElem& q) {
  const PsiData& pd = rs.psi(psi);
  if (!in_levi_affine(rs, psi, q))
    throw DomainError("levi_reflection_word: element not in the Levi affine group");
  std::vector<AffRoot> word;  // q = s_{word.back()} ... s_{word.front()}
  // Finite part first: strip reflections in subsystem roots.
  int u = q.u;
  std::vector<int> finite_refls;
  for (int guard = 0; guard < 10000 && u != 0; ++guard) {
    // Any subsystem root beta with u^{-1}(beta) a subsystem negative shortens u.
    int pick = -1;
    for (int rt = 0; rt < rs.num_roots(); ++rt) {
      if (!(pd.perp_positive & (RootMask(1) << rt))) continue;
      int pre = rs.act_root(rs.weyl_inverse(u), rt);
      if (!(pd.perp_positive & (RootMask(1) << pre)) && (pd.phi_perp & (RootMask(1) << pre))) {
        pick = rt;
        break;
      }
      if (!(pd.phi_perp & (RootMask(1) << pre)))
        throw InvariantViolation("Levi element does not preserve the subsystem");
    }
    if (pick < 0) {
      if (u != 0) throw InvariantViolation("Levi finite part did not reduce to identity");
      break;
    }
    finite_refls.push_back(pick);
    u = rs.weyl_mult(rs.reflection_of_root(pick), u);
  }
  if (u != 0) throw InvariantViolation("Levi finite part did not reduce");
  // Stripping s_{p_m}...s_{p_1} u = e gives q.u = s_{p_1}...s_{p_m}.
  AffElem rebuilt = aff_identity(rs);
  for (int p : finite_refls)
    rebuilt = aff_mult(rs, rebuilt, aff_finite(rs, rs.reflection_of_root(p)));
  // rebuilt has zero translation; q * rebuilt^{-1} = t_mu.
  AffElem tmu = aff_mult(rs, q, aff_inverse(rs, rebuilt));
  if (tmu.u != 0) throw InvariantViolation("translation extraction failed");

  // Decompose mu over subsystem simple coroots (integrally).
  const int ns = static_cast<int>(pd.perp_simples.size());
  std::vector<AffRoot> translation_word;
  if (ns > 0 && !tmu.mu.isZero()) {
    MatR basis(rs.rank(), ns);
    for (int j = 0; j < ns; ++j)
      basis.col(j) = to_rat(VecI(rs.root(pd.perp_simples[static_cast<std::size_t>(j)]).coroot));
    auto sol = solve_exact(basis, to_rat(tmu.mu));
    if (!sol) throw InvariantViolation("Levi translation outside subsystem coroot lattice");
    for (int j = 0; j < ns; ++j) {
      Int m = (*sol)[j].num();
      if (!(*sol)[j].is_integer()) throw InvariantViolation("non-integral Levi translation");
      int beta = pd.perp_simples[static_cast<std::size_t>(j)];
      // t_{coroot(beta)} = s_{(beta,-1)} s_{(beta,0)}.
      for (Int rep = 0; rep < (m > 0 ? m : -m); ++rep) {
        if (m > 0) {
          translation_word.push_back(AffRoot{beta, 0});
          translation_word.push_back(AffRoot{beta, -1});
        } else {
          translation_word.push_back(AffRoot{beta, -1});
          translation_word.push_back(AffRoot{beta, 0});
        }
      }
    }
  }
  // q = t_mu . (s_{p_1}...s_{p_m}); in applied-first order the finite factor
  // comes first with s_{p_m} leading, then the translation reflections.
  for (auto it = finite_refls.rbegin(); it != finite_refls.rend(); ++it)
    word.push_back(AffRoot{*it, 0});
  for (const AffRoot& r : translation_word) word.push_back(r);

  // The reflection product must reproduce q.
  AffElem check = aff_identity(rs);
  for (const AffRoot& r : word) check = aff_mult(rs, aff_reflection(rs, r), check);
  if (!(check == q)) throw InvariantViolation("levi_reflection_word product mismatch");
  return word;
}

bool in_rank_one_group(const RootSystem& rs, int root, const AffElem& w) {
  const Root& rt = rs.root(root);
  if (w.u != 0 && w.u != rs.reflection_of_root(root)) return false;
  // Translation must be an integer multiple of the coroot.
  Int k = 0;
  bool set = false;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rt.coroot[i] == 0) {
      if (w.mu[i] != 0) return false;
      continue;
    }
    if (w.mu[i] % rt.coroot[i] != 0) return false;
    Int q = w.mu[i] / rt.coroot[i];
    if (set && q != k) return false;
    k = q;
    set = true;
  }
  return true;
}

}  // namespace alcove
