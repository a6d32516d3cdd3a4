#include "alcove/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace alcove {

CartanType parse_cartan_type(const std::string& label) {
  if (label == "A1") return CartanType::A1;
  if (label == "A2") return CartanType::A2;
  if (label == "B2") return CartanType::B2;
  if (label == "C2") return CartanType::C2;
  if (label == "G2") return CartanType::G2;
  if (label == "A3") return CartanType::A3;
  throw UsageError("unknown Cartan type '" + label + "' (expected A1, A2, B2, C2, G2 or A3)");
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A1: return "A1";
    case CartanType::A2: return "A2";
    case CartanType::B2: return "B2";
    case CartanType::C2: return "C2";
    case CartanType::G2: return "G2";
    case CartanType::A3: return "A3";
  }
  return "?";
}

namespace {

MatI cartan_matrix(CartanType t) {
  auto fill = [](std::initializer_list<Int> vals, int n) {
    MatI m(n, n);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = *it++;
    return m;
  };
  switch (t) {
    case CartanType::A1: return fill({2}, 1);
    case CartanType::A2: return fill({2, -1, -1, 2}, 2);
    case CartanType::B2: return fill({2, -1, -2, 2}, 2);  // alpha_1 long
    case CartanType::C2: return fill({2, -2, -1, 2}, 2);  // alpha_1 short
    case CartanType::G2: return fill({2, -1, -3, 2}, 2);  // alpha_1 long
    case CartanType::A3: return fill({2, -1, 0, -1, 2, -1, 0, -1, 2}, 3);
  }
  throw UsageError("bad Cartan type");
}

struct VecILess {
  bool operator()(const VecI& a, const VecI& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return vec_lex_less(a, b);
  }
};

}  // namespace

RootSystem RootSystem::build(CartanType t) {
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix(t);
  rs.rank_ = static_cast<int>(rs.cartan_.rows());
  rs.build_roots();
  rs.build_weyl();
  rs.build_chambers();
  rs.build_psi();
  rs.build_alcove();
  return rs;
}

void RootSystem::build_roots() {
  const int r = rank_;
  // Closure of the simple roots under simple reflections, tracking coroots.
  std::map<VecI, VecI, VecILess> seen;  // coords -> coroot coords
  std::vector<VecI> queue;
  for (int i = 0; i < r; ++i) {
    VecI c = VecI::Zero(r), cr = VecI::Zero(r);
    c[i] = 1;
    cr[i] = 1;
    seen.emplace(c, cr);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    VecI c = queue.back();
    queue.pop_back();
    VecI cr = seen.at(c);
    for (int i = 0; i < r; ++i) {
      // s_i(alpha) = alpha - <alpha, coroot_i> alpha_i, and the coroot moves
      // by the transposed pairing.
      VecI c2 = c;
      c2[i] -= (cartan_ * c)[i];
      VecI cr2 = cr;
      cr2[i] -= (cartan_.transpose() * cr)[i];
      if (seen.emplace(c2, cr2).second) queue.push_back(c2);
    }
  }

  std::vector<Root> roots;
  for (auto& [c, cr] : seen) {
    Root rt;
    rt.coords = c;
    rt.coroot = cr;
    rt.weights = cartan_ * c;
    rt.height = c.sum();
    rt.positive = rt.height > 0;  // every root has all-nonneg or all-nonpos coords
    roots.push_back(rt);
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.positive != b.positive) return a.positive;
    if (a.height != b.height) return a.height < b.height;
    return vec_lex_less(a.coords, b.coords);
  });
  roots_ = std::move(roots);
  for (int i = 0; i < num_roots(); ++i) {
    VecI neg = -roots_[static_cast<std::size_t>(i)].coords;
    for (int j = 0; j < num_roots(); ++j) {
      if (vec_eq<Int>(roots_[static_cast<std::size_t>(j)].coords, neg))
        roots_[static_cast<std::size_t>(i)].negative = j;
    }
  }
  simple_roots_.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    VecI e = VecI::Zero(r);
    e[i] = 1;
    simple_roots_[static_cast<std::size_t>(i)] = root_index(e);
  }
  int best = -1;
  for (int i = 0; i < num_roots(); ++i) {
    const Root& rt = roots_[static_cast<std::size_t>(i)];
    if (!rt.positive) continue;
    if (best < 0 || rt.height > roots_[static_cast<std::size_t>(best)].height) best = i;
  }
  highest_root_ = best;
  for (int i = 0; i < rank_; ++i) {
    if ((roots_[static_cast<std::size_t>(best)].weights)[i] < 0)
      throw InvariantViolation("highest root is not dominant");
  }
}

int RootSystem::root_index(const VecI& coords) const {
  for (int i = 0; i < num_roots(); ++i)
    if (vec_eq<Int>(roots_[static_cast<std::size_t>(i)].coords, coords)) return i;
  return -1;
}

void RootSystem::build_weyl() {
  const int r = rank_;
  std::vector<MatI> gen_pts, gen_rts;
  for (int i = 0; i < r; ++i) {
    MatI sp = MatI::Identity(r, r), sr = MatI::Identity(r, r);
    for (int c = 0; c < r; ++c) {
      sp(i, c) -= cartan_(c, i);  // s_i on points: d - (A^T d)_i e_i
      sr(i, c) -= cartan_(i, c);  // s_i on roots:  c - (A c)_i e_i
    }
    gen_pts.push_back(sp);
    gen_rts.push_back(sr);
  }

  std::map<VecI, int, VecILess> index_of;  // flattened point matrix -> index
  auto flat = [r](const MatI& m) {
    VecI v(r * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) v[i * r + j] = m(i, j);
    return v;
  };

  WeylElt id;
  id.on_points = MatI::Identity(r, r);
  id.on_roots = MatI::Identity(r, r);
  weyl_.clear();
  weyl_.push_back(id);
  index_of.emplace(flat(id.on_points), 0);

  // Breadth-first by right multiplication; scanning parents in creation order
  // and generators ascending yields the ShortLex reduced word per element.
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      MatI mp = weyl_[head].on_points * gen_pts[static_cast<std::size_t>(i)];
      if (index_of.count(flat(mp))) continue;
      WeylElt e;
      e.on_points = mp;
      e.on_roots = weyl_[head].on_roots * gen_rts[static_cast<std::size_t>(i)];
      e.word = weyl_[head].word;
      e.word.push_back(i);
      e.length = static_cast<int>(e.word.size());
      index_of.emplace(flat(mp), static_cast<int>(weyl_.size()));
      weyl_.push_back(std::move(e));
    }
  }

  const int n = weyl_order();
  for (auto& e : weyl_) {
    e.root_perm.resize(static_cast<std::size_t>(num_roots()));
    for (int rt = 0; rt < num_roots(); ++rt) {
      VecI img = e.on_roots * roots_[static_cast<std::size_t>(rt)].coords;
      int idx = root_index(img);
      if (idx < 0) throw InvariantViolation("Weyl element does not permute the roots");
      e.root_perm[static_cast<std::size_t>(rt)] = idx;
    }
  }
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MatI m = weyl(a).on_points * weyl(b).on_points;
      mult_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] = index_of.at(flat(m));
    }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (weyl_mult(a, b) == 0) weyl_[static_cast<std::size_t>(a)].inverse = b;
  }
  simple_refl_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    simple_refl_[static_cast<std::size_t>(i)] = index_of.at(flat(gen_pts[static_cast<std::size_t>(i)]));
  root_refl_.resize(static_cast<std::size_t>(num_roots()));
  for (int rt = 0; rt < num_roots(); ++rt) {
    const Root& rr = roots_[static_cast<std::size_t>(rt)];
    MatI s = MatI::Identity(r, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) s(a, b) -= rr.coroot[a] * rr.weights[b];
    root_refl_[static_cast<std::size_t>(rt)] = index_of.at(flat(s));
  }
  longest_ = 0;
  for (int u = 0; u < n; ++u)
    if (weyl(u).length > weyl(longest_).length) longest_ = u;
}

void RootSystem::build_chambers() {
  chambers_.resize(static_cast<std::size_t>(weyl_order()));
  for (int u = 0; u < weyl_order(); ++u) {
    Chamber& ch = chambers_[static_cast<std::size_t>(u)];
    ch.u = u;
    for (int rt = 0; rt < num_roots(); ++rt) {
      if (roots_[static_cast<std::size_t>(rt)].positive)
        ch.positive |= RootMask(1) << act_root(u, rt);
    }
    for (int i = 0; i < rank_; ++i)
      ch.simple_roots.push_back(act_root(u, simple_root(i)));
  }
}

void RootSystem::build_psi() {
  const int r = rank_;
  MatR cartan_t_inv = inverse_exact(to_rat(MatI(cartan_.transpose())));
  fund_coweights_.clear();
  for (int i = 0; i < r; ++i) fund_coweights_.push_back(cartan_t_inv.col(i));

  // Orbit of the base fundamental weights; weight coordinates transform by
  // the transpose-inverse point action.
  psi_.clear();
  psi_orbit_.assign(static_cast<std::size_t>(weyl_order()) * static_cast<std::size_t>(r), -1);
  std::map<VecI, int, VecILess> psi_of_weight;
  for (int u = 0; u < weyl_order(); ++u) {
    MatI wmat = weyl(weyl_inverse(u)).on_points.transpose();
    for (int i = 0; i < r; ++i) {
      VecI base = VecI::Zero(r);
      base[i] = 1;
      VecI img = wmat * base;
      auto it = psi_of_weight.find(img);
      int idx;
      if (it == psi_of_weight.end()) {
        PsiData pd;
        pd.weight = img;
        pd.coweight = act_point(u, fund_coweights_[static_cast<std::size_t>(i)]);
        idx = static_cast<int>(psi_.size());
        psi_of_weight.emplace(img, idx);
        psi_.push_back(std::move(pd));
      } else {
        idx = it->second;
        if (!vec_eq<Rat>(psi_[static_cast<std::size_t>(idx)].coweight,
                         act_point(u, fund_coweights_[static_cast<std::size_t>(i)])))
          throw InvariantViolation("fundamental weight and coweight orbits disagree");
      }
      psi_orbit_[static_cast<std::size_t>(u) * static_cast<std::size_t>(r) +
                 static_cast<std::size_t>(i)] = idx;
    }
  }

  for (int u = 0; u < weyl_order(); ++u) {
    Chamber& ch = chambers_[static_cast<std::size_t>(u)];
    ch.psi.clear();
    for (int i = 0; i < r; ++i) ch.psi.push_back(psi_orbit(u, i));
  }

  for (int p = 0; p < num_psi(); ++p) {
    PsiData& pd = psi_[static_cast<std::size_t>(p)];
    for (int rt = 0; rt < num_roots(); ++rt) {
      Rat v = pair(rt, pd.coweight);
      if (v.sign() >= 0) pd.phi_of_psi |= RootMask(1) << rt;
      if (v.sign() == 0) pd.phi_perp |= RootMask(1) << rt;
    }
    for (int u = 0; u < weyl_order(); ++u) {
      const Chamber& ch = chambers_[static_cast<std::size_t>(u)];
      if (std::find(ch.psi.begin(), ch.psi.end(), p) != ch.psi.end())
        pd.chambers_containing.push_back(u);
    }
    pd.base_chamber = pd.chambers_containing.front();  // W is in ShortLex order
    pd.perp_positive = chambers_[static_cast<std::size_t>(pd.base_chamber)].positive & pd.phi_perp;

    // Simple roots of the subsystem: positives not expressible as a sum of
    // two subsystem positives.
    std::vector<int> perp_pos;
    for (int rt = 0; rt < num_roots(); ++rt)
      if (pd.perp_positive & (RootMask(1) << rt)) perp_pos.push_back(rt);
    for (int rt : perp_pos) {
      bool decomposable = false;
      for (int a : perp_pos)
        for (int b : perp_pos) {
          VecI sum = roots_[static_cast<std::size_t>(a)].coords +
                     roots_[static_cast<std::size_t>(b)].coords;
          if (vec_eq<Int>(sum, roots_[static_cast<std::size_t>(rt)].coords)) decomposable = true;
        }
      if (!decomposable) pd.perp_simples.push_back(rt);
    }

    // Components of the subsystem Dynkin diagram and their highest roots.
    const int ns = static_cast<int>(pd.perp_simples.size());
    std::vector<int> comp(static_cast<std::size_t>(ns));
    std::iota(comp.begin(), comp.end(), 0);
    for (int a = 0; a < ns; ++a)
      for (int b = 0; b < ns; ++b) {
        Int pr = pair(pd.perp_simples[static_cast<std::size_t>(a)],
                      roots_[static_cast<std::size_t>(pd.perp_simples[static_cast<std::size_t>(b)])].coroot);
        if (a != b && pr != 0) {
          int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
          for (auto& c : comp)
            if (c == cb) c = ca;
        }
      }
    // Expand each subsystem positive in the subsystem simple basis.
    std::set<int> comps(comp.begin(), comp.end());
    for (int c : comps) {
      int best = -1;
      Int best_height = -1;
      for (int rt : perp_pos) {
        MatR basis(r, ns);
        for (int j = 0; j < ns; ++j)
          basis.col(j) = to_rat(VecI(roots_[static_cast<std::size_t>(pd.perp_simples[static_cast<std::size_t>(j)])].coords));
        auto sol = solve_exact(basis, to_rat(VecI(roots_[static_cast<std::size_t>(rt)].coords)));
        if (!sol) throw InvariantViolation("subsystem positive outside simple span");
        Int height = 0;
        int support_comp = -1;
        bool mixed = false;
        for (int j = 0; j < ns; ++j) {
          if (!(*sol)[j].is_integer() || (*sol)[j].sign() < 0)
            throw InvariantViolation("subsystem positive is not a nonnegative integer combination");
          if ((*sol)[j].sign() > 0) {
            height += (*sol)[j].num();
            if (support_comp < 0) support_comp = comp[static_cast<std::size_t>(j)];
            else if (support_comp != comp[static_cast<std::size_t>(j)]) mixed = true;
          }
        }
        if (mixed) throw InvariantViolation("subsystem root with mixed component support");
        if (support_comp == c && height > best_height) {
          best_height = height;
          best = rt;
        }
      }
      if (best >= 0) pd.perp_highest.push_back(best);
    }

    // W^psi: closure of the subsystem reflections inside W.
    std::set<int> levi{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int rt = 0; rt < num_roots(); ++rt) {
        if (!(pd.phi_perp & (RootMask(1) << rt))) continue;
        int v = weyl_mult(reflection_of_root(rt), u);
        if (levi.insert(v).second) stack.push_back(v);
      }
    }
    pd.levi_weyl.assign(levi.begin(), levi.end());
    if (pd.levi_weyl.size() != pd.chambers_containing.size())
      throw InvariantViolation("Levi Weyl group size does not match chamber count");
  }
}

int RootSystem::psi_index(const VecI& weight) const {
  for (int p = 0; p < num_psi(); ++p)
    if (vec_eq<Int>(psi_[static_cast<std::size_t>(p)].weight, weight)) return p;
  return -1;
}

int RootSystem::levi_wall_neighbor(int p, int u, int beta) const {
  const PsiData& pd = psi(p);
  RootMask cur = chamber(u).positive & pd.phi_perp;
  RootMask target = 0;
  int srefl = reflection_of_root(beta);
  for (int rt = 0; rt < num_roots(); ++rt) {
    if (cur & (RootMask(1) << rt)) target |= RootMask(1) << act_root(srefl, rt);
  }
  for (int v : pd.chambers_containing) {
    if ((chamber(v).positive & pd.phi_perp) == target) return v;
  }
  throw InvariantViolation("no chamber realizes the reflected Levi chamber");
}

Rat RootSystem::pair(int root, const VecR& point) const {
  const VecI& w = roots_[static_cast<std::size_t>(root)].weights;
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) acc += Rat(w[i]) * point[i];
  return acc;
}

Rat RootSystem::pair_weight(const VecI& weight, const VecR& point) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) acc += Rat(weight[i]) * point[i];
  return acc;
}

void RootSystem::build_alcove() {
  const int r = rank_;
  const Root& theta = roots_[static_cast<std::size_t>(highest_root_)];
  alcove_vertices_.clear();
  alcove_vertices_.push_back(VecR::Zero(r));
  for (int i = 0; i < r; ++i) {
    VecR v = fund_coweights_[static_cast<std::size_t>(i)] / Rat(theta.coords[i]);
    alcove_vertices_.push_back(v);
  }
  // Point of A0 with equal value on every wall; Coxeter number denominator.
  Int h = 1 + theta.height;
  VecR x0 = VecR::Zero(r);
  for (int i = 0; i < r; ++i) x0 += fund_coweights_[static_cast<std::size_t>(i)];
  alcove_center_ = x0 / Rat(h);
  alcove_denom_ = 1;
  for (int i = 0; i < r; ++i)
    alcove_denom_ = std::lcm(alcove_denom_, alcove_center_[i].den());

  // Minimal regular dominant vector by (coordinate sum, lex).
  for (Int total = 1; total <= 64 && min_reg_dominant_.size() == 0; ++total) {
    std::vector<VecI> level;
    VecI cur = VecI::Zero(r);
    std::function<void(int, Int)> rec = [&](int pos, Int left) {
      if (pos == r - 1) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, total);
    std::sort(level.begin(), level.end(), vec_lex_less);
    for (const VecI& cand : level) {
      if (is_regular_dominant(cand)) {
        min_reg_dominant_ = cand;
        break;
      }
    }
  }
  if (min_reg_dominant_.size() == 0)
    throw InvariantViolation("no regular dominant vector found");
}

bool RootSystem::is_regular_dominant(const VecI& x) const {
  VecI p = cartan_.transpose() * x;
  for (int i = 0; i < rank_; ++i)
    if (p[i] < 1) return false;
  return true;
}

}  // namespace alcove
