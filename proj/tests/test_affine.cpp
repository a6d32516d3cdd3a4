#include <doctest.h>

#include <random>

#include "alcove/affine.hpp"

using namespace alcove;

TEST_CASE("composition law and inverses") {
  RootSystem rs = RootSystem::build(CartanType::A2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> coord(-3, 3);
  auto random_elem = [&] {
    VecI mu(2);
    mu << coord(rng), coord(rng);
    return AffElem{mu, static_cast<int>(rng() % 6)};
  };
  for (int k = 0; k < 50; ++k) {
    AffElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(aff_mult(rs, aff_mult(rs, a, b), c) == aff_mult(rs, a, aff_mult(rs, b, c)));
    CHECK(aff_mult(rs, a, aff_inverse(rs, a)) == aff_identity(rs));
    // action on V agrees with composition
    VecR x = to_rat(c.mu);
    VecR lhs = aff_apply(rs, aff_mult(rs, a, b), x);
    VecR rhs = aff_apply(rs, a, aff_apply(rs, b, x));
    CHECK(vec_eq<Rat>(lhs, rhs));
  }
}

TEST_CASE("action on affine roots") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  int alpha = rs.simple_root(0);
  VecI ac(1);
  ac << 1;
  // t_acheck (alpha, 0) = (alpha, -2)
  AffRoot img = aff_act_root(rs, aff_translation(rs, ac), AffRoot{alpha, 0});
  CHECK(img.root == alpha);
  CHECK(img.level == -2);
  // identity fixes (alpha, 5)
  AffRoot id = aff_act_root(rs, aff_identity(rs), AffRoot{alpha, 5});
  CHECK(id.root == alpha);
  CHECK(id.level == 5);
  // s (alpha, 1) = (-alpha, 1)
  AffRoot srefl = aff_act_root(rs, aff_finite(rs, 1), AffRoot{alpha, 1});
  CHECK(srefl.root == rs.root(alpha).negative);
  CHECK(srefl.level == 1);
  // w(a)(x) = a(w^{-1} x) on the alcove center
  RootSystem b2 = RootSystem::build(CartanType::B2);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    VecI mu(2);
    mu << static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2;
    AffElem w{mu, static_cast<int>(rng() % 8)};
    AffRoot a{static_cast<int>(rng() % 8), static_cast<Int>(rng() % 5) - 2};
    Rat lhs = aff_root_value(b2, aff_act_root(b2, w, a), b2.alcove_center());
    Rat rhs = aff_root_value(b2, a, aff_apply(b2, aff_inverse(b2, w), b2.alcove_center()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("affine reflections") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  int alpha = rs.simple_root(0);
  // (alpha, 0) -> (0, s)
  AffElem r0 = aff_reflection(rs, AffRoot{alpha, 0});
  CHECK(r0.mu.isZero());
  CHECK(r0.u == rs.reflection_of_root(alpha));
  // (alpha, -1) -> (acheck, s)
  AffElem r1 = aff_reflection(rs, AffRoot{alpha, -1});
  CHECK(r1.mu[0] == 1);
  CHECK(r1.u == rs.reflection_of_root(alpha));
  // reflections are involutions
  RootSystem g2 = RootSystem::build(CartanType::G2);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    AffRoot a{static_cast<int>(rng() % 12), static_cast<Int>(rng() % 7) - 3};
    AffElem r = aff_reflection(g2, a);
    CHECK(aff_mult(g2, r, r) == aff_identity(g2));
    // fixed hyperplane: the affine function vanishes at the reflected center iff
    // it vanishes at the center... check value negation instead
    Rat v = aff_root_value(g2, a, g2.alcove_center());
    Rat v2 = aff_root_value(g2, a, aff_apply(g2, r, g2.alcove_center()));
    CHECK(v2 == -v);
  }
}

TEST_CASE("length equals inversion count") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  CHECK(aff_length(rs, aff_identity(rs)) == 0);
  VecI ac(1);
  ac << 1;
  CHECK(aff_length(rs, aff_translation(rs, ac)) == 2);
  for (Int n = -2; n <= 3; ++n) {
    AffElem w = aff_mult(rs, aff_translation(rs, VecI(n * ac)), aff_finite(rs, 1));
    Int expect = n > 0 ? 2 * n - 1 : 1 - 2 * n;
    CHECK(aff_length(rs, w) == expect);
  }
  // length is a brute-force inversion count on A2: cross-check against the
  // number of positive affine roots sent negative, enumerated by level.
  RootSystem a2 = RootSystem::build(CartanType::A2);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    VecI mu(2);
    mu << static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 7) - 3;
    AffElem w{mu, static_cast<int>(rng() % 6)};
    int brute = 0;
    for (int rt = 0; rt < a2.num_roots(); ++rt) {
      for (Int n = -20; n <= 20; ++n) {
        AffRoot a{rt, n};
        if (!aff_root_positive(a2, a)) continue;
        if (!aff_root_positive(a2, aff_act_root(a2, w, a))) ++brute;
      }
    }
    CHECK(aff_length(a2, w) == brute);
  }
}

TEST_CASE("reduced words multiply back and match length") {
  for (CartanType t : {CartanType::A2, CartanType::B2}) {
    RootSystem rs = RootSystem::build(t);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 25; ++k) {
      VecI mu(2);
      mu << static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2;
      AffElem w{mu, static_cast<int>(rng() % rs.weyl_order())};
      auto word = aff_reduced_word(rs, w);
      CHECK(static_cast<int>(word.size()) == aff_length(rs, w));
      AffElem prod = aff_identity(rs);
      for (int i : word) prod = aff_mult(rs, prod, aff_generator(rs, i));
      CHECK(prod == w);
    }
  }
}

TEST_CASE("Bruhat order basics") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  BruhatOrder bo(rs);
  VecI ac(1);
  ac << 1;
  AffElem t1 = aff_translation(rs, ac);
  AffElem t2 = aff_translation(rs, VecI(2 * ac));
  CHECK(bo.leq(t1, t2));
  AffElem s0 = aff_generator(rs, 0), s1 = aff_generator(rs, 1);
  CHECK_FALSE(bo.leq(s0, s1));
  CHECK_FALSE(bo.leq(s1, s0));
  // interval of t_acheck = {e, s0, s1, t}
  auto iv = bo.lower_interval(t1);
  REQUIRE(iv.size() == 4);
  AffElemSet set(iv.begin(), iv.end());
  CHECK(set.count(aff_identity(rs)));
  CHECK(set.count(s0));
  CHECK(set.count(s1));
  CHECK(set.count(t1));
  // e <= w always
  RootSystem a2 = RootSystem::build(CartanType::A2);
  BruhatOrder bo2(a2);
  std::mt19937_64 rng(19);
  for (int k = 0; k < 25; ++k) {
    VecI mu(2);
    mu << static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2;
    AffElem w{mu, static_cast<int>(rng() % 6)};
    CHECK(bo2.leq(aff_identity(a2), w));
  }
}

TEST_CASE("in_chamber examples") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  CHECK(in_chamber(rs, aff_identity(rs), 0));
  VecI ac(1);
  ac << 1;
  CHECK(in_chamber(rs, aff_translation(rs, ac), 0));
  CHECK_FALSE(in_chamber(rs, aff_finite(rs, 1), 0));
}

TEST_CASE("psi factorization invariants") {
  for (CartanType t : {CartanType::A2, CartanType::B2, CartanType::A3}) {
    RootSystem rs = RootSystem::build(t);
    std::mt19937_64 rng(23);
    for (int p = 0; p < rs.num_psi(); ++p) {
      for (int k = 0; k < 20; ++k) {
        VecI mu(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) mu[i] = static_cast<Int>(rng() % 5) - 2;
        AffElem w{mu, static_cast<int>(rng() % rs.weyl_order())};
        PsiFactorization f = psi_factorize(rs, p, w);
        CHECK(aff_mult(rs, f.levi, f.min) == w);
        CHECK(in_min_coset(rs, p, f.min));
        CHECK(in_levi_affine(rs, p, f.levi));
        // Uniqueness: the representative is a class invariant.
        for (int extra = 0; extra < 3; ++extra) {
          std::vector<AffRoot> simples = levi_simple_affine_roots(rs, p);
          if (simples.empty()) break;
          AffRoot a = simples[rng() % simples.size()];
          AffElem v = aff_mult(rs, aff_reflection(rs, a), w);
          CHECK(psi_factorize(rs, p, v).min == f.min);
        }
      }
    }
  }
}

TEST_CASE("psi factorization minimality against a coset scan") {
  RootSystem rs = RootSystem::build(CartanType::A2);
  std::mt19937_64 rng(97);
  for (int p = 0; p < rs.num_psi(); ++p) {
    const PsiData& pd = rs.psi(p);
    // Levi elements in a small window
    std::vector<AffElem> levi;
    for (Int k = -2; k <= 2; ++k) {
      VecI lam = VecI::Zero(2);
      for (int j : pd.perp_simples) lam += k * rs.root(j).coroot;
      for (int u : pd.levi_weyl) levi.push_back(AffElem{lam, u});
    }
    for (int t = 0; t < 10; ++t) {
      VecI mu(2);
      mu << static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2;
      AffElem w{mu, static_cast<int>(rng() % 6)};
      AffElem rep = psi_factorize(rs, p, w).min;
      // Exactly one element of the coset window is the minimal representative.
      for (const AffElem& v : levi) {
        AffElem cand = aff_mult(rs, v, rep);
        CHECK(in_min_coset(rs, p, cand) == (cand == rep));
      }
    }
  }
}

TEST_CASE("A1 psi factorization is trivial") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  VecI ac(1);
  ac << 1;
  AffElem w = aff_mult(rs, aff_translation(rs, ac), aff_finite(rs, 1));
  PsiFactorization f = psi_factorize(rs, 0, w);
  CHECK(f.levi == aff_identity(rs));
  CHECK(f.min == w);
}

TEST_CASE("levi reflection words reproduce their element") {
  RootSystem rs = RootSystem::build(CartanType::A3);
  std::mt19937_64 rng(29);
  for (int p = 0; p < rs.num_psi(); ++p) {
    const PsiData& pd = rs.psi(p);
    for (int k = 0; k < 8; ++k) {
      // random levi element: lattice part from subsystem coroots
      VecI lam = VecI::Zero(3);
      for (int j : pd.perp_simples)
        lam += (static_cast<Int>(rng() % 3) - 1) * rs.root(j).coroot;
      int u = pd.levi_weyl[rng() % pd.levi_weyl.size()];
      AffElem q{lam, u};
      REQUIRE(in_levi_affine(rs, p, q));
      auto word = levi_reflection_word(rs, p, q);
      AffElem prod = aff_identity(rs);
      for (const AffRoot& r : word) prod = aff_mult(rs, aff_reflection(rs, r), prod);
      CHECK(prod == q);
    }
  }
}
