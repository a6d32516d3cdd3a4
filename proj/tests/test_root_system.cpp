#include <doctest.h>

#include <algorithm>
#include <set>

#include "alcove/root_system.hpp"

using namespace alcove;

namespace {

const std::vector<CartanType> kAllTypes = {CartanType::A1, CartanType::A2, CartanType::B2,
                                           CartanType::C2, CartanType::G2, CartanType::A3};

}  // namespace

TEST_CASE("root counts and Weyl group orders per type") {
  struct Expect {
    CartanType t;
    int roots, weyl;
  };
  const Expect table[] = {{CartanType::A1, 2, 2},  {CartanType::A2, 6, 6},
                          {CartanType::B2, 8, 8},  {CartanType::C2, 8, 8},
                          {CartanType::G2, 12, 12}, {CartanType::A3, 12, 24}};
  for (const Expect& e : table) {
    RootSystem rs = RootSystem::build(e.t);
    CHECK(rs.num_roots() == e.roots);
    CHECK(rs.weyl_order() == e.weyl);
  }
  CHECK_THROWS_AS(parse_cartan_type("E8"), UsageError);
}

TEST_CASE("A2 Cartan pairing") {
  RootSystem rs = RootSystem::build(CartanType::A2);
  // <alpha_1, coroot_2> = -1
  VecI e2 = VecI::Zero(2);
  e2[1] = 1;
  CHECK(rs.pair(rs.simple_root(0), e2) == -1);
}

TEST_CASE("reflections permute roots and pairings are Weyl invariant") {
  for (CartanType t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    for (int rt = 0; rt < rs.num_roots(); ++rt) {
      // <alpha, coroot(alpha)> = 2
      CHECK(rs.pair(rt, rs.root(rt).coroot) == 2);
      int s = rs.reflection_of_root(rt);
      // s_alpha maps alpha to -alpha
      CHECK(rs.act_root(s, rt) == rs.root(rt).negative);
    }
    // Pairing invariance <u(alpha), u(x)> = <alpha, x>
    for (int u = 0; u < rs.weyl_order(); ++u)
      for (int rt = 0; rt < rs.num_roots(); ++rt) {
        VecI x = rs.root(rt).coroot;  // any lattice vector
        CHECK(rs.pair(rs.act_root(u, rt), rs.act_point(u, x)) == rs.pair(rt, x));
      }
  }
}

TEST_CASE("chamber data transforms equivariantly") {
  for (CartanType t : {CartanType::A1, CartanType::A2, CartanType::B2}) {
    RootSystem rs = RootSystem::build(t);
    for (int u = 0; u < rs.weyl_order(); ++u) {
      const Chamber& ch = rs.chamber(u);
      CHECK(static_cast<int>(ch.simple_roots.size()) == rs.rank());
      // Phi_C and -Phi_C partition the roots
      int count = 0;
      for (int rt = 0; rt < rs.num_roots(); ++rt) {
        bool pos = ch.positive & (RootMask(1) << rt);
        bool neg = ch.positive & (RootMask(1) << rs.root(rt).negative);
        CHECK(pos != neg);
        if (pos) ++count;
      }
      CHECK(count == rs.num_roots() / 2);
      // s_alpha(C) has simple roots s_alpha(Delta_C) for alpha in Delta_C
      for (int i = 0; i < rs.rank(); ++i) {
        int alpha = ch.simple_roots[static_cast<std::size_t>(i)];
        int v = rs.weyl_mult(rs.reflection_of_root(alpha), u);
        const Chamber& ch2 = rs.chamber(v);
        for (int j = 0; j < rs.rank(); ++j) {
          int img = rs.act_root(rs.reflection_of_root(alpha),
                                ch.simple_roots[static_cast<std::size_t>(j)]);
          bool found = false;
          for (int k = 0; k < rs.rank(); ++k)
            if (ch2.simple_roots[static_cast<std::size_t>(k)] == img) found = true;
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("A1 chamber examples") {
  RootSystem rs = RootSystem::build(CartanType::A1);
  const Chamber& c0 = rs.chamber(0);
  CHECK(rs.root(c0.simple_roots[0]).positive);
  const Chamber& c1 = rs.chamber(1);
  CHECK_FALSE(rs.root(c1.simple_roots[0]).positive);
  // Psi_{sC0} = {-psi}
  CHECK(rs.psi(c1.psi[0]).weight[0] == -1);
}

TEST_CASE("A2 chamber of s1") {
  RootSystem rs = RootSystem::build(CartanType::A2);
  int s1 = rs.simple_reflection(0);
  const Chamber& ch = rs.chamber(s1);
  // Phi_{s1 C0} = {-a1, a2, a1+a2}
  VecI m_a1(2), a2(2), a12(2);
  m_a1 << -1, 0;
  a2 << 0, 1;
  a12 << 1, 1;
  for (const VecI& v : {m_a1, a2, a12}) {
    int idx = rs.root_index(v);
    REQUIRE(idx >= 0);
    CHECK((ch.positive & (RootMask(1) << idx)) != 0);
  }
}

TEST_CASE("psi data: A1 and A2 examples") {
  RootSystem a1 = RootSystem::build(CartanType::A1);
  {
    int p = a1.psi_orbit(0, 0);
    const PsiData& pd = a1.psi(p);
    // Phi(psi) = {alpha}, Phi^psi empty
    CHECK(pd.phi_perp == 0);
    int count = 0;
    for (int rt = 0; rt < a1.num_roots(); ++rt)
      if (pd.phi_of_psi & (RootMask(1) << rt)) ++count;
    CHECK(count == 1);
  }
  RootSystem a2 = RootSystem::build(CartanType::A2);
  {
    int p = a2.psi_orbit(0, 0);  // varpi_1
    const PsiData& pd = a2.psi(p);
    CHECK(pd.chambers_containing.size() == 2);
    // Phi^psi = {+-alpha_2}
    int a2root = a2.simple_root(1);
    CHECK((pd.phi_perp & (RootMask(1) << a2root)) != 0);
    CHECK((pd.phi_perp & (RootMask(1) << a2.root(a2root).negative)) != 0);
    int count = 0;
    for (int rt = 0; rt < a2.num_roots(); ++rt)
      if (pd.phi_perp & (RootMask(1) << rt)) ++count;
    CHECK(count == 2);
  }
}

TEST_CASE("Psi is the Weyl orbit, deduplicated consistently") {
  for (CartanType t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    // |Psi| consistency with stabilizers: sum over psi of |chambers containing|
    // equals rank * |W|.
    std::size_t total = 0;
    for (int p = 0; p < rs.num_psi(); ++p)
      total += rs.psi(p).chambers_containing.size();
    CHECK(total == static_cast<std::size_t>(rs.rank()) *
                       static_cast<std::size_t>(rs.weyl_order()));
    // psi in Psi_C iff coweight in closure(C)
    for (int p = 0; p < rs.num_psi(); ++p) {
      const PsiData& pd = rs.psi(p);
      for (int u = 0; u < rs.weyl_order(); ++u) {
        bool listed = std::find(pd.chambers_containing.begin(), pd.chambers_containing.end(),
                                u) != pd.chambers_containing.end();
        bool closure = true;
        for (int rt = 0; rt < rs.num_roots(); ++rt) {
          if (!(rs.chamber(u).positive & (RootMask(1) << rt))) continue;
          if (rs.pair(rt, pd.coweight).sign() < 0) closure = false;
        }
        CHECK(listed == closure);
      }
    }
  }
}

TEST_CASE("Levi subsystem is a root system with matching chambers") {
  for (CartanType t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    for (int p = 0; p < rs.num_psi(); ++p) {
      const PsiData& pd = rs.psi(p);
      // Phi^psi closed under its reflections
      for (int a = 0; a < rs.num_roots(); ++a) {
        if (!(pd.phi_perp & (RootMask(1) << a))) continue;
        for (int b = 0; b < rs.num_roots(); ++b) {
          if (!(pd.phi_perp & (RootMask(1) << b))) continue;
          int img = rs.act_root(rs.reflection_of_root(a), b);
          CHECK((pd.phi_perp & (RootMask(1) << img)) != 0);
        }
      }
      // For each chamber containing psi, Phi_C /\ Phi^psi is a positive system
      for (int u : pd.chambers_containing) {
        RootMask mask = rs.chamber(u).positive & pd.phi_perp;
        for (int a = 0; a < rs.num_roots(); ++a) {
          if (!(pd.phi_perp & (RootMask(1) << a))) continue;
          bool pos = mask & (RootMask(1) << a);
          bool neg = mask & (RootMask(1) << rs.root(a).negative);
          CHECK(pos != neg);
        }
      }
      // levi_chamber map is a bijection onto subsystem chambers
      std::set<RootMask> images;
      for (int u : pd.chambers_containing)
        images.insert(rs.chamber(u).positive & pd.phi_perp);
      CHECK(images.size() == pd.chambers_containing.size());
      CHECK(images.size() == pd.levi_weyl.size());
    }
  }
}

TEST_CASE("alcove data") {
  for (CartanType t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    // x0 takes the same positive value on all walls of A0
    const VecR& x0 = rs.alcove_center();
    Rat v = rs.pair(rs.simple_root(0), x0);
    CHECK(v.sign() > 0);
    for (int i = 1; i < rs.rank(); ++i) CHECK(rs.pair(rs.simple_root(i), x0) == v);
    CHECK(Rat(1) - rs.pair(rs.highest_root(), x0) == v);
    // vertices: wall values vanish appropriately
    CHECK(rs.alcove_vertices().size() == static_cast<std::size_t>(rs.rank()) + 1);
  }
}
