#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "grp/classify.hpp"
#include "grp/group.hpp"
#include "grp/morphisms.hpp"

using namespace grp;

namespace {

FiniteGroup s3() { return from_generators(PermSpec{3, {{1, 0, 2}, {1, 2, 0}}}, 10); }

// Independent oracle: all total maps fixing the identity, filtered by the
// homomorphism property on every pair. Exponential in |G|; used at order 8.
long brute_force_endomorphism_count(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> f(n, 0);
  long count = 0;
  while (true) {
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n; ++b)
        if (f[g.mul(a, b)] != g.mul(f[a], f[b])) {
          hom = false;
          break;
        }
    if (hom) ++count;
    int pos = 1;
    while (pos < n && f[pos] == n - 1) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  return count;
}

}  // namespace

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(cyclic(5)).size() == 1);
  CHECK(minimal_generating_set(klein_four()).size() == 2);
  SECTION("no single element generates D8") {
    FiniteGroup d8 = dihedral(4);
    for (int x = 0; x < 8; ++x)
      CHECK(subgroup_closure(d8, std::vector<int>{x}).count() < 8);
    CHECK(minimal_generating_set(d8).size() == 2);
  }
  CHECK(minimal_generating_set(cyclic(1)).empty());
  CHECK(minimal_generating_set(elementary_abelian(2, 4)).size() == 4);
  SECTION("result generates the group") {
    for (const FiniteGroup& g : {dihedral(6), quaternion8(), abelian_of_type({2, 4})})
      CHECK(subgroup_closure(g, minimal_generating_set(g)).count() == g.order());
  }
}

TEST_CASE("automorphism enumeration") {
  SECTION("Klein four-group has 6 automorphisms") {
    FiniteGroup v = klein_four();
    MapSet a = enumerate_automorphisms(v);
    CHECK(a.size() == 6);
    CHECK(a.complete);
  }
  SECTION("C6 x C2 has 12 automorphisms") {
    FiniteGroup g = direct_product(cyclic(6), cyclic(2));
    CHECK(enumerate_automorphisms(g).size() == 12);
  }
  SECTION("trivial group has one automorphism") {
    FiniteGroup triv = cyclic(1);
    CHECK(enumerate_automorphisms(triv).size() == 1);
  }
  SECTION("cap on elementary abelian 2^5, |GL(5,2)| computed as oracle") {
    long expected = 1;
    for (int i = 0; i < 5; ++i) expected *= (32 - (1 << i));
    CHECK(expected == 9999360);  // far above the default cap
    FiniteGroup big = elementary_abelian(2, 5);
    CHECK_THROWS_AS(enumerate_automorphisms(big, 20000), AutCapExceeded);
  }
  SECTION("every accepted map is an automorphism; the set is closed") {
    FiniteGroup d8 = dihedral(4);
    MapSet a = enumerate_automorphisms(d8);
    CHECK(a.size() == 8);
    std::set<std::vector<std::uint16_t>> images;
    for (const auto& m : a.maps) {
      CHECK(is_automorphism(m));
      images.insert(m.images);
    }
    for (const auto& m1 : a.maps) {
      for (const auto& m2 : a.maps) CHECK(images.count(compose(m1, m2).images) == 1);
      CHECK(images.count(inverse_map(m1).images) == 1);
    }
  }
}

TEST_CASE("endomorphism enumeration") {
  FiniteGroup c3 = cyclic(3), c2 = cyclic(2);
  CHECK(enumerate_endomorphisms(c3).size() == 3);
  CHECK(enumerate_endomorphisms(c2).size() == 2);
  SECTION("endomorphisms of C_n are the n power maps") {
    for (int n : {4, 5, 6, 8, 9, 12}) {
      FiniteGroup cn = cyclic(n);
      CHECK(enumerate_endomorphisms(cn).size() == n);
    }
  }
  SECTION("D8 count matches the exhaustive oracle") {
    FiniteGroup d8 = dihedral(4);
    MapSet e = enumerate_endomorphisms(d8);
    CHECK(long(e.size()) == brute_force_endomorphism_count(d8));
    for (const auto& m : e.maps) CHECK(is_homomorphism(m));
  }
  SECTION("cap") {
    FiniteGroup big = elementary_abelian(2, 5);
    CHECK_THROWS_AS(enumerate_endomorphisms(big, 1000), EndCapExceeded);
  }
}

TEST_CASE("inner automorphisms") {
  SECTION("abelian groups have only the identity") {
    FiniteGroup c12 = cyclic(12);
    MapSet inn = inner_automorphisms(c12);
    REQUIRE(inn.size() == 1);
    CHECK(inn.maps[0].images == identity_map(c12).images);
  }
  SECTION("sizes |G|/|Z(G)|") {
    FiniteGroup d8 = dihedral(4), sym3 = s3();
    CHECK(inner_automorphisms(d8).size() == 4);
    CHECK(inner_automorphisms(sym3).size() == 6);
    for (const FiniteGroup& g : {dihedral(4), quaternion8(), s3(), dihedral(6)})
      CHECK(inner_automorphisms(g).size() == std::size_t(g.order() / center(g).count()));
  }
  SECTION("inner maps fix every conjugacy class setwise") {
    FiniteGroup g = dihedral(6);
    auto classes = conjugacy_classes(g);
    for (const auto& m : inner_automorphisms(g).maps)
      for (const auto& cls : classes)
        for (int x : cls)
          CHECK(std::find(cls.begin(), cls.end(), m.images[x]) != cls.end());
  }
}

TEST_CASE("aut_as_group") {
  SECTION("Aut(C5) is cyclic of order 4") {
    FiniteGroup c5 = cyclic(5);
    AutGroup a = aut_as_group(enumerate_automorphisms(c5));
    REQUIRE(a.group.order() == 4);
    bool has_order4 = false;
    for (int x = 0; x < 4; ++x) has_order4 |= a.group.element_order(x) == 4;
    CHECK(has_order4);
    CHECK(a.maps[0].images == identity_map(c5).images);
  }
  SECTION("Aut(V) is nonabelian of order 6") {
    FiniteGroup v = klein_four();
    AutGroup a = aut_as_group(enumerate_automorphisms(v));
    CHECK(a.group.order() == 6);
    CHECK_FALSE(a.group.is_abelian());
  }
  SECTION("Aut(1) is trivial") {
    FiniteGroup triv = cyclic(1);
    CHECK(aut_as_group(enumerate_automorphisms(triv)).group.order() == 1);
  }
  SECTION("composition table matches map composition") {
    FiniteGroup g = dihedral(4);
    AutGroup a = aut_as_group(enumerate_automorphisms(g));
    for (int i = 0; i < a.group.order(); ++i)
      for (int j = 0; j < a.group.order(); ++j)
        CHECK(a.maps[a.group.mul(i, j)].images == compose(a.maps[i], a.maps[j]).images);
  }
}

TEST_CASE("orbit closures") {
  SECTION("identity map alone fixes everything") {
    FiniteGroup g = cyclic(6);
    MapSet ident{&g, MapKind::automorphisms, false, {identity_map(g)}};
    for (int x = 0; x < 6; ++x) CHECK(orbit_closure(g, x, ident).count() == 1);
  }
  SECTION("V: the involutions form one orbit") {
    FiniteGroup v = klein_four();
    MapSet a = enumerate_automorphisms(v);
    Bitmask orb = orbit_closure(v, 1, a);
    CHECK(orb.count() == 3);
    CHECK_FALSE(orb.test(0));
  }
  SECTION("D8: the two order-4 elements form one orbit") {
    FiniteGroup d8 = dihedral(4);
    MapSet a = enumerate_automorphisms(d8);
    int x4 = -1;
    for (int x = 0; x < 8; ++x)
      if (d8.element_order(x) == 4) {
        x4 = x;
        break;
      }
    Bitmask orb = orbit_closure(d8, x4, a);
    CHECK(orb.count() == 2);
    for (int y : orb.members()) CHECK(d8.element_order(y) == 4);
  }
  SECTION("complete aut orbits are unions of conjugacy classes") {
    FiniteGroup g = dihedral(6);
    MapSet a = enumerate_automorphisms(g);
    for (const auto& cls : conjugacy_classes(g)) {
      Bitmask orb = orbit_closure(g, cls[0], a);
      for (int x : cls) CHECK(orb.test(x));
    }
  }
}

TEST_CASE("psi factory") {
  SECTION("trivial phi gives the identity automorphism") {
    FiniteGroup a = cyclic(2), b = cyclic(2);
    FiniteGroup g = direct_product(a, b);
    GroupMap phi{&a, &b, {0, 0}};
    CHECK(psi_factory(g, phi).images == identity_map(g).images);
  }
  SECTION("V as C2 x C2: psi moves the first-factor mask") {
    FiniteGroup a = cyclic(2), b = cyclic(2);
    FiniteGroup g = direct_product(a, b);
    GroupMap phi{&a, &b, {0, 1}};  // the isomorphism between the factors
    GroupMap psi = psi_factory(g, phi);
    CHECK(psi.images[2] == 3);  // (1,0) -> (1,1)
    CHECK(is_automorphism(psi));
  }
  SECTION("C6 x C2 with phi the mod-2 projection") {
    FiniteGroup a = cyclic(6), b = cyclic(2);
    FiniteGroup g = direct_product(a, b);
    GroupMap phi{&a, &b, {0, 1, 0, 1, 0, 1}};
    GroupMap psi = psi_factory(g, phi);
    // fixes the C2-factor mask {0,1}, moves the C6-factor mask
    CHECK(psi.images[0] == 0);
    CHECK(psi.images[1] == 1);
    CHECK(psi.images[2] == 3);  // (1,0) -> (1,1)
    CHECK(is_automorphism(psi));
  }
  SECTION("an involution whenever the B factor has exponent 2") {
    FiniteGroup a = dihedral(3), b = klein_four();
    FiniteGroup g = direct_product(a, b);
    // phi: D6 -> V through the rotation/reflection sign
    std::vector<std::uint16_t> im(6);
    for (int x = 0; x < 6; ++x) im[x] = std::uint16_t(x < 3 ? 0 : 1);
    GroupMap phi{&a, &b, im};
    GroupMap psi = psi_factory(g, phi);
    CHECK(compose(psi, psi).images == identity_map(g).images);
  }
  SECTION("NotCentral when the image fails to centralize B") {
    FiniteGroup a = cyclic(2), b = dihedral(3);
    FiniteGroup g = direct_product(a, b);
    // send the involution to a reflection, which is not central in D6
    GroupMap phi{&a, &b, {0, 3}};
    CHECK_THROWS_AS(psi_factory(g, phi), NotCentral);
  }
}
