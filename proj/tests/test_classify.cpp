#include <catch2/catch_amalgamated.hpp>

#include "grp/classify.hpp"
#include "grp/group.hpp"

using namespace grp;

namespace {

FiniteGroup s3() { return from_generators(PermSpec{3, {{1, 0, 2}, {1, 2, 0}}}, 10); }
FiniteGroup s4() { return from_generators(PermSpec{4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}, 30); }
FiniteGroup a4() { return from_generators(PermSpec{4, {{1, 2, 0, 3}, {1, 0, 3, 2}}}, 20); }
FiniteGroup a5() {
  return from_generators(PermSpec{5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}}, 100);
}

void expect_mutations_detected(const FiniteGroup& g, const Verdict& v,
                               std::vector<Bitmask>* masks) {
  REQUIRE(v.truthy());
  REQUIRE_FALSE(certificate_error(g, v).has_value());
  for (std::size_t s = 0; s < masks->size(); ++s)
    for (int bit = 0; bit < g.order(); ++bit) {
      (*masks)[s].flip(bit);
      CHECK(certificate_error(g, v).has_value());
      (*masks)[s].flip(bit);
    }
  REQUIRE_FALSE(certificate_error(g, v).has_value());
}

}  // namespace

TEST_CASE("solvability") {
  CHECK(is_solvable(cyclic(24)).truthy());
  CHECK(is_solvable(s3()).truthy());
  CHECK(is_solvable(s4()).truthy());
  CHECK_FALSE(is_solvable(a5()).truthy());
  SECTION("A5 derived subgroup is A5 itself") {
    FiniteGroup g = a5();
    CHECK(derived_subgroup(g).count() == 60);
  }
  SECTION("derived-series certificate validates") {
    Verdict v = is_solvable(s4());
    CHECK_FALSE(certificate_error(s4(), v).has_value());
  }
}

TEST_CASE("supersolvability") {
  CHECK(is_supersolvable(dihedral(4)).truthy());
  CHECK(is_supersolvable(quaternion8()).truthy());
  CHECK(is_supersolvable(elementary_abelian(3, 3)).truthy());
  CHECK_FALSE(is_supersolvable(a4()).truthy());
  CHECK_FALSE(is_supersolvable(s4()).truthy());
  SECTION("GL(2,3), realized as Aut(C3 x C3), is not supersolvable") {
    FiniteGroup c33 = abelian_of_type({3, 3});
    AutGroup a = aut_as_group(enumerate_automorphisms(c33));
    REQUIRE(a.group.order() == 48);
    CHECK_FALSE(is_supersolvable(a.group).truthy());
  }
}

TEST_CASE("2-nilpotency and Sylow tower tails") {
  CHECK(is_2_nilpotent(s3()).truthy());
  CHECK(is_2_nilpotent(cyclic(15)).truthy());
  CHECK(is_2_nilpotent(direct_product(cyclic(7), cyclic(3))).truthy());
  CHECK_FALSE(is_2_nilpotent(s4()).truthy());
  SECTION("supersolvable groups have every tower tail") {
    for (const FiniteGroup& g : {s3(), dihedral(6), direct_product(s3(), cyclic(5))}) {
      REQUIRE(is_supersolvable(g).truthy());
      for (long n = 2; n <= 8; ++n) CHECK(has_sylow_tower_tail(g, n).truthy());
    }
  }
}

TEST_CASE("strictly p-closed") {
  CHECK(is_strictly_p_closed(dihedral(4), 2).truthy());
  CHECK(is_strictly_p_closed(cyclic(27), 3).truthy());
  CHECK(is_strictly_p_closed(s3(), 3).truthy());
  CHECK_FALSE(is_strictly_p_closed(s3(), 2).truthy());
  SECTION("2-groups are the only strictly 2-closed groups") {
    CHECK(is_strictly_p_closed(dihedral(8), 2).truthy());
    CHECK_FALSE(is_strictly_p_closed(cyclic(6), 2).truthy());
  }
  SECTION("certificate validates") {
    Verdict v = is_strictly_p_closed(s3(), 3);
    CHECK_FALSE(certificate_error(s3(), v).has_value());
  }
}

TEST_CASE("A-solvability chain search") {
  SECTION("trivial map set reduces to solvability") {
    for (const FiniteGroup& g : {s3(), dihedral(4), cyclic(12), a4()}) {
      MapSet ident{&g, MapKind::automorphisms, false, {identity_map(g)}};
      CHECK(is_A_solvable(g, ident).truthy() == is_solvable(g).truthy());
    }
    FiniteGroup g = a5();
    MapSet ident{&g, MapKind::automorphisms, false, {identity_map(g)}};
    CHECK_FALSE(is_A_solvable(g, ident).truthy());
  }
  SECTION("Klein four-group is not Aut-solvable (characteristically simple)") {
    FiniteGroup v = klein_four();
    CHECK_FALSE(is_A_solvable(v, enumerate_automorphisms(v)).truthy());
  }
  SECTION("D8 is Aut-solvable with factor orders [2,2,2]") {
    FiniteGroup d8 = dihedral(4);
    Verdict v = is_A_solvable(d8, enumerate_automorphisms(d8));
    REQUIRE(v.truthy());
    const auto& steps = v.cert->chain.steps;
    REQUIRE(steps.size() == 4);
    for (std::size_t i = 1; i < steps.size(); ++i)
      CHECK(steps[i].count() == 2 * steps[i - 1].count());
    CHECK_FALSE(certificate_error(d8, v).has_value());
  }
  SECTION("Inn-solvability agrees with supersolvability") {
    for (const FiniteGroup& g :
         {s3(), s4(), a4(), dihedral(6), quaternion8(), cyclic(30), a5(),
          direct_product(a4(), cyclic(2))})
      CHECK(is_A_solvable(g, inner_automorphisms(g)).truthy() == is_supersolvable(g).truthy());
  }
  SECTION("normal-in-G variant is at most the literal verdict") {
    for (const FiniteGroup& g : {dihedral(4), quaternion8(), abelian_of_type({2, 4})}) {
      MapSet a = enumerate_automorphisms(g);
      Verdict literal = is_A_solvable(g, a);
      Verdict normal = is_A_solvable(g, a, ChainSearchOptions{true});
      if (normal.truthy()) CHECK(literal.truthy());
    }
  }
}

TEST_CASE("ultrasolvability") {
  CHECK(is_ultrasolvable(cyclic(12)).truthy());
  CHECK(is_ultrasolvable(cyclic(1)).truthy());
  CHECK_FALSE(is_ultrasolvable(direct_product(cyclic(6), cyclic(2))).truthy());
  CHECK_FALSE(is_ultrasolvable(klein_four()).truthy());
  SECTION("Q8 is not ultrasolvable and Aut(Q8) has order 24") {
    FiniteGroup q8 = quaternion8();
    MapSet a = enumerate_automorphisms(q8);
    CHECK(a.size() == 24);  // not a 2-group, consistent with the 2-group corollary
    CHECK_FALSE(is_ultrasolvable(q8).truthy());
  }
  SECTION("abelian fast path agrees with the generic path") {
    for (const FiniteGroup& g :
         {cyclic(8), abelian_of_type({2, 4}), klein_four(), abelian_of_type({3, 9}),
          abelian_of_type({2, 4, 3}), elementary_abelian(2, 3), cyclic(45)}) {
      Verdict generic = is_ultrasolvable(g);
      Verdict fast = abelian_ultrasolvable_fastpath(g);
      REQUIRE_FALSE(generic.skipped());
      CHECK(generic.truthy() == fast.truthy());
      if (fast.truthy()) CHECK_FALSE(certificate_error(g, fast).has_value());
    }
  }
  SECTION("capped nonabelian input is skipped, capped abelian is decided") {
    FiniteGroup big = elementary_abelian(2, 5);
    Verdict v = is_ultrasolvable(big, 100);
    CHECK_FALSE(v.skipped());
    CHECK_FALSE(v.truthy());
    FiniteGroup d8 = dihedral(4);
    Verdict w = is_ultrasolvable(d8, try_enumerate_automorphisms(d8, 1));
    CHECK(w.skipped());
  }
}

TEST_CASE("full solvability") {
  CHECK(is_fully_solvable(cyclic(16)).truthy());
  CHECK(is_fully_solvable(abelian_of_type({2, 4})).truthy());
  CHECK_FALSE(is_fully_solvable(dihedral(4)).truthy());
  SECTION("fully solvable implies ultrasolvable on samples") {
    for (const FiniteGroup& g : {cyclic(12), abelian_of_type({2, 4}), dihedral(4),
                                 quaternion8(), abelian_of_type({3, 9})}) {
      Verdict f = is_fully_solvable(g), u = is_ultrasolvable(g);
      if (f.truthy()) CHECK(u.truthy());
    }
  }
}

TEST_CASE("aut_supersolvable") {
  CHECK(aut_supersolvable(cyclic(7)).truthy());
  CHECK(aut_supersolvable(klein_four()).truthy());
  CHECK_FALSE(aut_supersolvable(elementary_abelian(2, 3)).truthy());  // GL(3,2) is simple
  SECTION("abelian rule matches the generic path") {
    for (const FiniteGroup& g :
         {klein_four(), cyclic(8), abelian_of_type({2, 4}), elementary_abelian(3, 2),
          abelian_of_type({3, 9}), abelian_of_type({2, 4, 3})}) {
      Verdict generic = aut_supersolvable(g);
      REQUIRE_FALSE(generic.skipped());
      CHECK(abelian_aut_supersolvable_rule(abelian_invariants(g)) == generic.truthy());
    }
  }
}

TEST_CASE("abelian aut-supersolvability rule") {
  using Invs = std::map<long, std::vector<int>>;
  CHECK(abelian_aut_supersolvable_rule(Invs{{5, {1}}}));
  CHECK(abelian_aut_supersolvable_rule(Invs{{2, {1, 1}}}));  // the V exception
  CHECK(abelian_aut_supersolvable_rule(Invs{{2, {1, 1}}, {3, {1}}}));
  CHECK_FALSE(abelian_aut_supersolvable_rule(Invs{{3, {1, 1}}}));
  CHECK_FALSE(abelian_aut_supersolvable_rule(Invs{{2, {1, 1, 1}}}));
  CHECK_FALSE(abelian_aut_supersolvable_rule(Invs{{2, {2, 2}}}));
  CHECK(abelian_aut_supersolvable_rule(Invs{{2, {1, 2}}, {3, {1, 2}}}));
}

TEST_CASE("condition (2) of the main theorem") {
  SECTION("Klein four-group satisfies it with trivial H") {
    Verdict v = condition2(klein_four());
    CHECK(v.truthy());
    CHECK_FALSE(certificate_error(klein_four(), v).has_value());
  }
  SECTION("C3 x V satisfies it") {
    FiniteGroup g = direct_product(cyclic(3), klein_four());
    CHECK(condition2(g).truthy());
  }
  SECTION("C6 x C2 = C3 x V: not ultrasolvable but condition (2) holds") {
    FiniteGroup g = direct_product(cyclic(6), cyclic(2));
    CHECK_FALSE(is_ultrasolvable(g).truthy());
    Verdict v = condition2(g);
    REQUIRE(v.truthy());
    REQUIRE(v.cert);
    CHECK(v.cert->kind == CertKind::h_times_v);
    CHECK(v.cert->h_mask.count() == 3);
    CHECK_FALSE(certificate_error(g, v).has_value());
  }
  SECTION("failing cases") {
    CHECK_FALSE(condition2(elementary_abelian(2, 3)).truthy());  // 2-part 8
    CHECK_FALSE(condition2(elementary_abelian(2, 4)).truthy());
    CHECK_FALSE(condition2(a4()).truthy());
    CHECK_FALSE(condition2(direct_product(cyclic(6), klein_four())).truthy());  // H even
  }
  SECTION("C12 is ultrasolvable, so condition (2) holds via the first disjunct") {
    Verdict v = condition2(cyclic(12));
    CHECK(v.truthy());
    CHECK(v.cert->kind == CertKind::cyclic_chain);
  }
}

TEST_CASE("certificate mutation detection") {
  SECTION("ultrasolvable chain of D8") {
    FiniteGroup d8 = dihedral(4);
    Verdict v = is_ultrasolvable(d8);
    expect_mutations_detected(d8, v, &v.cert->chain.steps);
  }
  SECTION("canonical abelian chain of C2 x C4 x C3") {
    FiniteGroup g = abelian_of_type({2, 4, 3});
    Verdict v = abelian_ultrasolvable_fastpath(g);
    expect_mutations_detected(g, v, &v.cert->chain.steps);
  }
  SECTION("chief series of S3") {
    FiniteGroup g = s3();
    Verdict v = is_supersolvable(g);
    expect_mutations_detected(g, v, &v.cert->chief.steps);
  }
  SECTION("derived series of S4") {
    FiniteGroup g = s4();
    Verdict v = is_solvable(g);
    expect_mutations_detected(g, v, &v.cert->derived);
  }
  SECTION("H x V decomposition of C6 x C2") {
    FiniteGroup g = direct_product(cyclic(6), cyclic(2));
    Verdict v = condition2(g);
    expect_mutations_detected(g, v, &v.cert->chain.steps);
    std::vector<Bitmask>* pair = nullptr;
    std::vector<Bitmask> hv{v.cert->h_mask, v.cert->v_mask};
    (void)pair;
    for (int bit = 0; bit < g.order(); ++bit) {
      v.cert->h_mask.flip(bit);
      CHECK(certificate_error(g, v).has_value());
      v.cert->h_mask.flip(bit);
      v.cert->v_mask.flip(bit);
      CHECK(certificate_error(g, v).has_value());
      v.cert->v_mask.flip(bit);
    }
  }
}

TEST_CASE("hierarchy on sample groups") {
  for (const FiniteGroup& g :
       {cyclic(12), dihedral(4), quaternion8(), s3(), a4(), klein_four(),
        abelian_of_type({2, 4}), direct_product(s3(), cyclic(2))}) {
    Verdict fully = is_fully_solvable(g);
    Verdict ultra = is_ultrasolvable(g);
    Verdict inn = is_A_solvable(g, inner_automorphisms(g));
    Verdict solv = is_solvable(g);
    if (fully.truthy()) CHECK(ultra.truthy());
    if (ultra.truthy()) CHECK(inn.truthy());
    if (inn.truthy()) CHECK(solv.truthy());
    CHECK(inn.truthy() == is_supersolvable(g).truthy());
    Verdict autss = aut_supersolvable(g);
    if (ultra.truthy() && !autss.skipped()) CHECK(autss.truthy());
  }
}
