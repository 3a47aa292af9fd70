#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "grp/group.hpp"
#include "grp/morphisms.hpp"
#include "grp/structure.hpp"

using namespace grp;

namespace {

FiniteGroup s3() { return from_generators(PermSpec{3, {{1, 0, 2}, {1, 2, 0}}}, 10); }
FiniteGroup a4() { return from_generators(PermSpec{4, {{1, 2, 0, 3}, {1, 0, 3, 2}}}, 20); }

// Test-only oracle: the full subgroup lattice, by closing every subgroup
// under one extra generator until nothing new appears.
std::vector<Bitmask> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Bitmask> out{g.identity_mask()};
  seen.insert(out[0].members());
  for (std::size_t head = 0; head < out.size(); ++head) {
    Bitmask h = out[head];
    for (int x = 0; x < g.order(); ++x) {
      if (h.test(x)) continue;
      auto gens = h.members();
      gens.push_back(x);
      Bitmask k = subgroup_closure(g, gens);
      if (seen.insert(k.members()).second) out.push_back(std::move(k));
    }
  }
  return out;
}

Bitmask maximal_subgroup_intersection_oracle(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  Bitmask acc = g.full_mask();
  for (const auto& m : subs) {
    if (m.count() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.count() != g.order() && k != m && m.subset_of(k)) {
        maximal = false;
        break;
      }
    if (maximal) acc &= m;
  }
  return acc;
}

}  // namespace

TEST_CASE("normal closures") {
  FiniteGroup g = s3();
  CHECK(normal_closure(g, {0}).count() == 1);
  int three_cycle = -1, transposition = -1;
  for (int x = 0; x < 6; ++x) {
    if (g.element_order(x) == 3 && three_cycle < 0) three_cycle = x;
    if (g.element_order(x) == 2 && transposition < 0) transposition = x;
  }
  CHECK(normal_closure(g, {three_cycle}).count() == 3);
  CHECK(normal_closure(g, {transposition}).count() == 6);
}

TEST_CASE("minimal normal subgroups") {
  SECTION("C6: exactly the subgroups of orders 2 and 3") {
    auto mins = minimal_normal_subgroups(cyclic(6));
    REQUIRE(mins.size() == 2);
    CHECK(mins[0].count() == 2);
    CHECK(mins[1].count() == 3);
  }
  SECTION("V: three subgroups of order 2") {
    auto mins = minimal_normal_subgroups(klein_four());
    REQUIRE(mins.size() == 3);
    for (auto& m : mins) CHECK(m.count() == 2);
  }
  SECTION("A4: exactly one, of order 4") {
    auto mins = minimal_normal_subgroups(a4());
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].count() == 4);
  }
  CHECK_THROWS_AS(minimal_normal_subgroups(cyclic(1)), TrivialGroup);
}

TEST_CASE("chief series") {
  CHECK(chief_series(cyclic(1)).factor_orders.empty());
  CHECK(chief_series(s3()).factor_orders == std::vector<long>{3, 2});
  CHECK(chief_series(a4()).factor_orders == std::vector<long>{4, 3});

  SECTION("factors multiply to |G| and steps are normal in G") {
    for (const FiniteGroup& g : {dihedral(4), a4(), dihedral(6), quaternion8()}) {
      ChiefSeriesRecord rec = chief_series(g);
      long prod = 1;
      for (long f : rec.factor_orders) prod *= f;
      CHECK(prod == g.order());
      for (const auto& step : rec.steps) CHECK(is_normal(g, step));
    }
  }

  SECTION("Jordan-Hoelder: factor multiset independent of the tie-break") {
    std::mt19937 rng(12345);
    for (const FiniteGroup& g :
         {from_generators(PermSpec{4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}, 30),  // S4
          direct_product(dihedral(4), cyclic(2)), direct_product(a4(), cyclic(2))}) {
      auto base = chief_series(g).factor_orders;
      std::multiset<long> expect(base.begin(), base.end());
      for (int trial = 0; trial < 5; ++trial) {
        auto chooser = [&](const std::vector<Bitmask>& mins) {
          return int(rng() % mins.size());
        };
        auto got = chief_series(g, chooser).factor_orders;
        CHECK(std::multiset<long>(got.begin(), got.end()) == expect);
      }
    }
  }
}

TEST_CASE("normal subgroup enumeration") {
  CHECK(normal_subgroups(cyclic(5)).size() == 2);
  CHECK(normal_subgroups(s3()).size() == 3);
  CHECK(normal_subgroups(dihedral(4)).size() == 6);
  SECTION("everything returned is normal, and joins stay inside") {
    auto ns = normal_subgroups(dihedral(6));
    for (auto& n : ns) CHECK(is_normal(dihedral(6), n));
  }
}

TEST_CASE("o_pi and friends") {
  FiniteGroup g = s3();
  CHECK(o_pi(g, {2, 3}).count() == 6);
  CHECK(o_pi(g, {3}).count() == 3);
  CHECK(o_pi(g, {2}).count() == 1);

  SECTION("idempotent and monotone") {
    FiniteGroup h = direct_product(s3(), cyclic(2));
    Bitmask o3 = o_pi(h, {3});
    auto sub = mask_as_group(h, o3);
    CHECK(o_pi(sub.group, {3}).count() == o3.count());
    CHECK(o_pi(h, {3}).count() <= o_pi(h, {2, 3}).count());
  }

  SECTION("o_pp_prime") {
    CHECK(o_pp_prime(dihedral(4), 2).count() == 8);  // p-group: O_p = P
    CHECK(o_pp_prime(s3(), 3).count() == 6);
    CHECK(o_pp_prime(s3(), 2).count() == 3);
  }

  SECTION("normal_hall") {
    CHECK(normal_hall(s3(), {2, 3}).value().count() == 6);
    CHECK(normal_hall(s3(), {3}).value().count() == 3);
    CHECK_FALSE(normal_hall(a4(), {3}).has_value());
    auto h = normal_hall(direct_product(s3(), cyclic(5)), {3, 5});
    REQUIRE(h.has_value());
    CHECK(h->count() == 15);
    CHECK(std::gcd(long(h->count()), long(30 / h->count())) == 1);
  }
}

TEST_CASE("frattini subgroup of p-groups") {
  CHECK(frattini_pgroup(elementary_abelian(2, 3), 2).count() == 1);
  CHECK(frattini_pgroup(elementary_abelian(5, 2), 5).count() == 1);
  CHECK(frattini_pgroup(cyclic(8), 2).count() == 4);
  CHECK(frattini_pgroup(dihedral(4), 2).count() == 2);
  CHECK_THROWS_AS(frattini_pgroup(s3(), 2), NotPGroup);
  CHECK_THROWS_AS(frattini_pgroup(cyclic(8), 3), NotPGroup);

  SECTION("equals the intersection of all maximal subgroups (lattice oracle)") {
    std::vector<std::pair<FiniteGroup, long>> cases;
    cases.emplace_back(dihedral(4), 2);
    cases.emplace_back(quaternion8(), 2);
    cases.emplace_back(cyclic(16), 2);
    cases.emplace_back(abelian_of_type({2, 8}), 2);
    cases.emplace_back(abelian_of_type({4, 4}), 2);
    cases.emplace_back(elementary_abelian(2, 4), 2);
    cases.emplace_back(elementary_abelian(2, 5), 2);
    cases.emplace_back(elementary_abelian(2, 6), 2);  // order 64
    cases.emplace_back(dihedral(8), 2);
    cases.emplace_back(dihedral(16), 2);              // order 32
    cases.emplace_back(dihedral(32), 2);              // order 64
    cases.emplace_back(direct_product(quaternion8(), cyclic(2)), 2);
    cases.emplace_back(direct_product(dihedral(4), klein_four()), 2);
    cases.emplace_back(elementary_abelian(3, 3), 3);
    cases.emplace_back(abelian_of_type({3, 9}), 3);
    cases.emplace_back(cyclic(27), 3);
    cases.emplace_back(abelian_of_type({25}), 5);
    cases.emplace_back(elementary_abelian(7, 2), 7);
    for (const auto& [g, p] : cases)
      CHECK(frattini_pgroup(g, p) == maximal_subgroup_intersection_oracle(g));
  }
}

TEST_CASE("omega of the center") {
  CHECK(omega_center(elementary_abelian(3, 2), 3).count() == 9);
  CHECK(omega_center(cyclic(8), 2).count() == 2);
  CHECK(omega_center(quaternion8(), 2).count() == 2);
  SECTION("nontrivial for nontrivial p-groups") {
    for (const FiniteGroup& g : {dihedral(8), abelian_of_type({2, 4}), cyclic(9)})
      CHECK(omega_center(g, pgroup_prime(g)).count() > 1);
  }
}

TEST_CASE("abelian invariants") {
  using Invs = std::map<long, std::vector<int>>;
  CHECK(abelian_invariants(klein_four()) == Invs{{2, {1, 1}}});
  CHECK(abelian_invariants(cyclic(12)) == Invs{{2, {2}}, {3, {1}}});
  CHECK(abelian_invariants(abelian_of_type({2, 4})) == Invs{{2, {1, 2}}});
  CHECK_THROWS_AS(abelian_invariants(s3()), NotAbelian);

  SECTION("reconstruction for every type list with product <= 128") {
    std::vector<int> prime_powers;
    for (int q = 2; q <= 128; ++q)
      if (prime_power_base(q) != 0) prime_powers.push_back(q);
    // enumerate multisets of prime powers with product <= 128
    std::vector<std::vector<int>> types;
    std::vector<int> cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t from, long prod) {
      if (!cur.empty()) types.push_back(cur);
      for (std::size_t i = from; i < prime_powers.size(); ++i) {
        long np = prod * prime_powers[i];
        if (np > 128) continue;
        cur.push_back(prime_powers[i]);
        rec(i, np);
        cur.pop_back();
      }
    };
    rec(0, 1);
    for (const auto& t : types) {
      Invs expect;
      for (int q : t) {
        long p = prime_power_base(q);
        int e = 0;
        for (long v = 1; v < q; v *= p) ++e;
        expect[p].push_back(e);
      }
      for (auto& [p, v] : expect) std::sort(v.begin(), v.end());
      CHECK(abelian_invariants(abelian_of_type(t)) == expect);
    }
  }
}

TEST_CASE("abelian automorphism order formula vs enumeration") {
  for (const FiniteGroup& g :
       {klein_four(), cyclic(8), abelian_of_type({2, 4}), abelian_of_type({4, 4}),
        elementary_abelian(2, 3), elementary_abelian(3, 2), abelian_of_type({3, 9}),
        abelian_of_type({2, 2, 4}), cyclic(36), abelian_of_type({2, 3, 9})}) {
    auto invs = abelian_invariants(g);
    CHECK(abelian_aut_order(invs) == enumerate_automorphisms(g, 100000).size());
  }
}

TEST_CASE("abelian characteristic series") {
  SECTION("cyclic p^a gives the full power chain") {
    ChainCertificate c = abelian_char_series(cyclic(8), 2);
    REQUIRE(c.steps.size() == 4);
    CHECK(c.steps[1].count() == 2);
    CHECK(c.steps[2].count() == 4);
  }
  SECTION("C2 x C4: three steps of index 2") {
    FiniteGroup g = abelian_of_type({2, 4});
    MapSet a = enumerate_automorphisms(g);
    ChainCertificate c = abelian_char_series(g, 2, &a);
    REQUIRE(c.steps.size() == 4);
    for (std::size_t i = 1; i < c.steps.size(); ++i)
      CHECK(c.steps[i].count() == 2 * c.steps[i - 1].count());
  }
  SECTION("Klein four-group is the excluded case") {
    CHECK_THROWS_AS(abelian_char_series(klein_four(), 2), InvariantsNotStrict);
  }
  SECTION("multi-prime canonical chain is invariant under all automorphisms") {
    FiniteGroup g = abelian_of_type({2, 4, 3});  // C2 x C4 x C3
    ChainCertificate c = canonical_fully_invariant_chain(g);
    CHECK(c.steps.back() == g.full_mask());
    for (const auto& m : enumerate_automorphisms(g).maps)
      for (const auto& step : c.steps)
        for (int x : step.members()) CHECK(step.test(m.images[x]));
  }
}

TEST_CASE("nilpotency detection") {
  CHECK(is_nilpotent(dihedral(4)));
  CHECK(is_nilpotent(cyclic(12)));
  CHECK(is_nilpotent(direct_product(dihedral(4), cyclic(3))));
  CHECK_FALSE(is_nilpotent(s3()));
  CHECK_FALSE(is_nilpotent(a4()));
  CHECK_FALSE(is_nilpotent(dihedral(3)));
}
