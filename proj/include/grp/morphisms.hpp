#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "grp/error.hpp"
#include "grp/group.hpp"
#include "grp/map.hpp"
#include "grp/structure.hpp"
#include "grp/subgroup.hpp"

namespace grp {

// Greedy generating set: repeatedly append the least element whose addition
// maximizes the generated-subgroup popcount, until the closure is G. For
// nilpotent groups the size is re-checked against the Burnside rank and
// repaired by an exhaustive search over smaller tuples if greedy overshot;
// for other groups the result is small but not certified minimal.
inline std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> gens;
  Bitmask closure = g.identity_mask();
  while (closure.count() < n) {
    int best = -1, best_count = -1;
    for (int x = 0; x < n; ++x) {
      if (closure.test(x)) continue;
      std::vector<int> cand = gens;
      cand.push_back(x);
      int c = subgroup_closure(g, cand).count();
      if (c > best_count) {
        best_count = c;
        best = x;
      }
    }
    gens.push_back(best);
    closure = subgroup_closure(g, gens);
  }

  if (gens.size() > 1 && is_nilpotent(g)) {
    int rank = 0;
    for (long p : prime_divisors(n)) {
      // p-elements of a nilpotent group form the normal Sylow subgroup
      auto syl = mask_as_group(g, abelian_sylow_mask(g, p));
      long quot = syl.group.order() / frattini_pgroup(syl.group, p).count();
      int r = 0;
      for (long q = 1; q < quot; q *= p) ++r;
      rank = std::max(rank, r);
    }
    if (int(gens.size()) > rank) {
      std::vector<int> pick;
      std::function<bool(int, int)> search = [&](int from, int left) -> bool {
        if (left == 0) return subgroup_closure(g, pick).count() == n;
        for (int x = from; x < n; ++x) {
          pick.push_back(x);
          if (search(x + 1, left - 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (search(1, rank)) gens = pick;
    }
  }
  return gens;
}

namespace detail {

// Incremental closure data for backtracking over generator images. At level
// i the subgroup H_i = <g_0..g_i> becomes available: `tree[i]` lists, in
// discovery order, one defining product for every element new in H_i, and
// `checks[i]` lists all remaining products x*g_j (x in H_i, j <= i) not seen
// at earlier levels. Filling images along tree edges and verifying every
// check edge enforces the homomorphism identity on H_i exactly; the final
// full check on acceptance is kept as specified.
struct GenLevels {
  struct Edge {
    std::uint16_t from, gen, to;
  };
  std::vector<int> gens;
  std::vector<std::vector<Edge>> tree;
  std::vector<std::vector<Edge>> checks;
};

inline GenLevels build_gen_levels(const FiniteGroup& g, const std::vector<int>& gens) {
  GenLevels levels;
  levels.gens = gens;
  int k = int(gens.size());
  levels.tree.resize(k);
  levels.checks.resize(k);

  std::vector<std::uint16_t> elems{0};
  std::vector<int> level_of(g.order(), -1);
  Bitmask in(g.order());
  in.set(0);
  for (int lvl = 0; lvl < k; ++lvl) {
    for (std::size_t head = 0; head < elems.size(); ++head) {
      int x = elems[head];
      int jstart = (level_of[x] == lvl) ? 0 : lvl;  // older edges were processed earlier
      for (int j = jstart; j <= lvl; ++j) {
        int y = g.mul(x, gens[j]);
        GenLevels::Edge e{std::uint16_t(x), std::uint16_t(j), std::uint16_t(y)};
        if (!in.test(y)) {
          in.set(y);
          level_of[y] = lvl;
          elems.push_back(std::uint16_t(y));
          levels.tree[lvl].push_back(e);
        } else {
          levels.checks[lvl].push_back(e);
        }
      }
    }
  }
  return levels;
}

// Shared backtracking engine for automorphism and endomorphism enumeration.
// Candidates per level are tried in ascending element order, so maps are
// produced in lexicographic order of their generator-image tuples.
inline MapSet enumerate_maps(const FiniteGroup& g, MapKind kind, long cap) {
  if (cap < 1) throw InvalidParameter("enumeration cap must be >= 1");
  MapSet out{&g, kind, true, {}};
  int n = g.order();

  auto gens = minimal_generating_set(g);
  int k = int(gens.size());
  if (k == 0) {
    out.maps.push_back(identity_map(g));
    return out;
  }
  auto levels = build_gen_levels(g, gens);

  std::vector<int> class_size(n);
  for (const auto& cls : conjugacy_classes(g))
    for (int x : cls) class_size[x] = int(cls.size());

  bool autos = kind == MapKind::automorphisms;
  std::vector<std::vector<int>> cand(k);
  for (int i = 0; i < k; ++i) {
    int go = g.element_order(gens[i]);
    for (int x = 0; x < n; ++x) {
      if (autos) {
        if (g.element_order(x) == go && class_size[x] == class_size[gens[i]])
          cand[i].push_back(x);
      } else if (go % g.element_order(x) == 0) {
        cand[i].push_back(x);
      }
    }
  }

  std::vector<int> img(n, -1);
  img[0] = 0;
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::vector<int> timg(k);

  auto accept = [&]() {
    GroupMap m{&g, &g, std::vector<std::uint16_t>(n)};
    for (int x = 0; x < n; ++x) m.images[x] = std::uint16_t(img[x]);
    if (!is_homomorphism(m)) return;  // full check on acceptance
    if (autos && !is_bijection(m)) return;
    out.maps.push_back(std::move(m));
    if (long(out.maps.size()) > cap) {
      if (autos) throw AutCapExceeded(long(out.maps.size()));
      throw EndCapExceeded(long(out.maps.size()));
    }
  };

  std::function<void(int)> assign = [&](int lvl) {
    for (int t : cand[lvl]) {
      if (autos && used[t]) continue;
      timg[lvl] = t;
      std::vector<int> journal;
      bool ok = true;
      for (const auto& e : levels.tree[lvl]) {
        int v = g.mul(img[e.from], timg[e.gen]);
        if (autos && used[v]) {
          ok = false;
          break;
        }
        img[e.to] = v;
        if (autos) used[v] = 1;
        journal.push_back(e.to);
      }
      if (ok)
        for (const auto& e : levels.checks[lvl])
          if (img[e.to] != g.mul(img[e.from], timg[e.gen])) {
            ok = false;
            break;
          }
      if (ok) {
        if (lvl == k - 1)
          accept();
        else
          assign(lvl + 1);
      }
      for (int y : journal) {
        if (autos) used[img[y]] = 0;
        img[y] = -1;
      }
    }
  };
  assign(0);
  return out;
}

}  // namespace detail

// All automorphisms of G, by backtracking over images of the greedy
// generating set; candidate images must match element order and conjugacy
// class size. Deterministic lexicographic order. Throws AutCapExceeded once
// more than `cap` maps have been found.
inline MapSet enumerate_automorphisms(const FiniteGroup& g, long cap = 20000) {
  return detail::enumerate_maps(g, MapKind::automorphisms, cap);
}
MapSet enumerate_automorphisms(FiniteGroup&&, long = 20000) = delete;  // maps keep a group pointer

// All endomorphisms (identity-preserving homomorphisms, bijectivity not
// required); candidate images must have order dividing the generator order.
inline MapSet enumerate_endomorphisms(const FiniteGroup& g, long cap = 200000) {
  return detail::enumerate_maps(g, MapKind::endomorphisms, cap);
}
MapSet enumerate_endomorphisms(FiniteGroup&&, long = 200000) = delete;

// Conjugation maps x -> a^-1 x a, deduplicated; |result| = |G| / |Z(G)|.
MapSet inner_automorphisms(FiniteGroup&&) = delete;
inline MapSet inner_automorphisms(const FiniteGroup& g) {
  MapSet out{&g, MapKind::automorphisms, true, {}};
  std::set<std::vector<std::uint16_t>> seen;
  for (int a = 0; a < g.order(); ++a) {
    GroupMap m{&g, &g, std::vector<std::uint16_t>(g.order())};
    for (int x = 0; x < g.order(); ++x) m.images[x] = std::uint16_t(g.conj(a, x));
    if (seen.insert(m.images).second) out.maps.push_back(std::move(m));
  }
  return out;
}

// The automorphisms of a complete MapSet as an abstract group: the Cayley
// table under composition (left operand applied first), identity at index 0
// and the other maps in enumeration order. Also keeps, per element, the
// automorphism it stands for and the index map from MapSet positions.
struct AutGroup {
  FiniteGroup group;
  std::vector<GroupMap> maps;   // element index -> automorphism of the base group
  std::vector<int> element_of;  // MapSet position -> element index
};

inline AutGroup aut_as_group(const MapSet& autos, const BuildOptions& opts = {}) {
  if (!autos.complete) throw InvalidParameter("aut_as_group needs a complete map set");
  const FiniteGroup& g = *autos.group;
  long na = long(autos.maps.size());
  if (na > opts.max_order) throw ProductExceedsCap("automorphism group exceeds max_order");

  auto ident = identity_map(g).images;
  int ident_pos = -1;
  for (long i = 0; i < na; ++i)
    if (autos.maps[i].images == ident) {
      ident_pos = int(i);
      break;
    }
  if (ident_pos < 0) throw InvalidParameter("map set has no identity");

  std::vector<GroupMap> elem_maps;
  std::vector<int> element_of(na, -1);
  elem_maps.reserve(na);
  elem_maps.push_back(autos.maps[ident_pos]);
  element_of[ident_pos] = 0;
  for (long i = 0; i < na; ++i) {
    if (int(i) == ident_pos) continue;
    element_of[i] = int(elem_maps.size());
    elem_maps.push_back(autos.maps[i]);
  }

  // Keys: generator-image tuples packed into 64 bits; automorphisms are
  // determined by their values on a generating set.
  auto gens = minimal_generating_set(g);
  int bits = 1;
  while ((1 << bits) < g.order()) ++bits;
  if (int(gens.size()) * bits > 60)
    throw ProductExceedsCap("aut_as_group: generator key does not fit 64 bits");
  auto key_of = [&](const std::vector<std::uint16_t>& images) {
    std::uint64_t key = 0;
    for (int s : gens) key = (key << bits) | images[s];
    return key;
  };
  std::vector<std::pair<std::uint64_t, int>> index(na);
  for (long i = 0; i < na; ++i) index[i] = {key_of(elem_maps[i].images), int(i)};
  std::sort(index.begin(), index.end());
  for (long i = 1; i < na; ++i)
    if (index[i].first == index[i - 1].first)
      throw InvalidParameter("map set contains duplicates");

  std::vector<std::uint16_t> table(std::size_t(na) * na);
  for (long a = 0; a < na; ++a) {
    const auto& ia = elem_maps[a].images;
    for (long b = 0; b < na; ++b) {
      const auto& ib = elem_maps[b].images;
      std::uint64_t key = 0;
      for (int s : gens) key = (key << bits) | ib[ia[s]];
      auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(key, -1));
      if (it == index.end() || it->first != key)
        throw InvalidParameter("map set is not closed under composition");
      table[std::size_t(a) * na + b] = std::uint16_t(it->second);
    }
  }
  return AutGroup{FiniteGroup::from_table(int(na), std::move(table), opts),
                  std::move(elem_maps), std::move(element_of)};
}

// Least superset of {x} closed under applying every map in the set. For a
// complete automorphism set this is the A-orbit; for endomorphisms it is the
// forward closure under the generated monoid.
inline Bitmask orbit_closure(const FiniteGroup& g, int x, const MapSet& maps) {
  Bitmask seen(g.order());
  seen.set(x);
  std::vector<int> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int y = queue[head];
    for (const auto& m : maps.maps) {
      int z = m.images[y];
      if (!seen.test(z)) {
        seen.set(z);
        queue.push_back(z);
      }
    }
  }
  return seen;
}

// psi: (a, b) -> (a, phi(a) b) on a group built by direct_product(A, B),
// for a homomorphism phi : A -> B whose image centralizes B. Always an
// automorphism of the product; moves the A-factor iff phi is nontrivial.
inline GroupMap psi_factory(const FiniteGroup& product, const GroupMap& phi) {
  const FiniteGroup& a = *phi.source;
  const FiniteGroup& b = *phi.target;
  int na = a.order(), nb = b.order();
  if (product.order() != na * nb)
    throw InvalidParameter("psi_factory: product order does not match factors");
  if (!is_homomorphism(phi)) throw InvalidParameter("psi_factory: phi is not a homomorphism");
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      if (b.mul(phi.images[x], y) != b.mul(y, phi.images[x]))
        throw NotCentral("psi_factory: image of phi does not centralize the B factor");

  GroupMap psi{&product, &product, std::vector<std::uint16_t>(product.order())};
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      psi.images[x * nb + y] = std::uint16_t(x * nb + b.mul(phi.images[x], y));
  if (!is_automorphism(psi)) throw Error("psi_factory: construction failed");
  return psi;
}

}  // namespace grp
