#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "grp/cert.hpp"
#include "grp/error.hpp"
#include "grp/group.hpp"
#include "grp/map.hpp"
#include "grp/morphisms.hpp"
#include "grp/structure.hpp"
#include "grp/subgroup.hpp"

namespace grp {

inline constexpr long kDefaultAutCap = 20000;
inline constexpr long kDefaultEndCap = 200000;

enum class CertKind {
  cyclic_chain,   // invariant subnormal series with cyclic factors
  chief,          // chief series with prime factor orders (supersolvable)
  derived,        // derived series reaching 1 (solvable)
  hall,           // normal Hall pi-subgroup witness
  strict_pc,      // normal Sylow p witness for strictly p-closed
  h_times_v,      // G = H x V decomposition plus an H-chain
  abelian_rule,   // invariant-based verdict where Aut was not enumerable
};

struct Certificate {
  CertKind kind = CertKind::cyclic_chain;
  ChainCertificate chain;    // cyclic_chain, h_times_v (chain up to H)
  ChiefSeriesRecord chief;   // chief
  std::vector<Bitmask> derived;  // derived, ascending from 1 to G
  Bitmask hall_mask;         // hall, strict_pc
  std::vector<long> pi;      // hall
  long p = 0;                // strict_pc
  Bitmask v_mask, h_mask;    // h_times_v
  std::map<long, std::vector<int>> invariants;  // abelian_rule
};

struct Verdict {
  enum class Value { yes, no, skipped };
  Value value = Value::no;
  std::string skip_reason;
  std::string method;  // how the verdict was decided (reporting only)
  std::optional<Certificate> cert;

  bool truthy() const { return value == Value::yes; }
  bool skipped() const { return value == Value::skipped; }

  static Verdict skip(std::string reason) {
    Verdict v;
    v.value = Value::skipped;
    v.skip_reason = std::move(reason);
    return v;
  }
  static Verdict no_verdict(std::string method_name = {}) {
    Verdict v;
    v.value = Value::no;
    v.method = std::move(method_name);
    return v;
  }
};

// ---- Aut/End enumeration with first-class cap outcomes ---------------------

struct AutEnumeration {
  std::shared_ptr<const MapSet> maps;  // null when the cap was exceeded
  long found_before_cap = 0;
  bool capped() const { return maps == nullptr; }
};

inline AutEnumeration try_enumerate_automorphisms(const FiniteGroup& g,
                                                  long cap = kDefaultAutCap) {
  try {
    return {std::make_shared<const MapSet>(enumerate_automorphisms(g, cap)), 0};
  } catch (const AutCapExceeded& e) {
    return {nullptr, e.count_so_far};
  }
}

struct EndEnumeration {
  std::shared_ptr<const MapSet> maps;
  long found_before_cap = 0;
  bool capped() const { return maps == nullptr; }
};

inline EndEnumeration try_enumerate_endomorphisms(const FiniteGroup& g,
                                                  long cap = kDefaultEndCap) {
  try {
    return {std::make_shared<const MapSet>(enumerate_endomorphisms(g, cap)), 0};
  } catch (const EndCapExceeded& e) {
    return {nullptr, e.count_so_far};
  }
}

// ---- Basic predicates -------------------------------------------------------

inline Verdict is_solvable(const FiniteGroup& g) {
  std::vector<Bitmask> series{g.full_mask()};
  while (true) {
    auto sub = mask_as_group(g, series.back());
    Bitmask der_sub = derived_subgroup(sub.group);
    Bitmask der(g.order());
    for (int i : der_sub.members()) der.set(sub.to_parent[i]);
    if (der == series.back()) break;
    series.push_back(der);
  }
  Verdict v;
  v.method = "derived-series";
  if (series.back().count() != 1) {
    v.value = Verdict::Value::no;
    return v;
  }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::derived;
  c.derived.assign(series.rbegin(), series.rend());
  v.cert = std::move(c);
  return v;
}

// Supersolvable iff every chief factor has prime order; one chief series
// suffices by Jordan-Hoelder.
inline Verdict is_supersolvable(const FiniteGroup& g) {
  ChiefSeriesRecord rec = chief_series(g);
  Verdict v;
  v.method = "chief-series";
  for (long f : rec.factor_orders)
    if (!is_prime(f)) {
      v.value = Verdict::Value::no;
      return v;
    }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::chief;
  c.chief = std::move(rec);
  v.cert = std::move(c);
  return v;
}

inline Verdict hall_verdict(const FiniteGroup& g, std::vector<long> pi, const char* method) {
  Verdict v;
  v.method = method;
  auto h = normal_hall(g, pi);
  if (!h) {
    v.value = Verdict::Value::no;
    return v;
  }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::hall;
  c.hall_mask = *h;
  c.pi = std::move(pi);
  v.cert = std::move(c);
  return v;
}

// Normal Hall subgroup for the set of primes >= n.
inline Verdict has_sylow_tower_tail(const FiniteGroup& g, long n) {
  std::vector<long> pi;
  for (long p : prime_divisors(g.order()))
    if (p >= n) pi.push_back(p);
  return hall_verdict(g, std::move(pi), "normal-hall");
}

inline Verdict is_2_nilpotent(const FiniteGroup& g) {
  std::vector<long> pi;
  for (long p : prime_divisors(g.order()))
    if (p != 2) pi.push_back(p);
  return hall_verdict(g, std::move(pi), "normal-2-complement");
}

// Normal Sylow p-subgroup with quotient abelian of exponent dividing p-1.
inline Verdict is_strictly_p_closed(const FiniteGroup& g, long p,
                                    const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidParameter("is_strictly_p_closed: p must be prime");
  Verdict v;
  v.method = "sylow+quotient-exponent";
  Bitmask syl = o_p(g, p);
  if (syl.count() != p_part(g.order(), p)) {
    v.value = Verdict::Value::no;
    return v;
  }
  Quotient q = quotient(g, syl, opts);
  if (!q.group.is_abelian() || (p - 1) % exponent(q.group) != 0) {
    v.value = Verdict::Value::no;
    return v;
  }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::strict_pc;
  c.hall_mask = syl;
  c.p = p;
  v.cert = std::move(c);
  return v;
}

// ---- Invariant chain search -------------------------------------------------

struct ChainSearchOptions {
  // The literal definition only needs H_{i-1} normal in H_i; this flag adds
  // the stricter requirement that every step be normal in G, for comparison.
  bool require_normal_in_g = false;
};

// Breadth-first search over invariant subgroups reachable through
// cyclic-factor steps. Successors of H are K = <H u orbit(x)> for x not in
// H, kept when H is normal in K and K/H has prime order (then K/H is cyclic
// and any x in K\H generates it over H). Restricting to prime factors loses
// nothing: an invariant series with cyclic factors refines to one with
// prime factors because subgroups of cyclic quotients are unique per order,
// hence invariant. Completeness of the successor rule: a factor generator x
// forces K = <H, x>, and invariance of K forces K >= <H u orbit(x)> >= K.
// States are memoized on masks.
inline std::optional<ChainCertificate> find_invariant_cyclic_chain(
    const FiniteGroup& g, const MapSet& maps, ChainSearchOptions opts = {}) {
  int n = g.order();
  auto succ = image_successors(maps);
  auto orbit_of = [&](int x) {
    Bitmask seen(n);
    seen.set(x);
    std::vector<int> queue{x};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int z : succ[queue[h]])
        if (!seen.test(z)) {
          seen.set(z);
          queue.push_back(z);
        }
    return seen;
  };

  std::vector<Bitmask> states{g.identity_mask()};
  std::vector<std::pair<int, int>> parent{{-1, -1}};  // (state, witness)
  std::unordered_map<Bitmask, int> seen;
  seen.emplace(states[0], 0);
  Bitmask full = g.full_mask();

  for (std::size_t head = 0; head < states.size(); ++head) {
    Bitmask h = states[head];
    if (h == full) {
      ChainCertificate cert;
      cert.invariance = maps.kind == MapKind::automorphisms ? InvarianceKind::automorphism_set
                                                            : InvarianceKind::endomorphism_set;
      std::vector<int> path;
      int cur = int(head);
      while (cur != 0) {
        path.push_back(cur);
        cur = parent[cur].first;
      }
      cert.steps.push_back(states[0]);
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        cert.steps.push_back(states[*it]);
        cert.cyclic_witness.push_back(parent[*it].second);
      }
      return cert;
    }
    auto hm = h.members();
    for (int x = 0; x < n; ++x) {
      if (h.test(x)) continue;
      Bitmask gens = h | orbit_of(x);
      Bitmask k = subgroup_closure(g, gens);
      if (seen.count(k)) continue;
      if (!is_prime(k.count() / h.count()) || k.count() % h.count() != 0) continue;
      std::vector<int> hx = hm;
      hx.push_back(x);
      if (subgroup_closure(g, hx) != k) continue;  // witness coset generates K/H
      if (!is_normal_in(g, h, k)) continue;
      if (opts.require_normal_in_g && !is_normal(g, k)) continue;
      seen.emplace(k, int(states.size()));
      states.push_back(std::move(k));
      parent.emplace_back(int(head), x);
    }
  }
  return std::nullopt;
}

// A-solvability for the supplied map set. For automorphism kind the list
// need only generate A: closing forward under listed maps equals closing
// under the generated group because each map has finite order.
inline Verdict is_A_solvable(const FiniteGroup& g, const MapSet& maps,
                             ChainSearchOptions opts = {}) {
  auto chain = find_invariant_cyclic_chain(g, maps, opts);
  Verdict v;
  v.method = "chain-search";
  if (!chain) {
    v.value = Verdict::Value::no;
    return v;
  }
  v.value = Verdict::Value::yes;
  chain->maps = std::make_shared<const MapSet>(maps);
  Certificate c;
  c.kind = CertKind::cyclic_chain;
  c.chain = std::move(*chain);
  v.cert = std::move(c);
  return v;
}

// ---- Abelian fast path ------------------------------------------------------

inline bool invariants_strictly_increasing(const std::map<long, std::vector<int>>& invs) {
  for (const auto& [p, e] : invs)
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i - 1] >= e[i]) return false;
  return true;
}

// Aut(G) supersolvable for abelian G: every prime's exponent list strictly
// increasing, or the 2-part exactly [1,1] (Klein four) and strict elsewhere.
// The Klein-four exception grants only Aut-supersolvability, never
// ultrasolvability.
inline bool abelian_aut_supersolvable_rule(const std::map<long, std::vector<int>>& invs) {
  for (const auto& [p, e] : invs) {
    bool strict = true;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i - 1] >= e[i]) strict = false;
    if (strict) continue;
    if (p == 2 && e == std::vector<int>{1, 1}) continue;
    return false;
  }
  return true;
}

// Ultrasolvability of an abelian group without enumerating Aut: true iff
// the invariants are strictly increasing at every prime, certified by the
// canonical fully invariant chain.
inline Verdict abelian_ultrasolvable_fastpath(const FiniteGroup& g) {
  Verdict v;
  v.method = "abelian-invariants";
  if (!invariants_strictly_increasing(abelian_invariants(g))) {
    v.value = Verdict::Value::no;
    return v;
  }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::cyclic_chain;
  c.chain = canonical_fully_invariant_chain(g);
  v.cert = std::move(c);
  return v;
}

// ---- Top-level predicates ---------------------------------------------------

inline Verdict is_ultrasolvable(const FiniteGroup& g, const AutEnumeration& aut) {
  if (aut.capped()) {
    if (g.is_abelian()) return abelian_ultrasolvable_fastpath(g);
    return Verdict::skip("AutCapExceeded");
  }
  return is_A_solvable(g, *aut.maps);
}

inline Verdict is_ultrasolvable(const FiniteGroup& g, long aut_cap = kDefaultAutCap) {
  return is_ultrasolvable(g, try_enumerate_automorphisms(g, aut_cap));
}

// Fully solvable: a fully invariant series with cyclic factors. For abelian
// groups beyond the endomorphism cap this coincides with ultrasolvability
// and the canonical chain applies.
inline Verdict is_fully_solvable(const FiniteGroup& g, const EndEnumeration& endos) {
  if (endos.capped()) {
    if (g.is_abelian()) return abelian_ultrasolvable_fastpath(g);
    return Verdict::skip("EndCapExceeded");
  }
  return is_A_solvable(g, *endos.maps);
}

inline Verdict is_fully_solvable(const FiniteGroup& g, long end_cap = kDefaultEndCap) {
  return is_fully_solvable(g, try_enumerate_endomorphisms(g, end_cap));
}

inline Verdict aut_supersolvable(const FiniteGroup& g, const AutEnumeration& aut,
                                 const BuildOptions& opts = {}) {
  if (aut.capped()) {
    if (g.is_abelian()) {
      auto invs = abelian_invariants(g);
      Verdict v;
      v.method = "abelian-rule";
      if (abelian_aut_supersolvable_rule(invs)) {
        v.value = Verdict::Value::yes;
        Certificate c;
        c.kind = CertKind::abelian_rule;
        c.invariants = std::move(invs);
        v.cert = std::move(c);
      } else {
        v.value = Verdict::Value::no;
      }
      return v;
    }
    return Verdict::skip("AutCapExceeded");
  }
  AutGroup ag = aut_as_group(*aut.maps, opts);
  Verdict v = is_supersolvable(ag.group);
  v.method = "aut-as-group+chief-series";
  return v;
}

inline Verdict aut_supersolvable(const FiniteGroup& g, long aut_cap = kDefaultAutCap,
                                 const BuildOptions& opts = {}) {
  return aut_supersolvable(g, try_enumerate_automorphisms(g, aut_cap), opts);
}

// ---- Condition (2): ultrasolvable or H x V with H ultrasolvable odd --------

struct KleinDecomposition {
  Bitmask h_mask;  // the odd-order elements
  Bitmask v_mask;  // the four 2-power-order elements, a central Klein four
};

// Shortcut detector: Sylow-2 part of |G| equal to 4, odd-order elements
// closed, and exactly four 2-power-order elements forming a central Klein
// four mask. These conditions hold iff G decomposes as H x V with odd H.
inline std::optional<KleinDecomposition> detect_klein_factor_shortcut(const FiniteGroup& g) {
  int n = g.order();
  if (p_part(n, 2) != 4) return std::nullopt;
  Bitmask odd(n), twop(n);
  for (int x = 0; x < n; ++x) {
    int o = g.element_order(x);
    if (o % 2 == 1) odd.set(x);
    if (p_part(o, 2) == o) twop.set(x);  // includes the identity
  }
  if (twop.count() != 4) return std::nullopt;
  for (int x : twop.members()) {
    if (g.element_order(x) > 2) return std::nullopt;  // must be Klein, not C4
    for (int a = 0; a < n; ++a)
      if (g.mul(x, a) != g.mul(a, x)) return std::nullopt;  // central
  }
  if (!is_subgroup_mask(g, twop)) return std::nullopt;
  if (odd.count() * 4 != n || !is_subgroup_mask(g, odd)) return std::nullopt;
  return KleinDecomposition{odd, twop};
}

// Exhaustive detector over normal subgroup pairs; must agree with the
// shortcut for |G| <= 200 (both run and the results are compared).
inline bool exhaustive_klein_factor_exists(const FiniteGroup& g) {
  int n = g.order();
  if (n % 4 != 0) return false;
  auto normals = normal_subgroups(g);
  for (const auto& v : normals) {
    if (v.count() != 4) continue;
    bool klein = true;
    for (int x : v.members())
      if (g.element_order(x) > 2) klein = false;
    if (!klein) continue;
    for (const auto& h : normals) {
      if (h.count() * 4 != n) continue;
      if (h.count() % 2 == 0) continue;  // H must have odd order
      if ((h & v).count() != 1) continue;
      bool commute = true;
      for (int a : v.members())
        for (int b : h.members())
          if (g.mul(a, b) != g.mul(b, a)) commute = false;
      if (!commute) continue;
      if (product_mask(g, h, v).count() == n) return true;
    }
  }
  return false;
}

inline Verdict condition2(const FiniteGroup& g, const AutEnumeration& aut,
                          long aut_cap = kDefaultAutCap, const BuildOptions& opts = {}) {
  Verdict ultra = is_ultrasolvable(g, aut);
  if (ultra.truthy()) {
    ultra.method = "ultrasolvable:" + ultra.method;
    return ultra;
  }

  auto dec = detect_klein_factor_shortcut(g);
  if (g.order() <= 200) {
    bool ex = exhaustive_klein_factor_exists(g);
    if (ex != dec.has_value())
      throw Error("condition2: decomposition detectors disagree");
  }
  if (!dec) {
    if (ultra.skipped()) return ultra;  // cannot settle the first disjunct
    Verdict v = Verdict::no_verdict("no-klein-decomposition");
    return v;
  }

  auto hs = mask_as_group(g, dec->h_mask, opts);
  Verdict hu = is_ultrasolvable(hs.group, try_enumerate_automorphisms(hs.group, aut_cap));
  Verdict v;
  v.method = "klein-decomposition";
  if (!hu.truthy()) {
    // |H| odd guaranteed; an odd group's verdict cannot be skipped here
    v.value = hu.value;
    v.skip_reason = hu.skip_reason;
    return v;
  }
  v.value = Verdict::Value::yes;
  Certificate c;
  c.kind = CertKind::h_times_v;
  c.h_mask = dec->h_mask;
  c.v_mask = dec->v_mask;
  // Embed the H-chain into G and extend its invariance maps by the identity
  // on V, using the unique g = h*v decomposition.
  const ChainCertificate& hc = hu.cert->chain;
  ChainCertificate emb;
  emb.invariance = InvarianceKind::automorphism_set;
  for (const auto& step : hc.steps) {
    Bitmask m(g.order());
    for (int i : step.members()) m.set(hs.to_parent[i]);
    emb.steps.push_back(std::move(m));
  }
  for (int w : hc.cyclic_witness) emb.cyclic_witness.push_back(hs.to_parent[w]);
  if (hc.maps) {
    std::vector<int> h_of(g.order(), -1), v_of(g.order(), -1);
    for (int h : dec->h_mask.members())
      for (int vv : dec->v_mask.members()) {
        int x = g.mul(h, vv);
        h_of[x] = h;
        v_of[x] = vv;
      }
    MapSet ext{&g, MapKind::automorphisms, false, {}};
    for (const auto& hm : hc.maps->maps) {
      GroupMap em{&g, &g, std::vector<std::uint16_t>(g.order())};
      for (int x = 0; x < g.order(); ++x) {
        int himg = hs.to_parent[hm.images[hs.from_parent[h_of[x]]]];
        em.images[x] = std::uint16_t(g.mul(himg, v_of[x]));
      }
      ext.maps.push_back(std::move(em));
    }
    emb.maps = std::make_shared<const MapSet>(std::move(ext));
  } else {
    emb.invariance = InvarianceKind::none;  // canonical descriptors refer to H, not G
  }
  c.chain = std::move(emb);
  v.cert = std::move(c);
  return v;
}

inline Verdict condition2(const FiniteGroup& g, long aut_cap = kDefaultAutCap,
                          const BuildOptions& opts = {}) {
  return condition2(g, try_enumerate_automorphisms(g, aut_cap), aut_cap, opts);
}

// ---- Independent certificate checker ----------------------------------------

namespace detail {

inline std::optional<std::string> check_chain_structure(const FiniteGroup& g,
                                                        const ChainCertificate& c,
                                                        const Bitmask& expected_last) {
  if (c.steps.empty()) return "chain has no steps";
  if (c.steps.front() != g.identity_mask()) return "chain does not start at the identity";
  if (c.steps.back() != expected_last) return "chain does not end at the expected subgroup";
  if (c.cyclic_witness.size() + 1 != c.steps.size()) return "witness count mismatch";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Bitmask& cur = c.steps[i];
    if (cur.size() != g.order()) return "mask size mismatch";
    if (!cur.test(0)) return "step does not contain the identity";
    if (subgroup_closure(g, cur.members()) != cur) return "step is not a subgroup";
    if (i == 0) continue;
    const Bitmask& prev = c.steps[i - 1];
    if (!prev.subset_of(cur) || prev == cur) return "steps are not strictly increasing";
    int w = c.cyclic_witness[i - 1];
    if (w < 0 || w >= g.order() || !cur.test(w) || prev.test(w))
      return "cyclic witness is not in the new step";
    std::vector<int> gens = prev.members();
    gens.push_back(w);
    if (subgroup_closure(g, gens) != cur) return "factor is not generated by the witness coset";
    if (!is_normal_in(g, prev, cur)) return "step is not normal in its successor";
  }
  switch (c.invariance) {
    case InvarianceKind::none:
      break;
    case InvarianceKind::automorphism_set:
    case InvarianceKind::endomorphism_set: {
      if (!c.maps) return "invariance kind requires attached maps";
      // Re-verify map validity when affordable; invariance is always checked.
      bool verify_maps =
          double(c.maps->maps.size()) * g.order() * g.order() <= 2e7;
      for (const auto& m : c.maps->maps) {
        if (int(m.images.size()) != g.order() || m.images[0] != 0)
          return "attached map is malformed";
        if (verify_maps && !is_homomorphism(m)) return "attached map is not a homomorphism";
        for (const auto& step : c.steps)
          for (int x : step.members())
            if (!step.test(m.images[x])) return "step is not invariant under an attached map";
      }
      break;
    }
    case InvarianceKind::canonical_abelian: {
      if (!g.is_abelian()) return "canonical chain on a nonabelian group";
      if (c.canonical.size() + 1 != c.steps.size()) return "canonical descriptor count mismatch";
      for (std::size_t i = 1; i < c.steps.size(); ++i)
        if (canonical_step_mask(g, c.canonical[i - 1]) != c.steps[i])
          return "step does not match its canonical descriptor";
      break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Re-validates a true verdict's certificate using group-core primitives
// only; never re-runs a search. Returns a description of the first problem,
// or nullopt when the certificate checks out. `g` must be the group the
// certificate is about (the automorphism group itself for aut-side chief
// certificates).
inline std::optional<std::string> certificate_error(const FiniteGroup& g, const Verdict& v) {
  if (!v.truthy()) return std::nullopt;  // only true verdicts carry certificates
  if (!v.cert) return "true verdict without certificate";
  const Certificate& c = *v.cert;
  switch (c.kind) {
    case CertKind::cyclic_chain:
      return detail::check_chain_structure(g, c.chain, g.full_mask());

    case CertKind::chief: {
      const auto& steps = c.chief.steps;
      if (steps.empty() || steps.front() != g.identity_mask() || steps.back() != g.full_mask())
        return "chief series endpoints wrong";
      if (c.chief.factor_orders.size() + 1 != steps.size()) return "chief factor count mismatch";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (subgroup_closure(g, steps[i].members()) != steps[i])
          return "chief step is not a subgroup";
        if (!is_normal(g, steps[i])) return "chief step is not normal in G";
        if (i == 0) continue;
        if (!steps[i - 1].subset_of(steps[i]) || steps[i - 1] == steps[i])
          return "chief series not strictly increasing";
        long f = steps[i].count() / steps[i - 1].count();
        if (f != c.chief.factor_orders[i - 1]) return "chief factor order mismatch";
        if (!is_prime(f)) return "chief factor is not of prime order";
      }
      return std::nullopt;
    }

    case CertKind::derived: {
      const auto& steps = c.derived;
      if (steps.empty() || steps.front() != g.identity_mask() || steps.back() != g.full_mask())
        return "derived series endpoints wrong";
      for (std::size_t i = 1; i < steps.size(); ++i) {
        if (subgroup_closure(g, steps[i].members()) != steps[i])
          return "derived step is not a subgroup";
        if (!steps[i - 1].subset_of(steps[i])) return "derived series not increasing";
        if (!is_normal_in(g, steps[i - 1], steps[i])) return "derived step not normal";
        for (int a : steps[i].members())
          for (int b : steps[i].members())
            if (!steps[i - 1].test(g.commutator(a, b))) return "derived factor is not abelian";
      }
      return std::nullopt;
    }

    case CertKind::hall: {
      if (subgroup_closure(g, c.hall_mask.members()) != c.hall_mask)
        return "hall mask is not a subgroup";
      if (!is_normal(g, c.hall_mask)) return "hall subgroup is not normal";
      if (c.hall_mask.count() != pi_part(g.order(), c.pi))
        return "hall subgroup order is not the full pi-part";
      if (!order_is_pi(c.hall_mask.count(), c.pi)) return "hall subgroup is not a pi-group";
      return std::nullopt;
    }

    case CertKind::strict_pc: {
      if (subgroup_closure(g, c.hall_mask.members()) != c.hall_mask)
        return "sylow mask is not a subgroup";
      if (!is_normal(g, c.hall_mask)) return "sylow subgroup is not normal";
      if (c.hall_mask.count() != p_part(g.order(), c.p)) return "mask is not a full Sylow subgroup";
      Quotient q = quotient(g, c.hall_mask);
      if (!q.group.is_abelian()) return "quotient by the Sylow subgroup is not abelian";
      if ((c.p - 1) % exponent(q.group) != 0) return "quotient exponent does not divide p-1";
      return std::nullopt;
    }

    case CertKind::h_times_v: {
      if (c.v_mask.count() != 4) return "V mask does not have four elements";
      for (int x : c.v_mask.members()) {
        if (g.element_order(x) > 2) return "V mask contains an element of order > 2";
        for (int a = 0; a < g.order(); ++a)
          if (g.mul(x, a) != g.mul(a, x)) return "V mask is not central";
      }
      if (!is_subgroup_mask(g, c.v_mask)) return "V mask is not a subgroup";
      if (!is_subgroup_mask(g, c.h_mask)) return "H mask is not a subgroup";
      if (c.h_mask.count() % 2 == 0) return "H does not have odd order";
      if (c.h_mask.count() * 4 != g.order()) return "decomposition orders do not multiply up";
      if ((c.h_mask & c.v_mask).count() != 1) return "H and V do not intersect trivially";
      if (product_mask(g, c.h_mask, c.v_mask).count() != g.order())
        return "H and V do not generate G";
      return detail::check_chain_structure(g, c.chain, c.h_mask);
    }

    case CertKind::abelian_rule: {
      if (!g.is_abelian()) return "abelian rule certificate on a nonabelian group";
      if (abelian_invariants(g) != c.invariants) return "stored invariants are wrong";
      if (!abelian_aut_supersolvable_rule(c.invariants)) return "rule does not hold";
      return std::nullopt;
    }
  }
  return "unknown certificate kind";
}

}  // namespace grp
