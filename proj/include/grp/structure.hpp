#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "grp/cert.hpp"
#include "grp/group.hpp"
#include "grp/subgroup.hpp"

namespace grp {

// Least normal subgroup containing the seed: the subgroup generated by all
// conjugates of the seed elements.
inline Bitmask normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  int n = g.order();
  Bitmask conj_set(n);
  conj_set.set(0);
  for (int s : seed)
    for (int a = 0; a < n; ++a) conj_set.set(g.conj(a, s));
  return subgroup_closure(g, conj_set);
}

namespace detail {
// Deterministic subgroup order: by popcount, then by member list.
inline bool mask_less(const Bitmask& a, const Bitmask& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ma = a.members(), mb = b.members();
  return ma < mb;
}

// Normal closures of the nontrivial conjugacy classes, deduplicated.
inline std::vector<Bitmask> class_closures(const FiniteGroup& g) {
  std::vector<Bitmask> out;
  std::set<std::vector<int>> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    Bitmask n = normal_closure(g, cls);
    if (seen.insert(n.members()).second) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}
}  // namespace detail

// All minimal elements of {normal_closure(G, {x}) : x != identity}. Every
// minimal normal subgroup arises this way. Sorted by (popcount, members).
inline std::vector<Bitmask> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) throw TrivialGroup("minimal_normal_subgroups: |G| = 1");
  // The closure of a class equals the closure of any of its elements.
  std::vector<Bitmask> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    closures.push_back(normal_closure(g, {cls[0]}));
  }
  std::vector<Bitmask> mins;
  for (const auto& n : closures) {
    bool minimal = true;
    for (const auto& m : closures)
      if (m != n && m.subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal && std::find(mins.begin(), mins.end(), n) == mins.end()) mins.push_back(n);
  }
  std::sort(mins.begin(), mins.end(), detail::mask_less);
  return mins;
}

// Chief series, built by repeatedly removing the least minimal normal
// subgroup of the current quotient and pulling it back. Steps are normal in
// G (pullbacks of normal subgroups under the chain of projections). The
// optional chooser overrides the deterministic pick; it is used by the
// Jordan-Hoelder independence property test.
inline ChiefSeriesRecord chief_series(
    const FiniteGroup& g,
    const std::function<int(const std::vector<Bitmask>&)>& chooser = nullptr,
    const BuildOptions& opts = {}) {
  ChiefSeriesRecord rec;
  rec.steps.push_back(g.identity_mask());
  if (g.order() == 1) return rec;

  FiniteGroup cur = g;  // value copy; shrinks every round
  std::vector<std::uint16_t> proj(g.order());
  for (int i = 0; i < g.order(); ++i) proj[i] = std::uint16_t(i);

  while (cur.order() > 1) {
    auto mins = minimal_normal_subgroups(cur);
    int pick = chooser ? chooser(mins) : 0;
    const Bitmask& n = mins[pick];
    Bitmask pulled(g.order());
    for (int x = 0; x < g.order(); ++x)
      if (n.test(proj[x])) pulled.set(x);
    rec.steps.push_back(pulled);
    rec.factor_orders.push_back(n.count());

    Quotient q = quotient(cur, n, opts);
    for (int x = 0; x < g.order(); ++x) proj[x] = q.coset_of[proj[x]];
    cur = std::move(q.group);
  }
  return rec;
}

// All normal subgroups: the join-closure of the conjugacy-class normal
// closures, plus the identity. Joins of normal subgroups are their setwise
// products.
inline std::vector<Bitmask> normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Bitmask> out;
  auto add = [&](Bitmask m) {
    if (seen.insert(m.members()).second) out.push_back(std::move(m));
  };
  add(g.identity_mask());
  for (auto& c : detail::class_closures(g)) add(std::move(c));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(product_mask(g, out[i], out[j]));
  std::sort(out.begin(), out.end(), detail::mask_less);
  return out;
}

inline bool order_is_pi(long order, const std::vector<long>& pi) {
  for (long p = 2; p <= order; ++p) {
    if (!is_prime(p) || order % p != 0) continue;
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) return false;
    while (order % p == 0) order /= p;
  }
  return true;
}

// Largest normal pi-subgroup: the join of all normal pi-subgroups, computed
// as the product of the pi class closures (each normal, and joins of normal
// pi-subgroups stay pi).
inline Bitmask o_pi(const FiniteGroup& g, const std::vector<long>& pi) {
  Bitmask acc = g.identity_mask();
  for (const auto& c : detail::class_closures(g))
    if (order_is_pi(c.count(), pi)) acc = product_mask(g, acc, c);
  return acc;
}

inline Bitmask o_p(const FiniteGroup& g, long p) { return o_pi(g, {p}); }

inline long pi_part(long n, const std::vector<long>& pi) {
  long q = 1;
  for (long p : pi)
    if (p >= 2 && is_prime(p)) q *= p_part(n, p);
  return q;
}

// o_pi when its order is the full pi-part of |G|, else absent.
inline std::optional<Bitmask> normal_hall(const FiniteGroup& g, const std::vector<long>& pi) {
  Bitmask h = o_pi(g, pi);
  if (h.count() == pi_part(g.order(), pi)) return h;
  return std::nullopt;
}

// Preimage in G of O_{p'}(G / O_p(G)).
inline Bitmask o_pp_prime(const FiniteGroup& g, long p, const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidParameter("o_pp_prime: p must be prime");
  Bitmask core = o_p(g, p);
  Quotient q = quotient(g, core, opts);
  std::vector<long> pprime;
  for (long r : prime_divisors(q.group.order()))
    if (r != p) pprime.push_back(r);
  Bitmask top = o_pi(q.group, pprime);
  Bitmask out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (top.test(q.coset_of[x])) out.set(x);
  return out;
}

// Returns p when |G| = p^k (k >= 1), else 0; order 1 returns 0.
inline long pgroup_prime(const FiniteGroup& g) { return prime_power_base(g.order()); }

inline void require_pgroup(const FiniteGroup& g, long p, const char* who) {
  if (!is_prime(p)) throw NotPGroup(std::string(who) + ": p must be prime");
  if (p_part(g.order(), p) != g.order())
    throw NotPGroup(std::string(who) + ": group order is not a power of p");
}

// Frattini subgroup of a p-group: generated by commutators and p-th powers.
inline Bitmask frattini_pgroup(const FiniteGroup& g, long p) {
  require_pgroup(g, p, "frattini_pgroup");
  int n = g.order();
  Bitmask gens(n);
  gens.set(0);
  for (int a = 0; a < n; ++a) {
    gens.set(g.pow(a, p));
    for (int b = 0; b < n; ++b) gens.set(g.commutator(a, b));
  }
  return subgroup_closure(g, gens);
}

// Omega(Z(P)) = {z in Z(P) : z^p = 1}.
inline Bitmask omega_center(const FiniteGroup& g, long p) {
  require_pgroup(g, p, "omega_center");
  Bitmask z = center(g);
  Bitmask out(g.order());
  for (int x : z.members())
    if (g.element_order(x) == 1 || g.element_order(x) == p) out.set(x);
  return out;
}

inline bool is_nilpotent(const FiniteGroup& g) {
  int n = g.order();
  for (long p : prime_divisors(n)) {
    long pp = p_part(n, p);
    Bitmask s(n);
    for (int x = 0; x < n; ++x)
      if (p_part(g.element_order(x), p) == g.element_order(x)) s.set(x);
    if (s.count() != pp || !is_subgroup_mask(g, s)) return false;
  }
  return true;
}

// ---- Abelian invariants ----------------------------------------------------

// Mask of p-power-order elements; a subgroup whenever G is abelian (it is
// the Sylow p-subgroup).
inline Bitmask abelian_sylow_mask(const FiniteGroup& g, long p) {
  Bitmask m(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (p_part(o, p) == o) m.set(x);
  }
  return m;
}

// Per prime, the ascending cyclic-factor exponents a_1 <= ... <= a_n of the
// Sylow subgroup. Splits off a maximal-order cyclic factor and finds a
// complement greedily; a subgroup K with K meet <x> trivial always extends
// to a complement when x has maximal order, so the greedy search cannot
// dead-end. Least-index tie-breaks keep the result deterministic.
inline std::map<long, std::vector<int>> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("abelian_invariants: group is not abelian");
  std::map<long, std::vector<int>> out;
  for (long p : prime_divisors(g.order())) {
    std::vector<int> exps;
    Bitmask work = abelian_sylow_mask(g, p);
    while (work.count() > 1) {
      int x = -1, best = 0;
      for (int y : work.members())
        if (g.element_order(y) > best) {
          best = g.element_order(y);
          x = y;
        }
      int a = 0;
      for (long q = 1; q < best; q *= p) ++a;
      exps.push_back(a);
      if (best == work.count()) break;  // the remaining factor is cyclic

      Bitmask cyc = subgroup_closure(g, std::vector<int>{x});
      long target = work.count() / best;
      Bitmask k(g.order());
      k.set(0);
      std::vector<int> kgens;
      while (k.count() < target) {
        bool extended = false;
        for (int y : work.members()) {
          if (k.test(y)) continue;
          std::vector<int> cand = kgens;
          cand.push_back(y);
          Bitmask kk = subgroup_closure(g, cand);
          if ((kk & cyc).count() == 1) {
            k = std::move(kk);
            kgens = std::move(cand);
            extended = true;
            break;
          }
        }
        if (!extended) throw Error("abelian_invariants: complement search dead-ended");
      }
      work = k;
    }
    std::sort(exps.begin(), exps.end());
    out[p] = exps;
  }
  return out;
}

// |Aut| of an abelian group from its invariants, per prime via the
// Hillar-Rhea formula, multiplied across primes.
inline unsigned long long abelian_aut_order(const std::map<long, std::vector<int>>& invs) {
  unsigned long long total = 1;
  for (const auto& [p, e] : invs) {
    int n = int(e.size());
    if (n == 0) continue;
    std::vector<int> c(n), d(n);
    for (int k = 0; k < n; ++k) {
      int lo = k, hi = k;
      while (lo > 0 && e[lo - 1] == e[k]) --lo;
      while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
      c[k] = lo + 1;  // 1-based
      d[k] = hi + 1;
    }
    auto ppow = [&](long long exp) {
      unsigned long long r = 1;
      for (long long i = 0; i < exp; ++i) r *= (unsigned long long)(p);
      return r;
    };
    unsigned long long f = 1;
    for (int k = 0; k < n; ++k) f *= ppow(d[k]) - ppow(k);
    for (int j = 0; j < n; ++j) f *= ppow((long long)(e[j]) * (n - d[j]));
    for (int i = 0; i < n; ++i) f *= ppow((long long)(e[i] - 1) * (n - c[i] + 1));
    total *= f;
  }
  return total;
}

// ---- Canonical fully invariant chains (abelian) ----------------------------

// Mask denoted by a CanonStep descriptor; see cert.hpp. Uses only element
// orders, power maps and setwise products.
inline Bitmask canonical_step_mask(const FiniteGroup& g, const CanonStep& s) {
  Bitmask acc = g.identity_mask();
  for (long q : prime_divisors(g.order())) {
    if (q >= s.prime) break;
    acc = product_mask(g, acc, abelian_sylow_mask(g, q));
  }
  Bitmask syl = abelian_sylow_mask(g, s.prime);
  long pj = 1;
  for (int i = 0; i < s.power_exp; ++i) pj *= s.prime;
  Bitmask imgj(g.order()), imgj1(g.order());
  for (int x : syl.members()) {
    imgj.set(g.pow(x, pj));
    imgj1.set(g.pow(x, pj * s.prime));
  }
  long pk = 1;
  for (int i = 0; i < s.torsion_exp; ++i) pk *= s.prime;
  Bitmask tors(g.order());
  for (int x : imgj.members())
    if (g.pow(x, pk) == 0) tors.set(x);
  return product_mask(g, product_mask(g, acc, tors), imgj1);
}

// The canonical characteristic chain of an abelian group whose invariants
// are strictly increasing at every prime: per prime p with type
// a_1 < ... < a_n, each power layer B_j = S^(p^j) is refined from its
// Frattini subgroup B_{j+1} by the subgroups {x in B_j : x^(p^(a_i - j)) = 1}
// * B_{j+1}, which step up by index p. Every chain member is a product of
// power images and torsion subgroups, hence fully invariant.
inline ChainCertificate canonical_fully_invariant_chain(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("canonical chain requires an abelian group");
  auto invs = abelian_invariants(g);
  for (const auto& [p, e] : invs)
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i - 1] >= e[i])
        throw InvariantsNotStrict("invariants at p = " + std::to_string(p) +
                                  " are not strictly increasing");

  ChainCertificate cert;
  cert.invariance = InvarianceKind::canonical_abelian;
  cert.steps.push_back(g.identity_mask());
  for (const auto& [p, e] : invs) {
    int amax = e.empty() ? 0 : e.back();
    for (int j = amax - 1; j >= 0; --j) {
      for (int a : e) {
        if (a <= j) continue;
        CanonStep s{p, j, a - j};
        Bitmask m = canonical_step_mask(g, s);
        const Bitmask& prev = cert.steps.back();
        if (!prev.subset_of(m) || m.count() != prev.count() * p)
          throw Error("canonical chain: unexpected step size");
        int w = -1;
        for (int x : m.members())
          if (!prev.test(x)) {
            w = x;
            break;
          }
        cert.steps.push_back(std::move(m));
        cert.cyclic_witness.push_back(w);
        cert.canonical.push_back(s);
      }
    }
  }
  if (cert.steps.back() != g.full_mask()) throw Error("canonical chain: did not reach G");
  return cert;
}

// The explicit characteristic series of an abelian p-group with strictly
// increasing invariants. When a map set is supplied, every step is verified
// invariant under each of its maps.
inline ChainCertificate abelian_char_series(const FiniteGroup& g, long p,
                                            const MapSet* verify_against = nullptr) {
  require_pgroup(g, p, "abelian_char_series");
  if (!g.is_abelian()) throw NotAbelian("abelian_char_series: group is not abelian");
  ChainCertificate cert = canonical_fully_invariant_chain(g);
  if (verify_against) {
    for (const auto& m : verify_against->maps)
      for (const auto& step : cert.steps)
        for (int x : step.members())
          if (!step.test(m.images[x])) throw Error("abelian_char_series: step not invariant");
  }
  return cert;
}

}  // namespace grp
