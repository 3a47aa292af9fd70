#pragma once

#include <atomic>
#include <chrono>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "grp/catalog.hpp"
#include "grp/classify.hpp"
#include "grp/group.hpp"
#include "grp/morphisms.hpp"
#include "grp/structure.hpp"

namespace grp {

struct HarnessOptions {
  long aut_cap = kDefaultAutCap;
  long end_cap = kDefaultEndCap;
  int max_order = 0;  // 0 = whole catalog
  int workers = 1;
  std::uint64_t seed = 20250810;  // sampled-subgroup randomness
  BuildOptions build;
};

// Portable deterministic RNG for sampled subgroups (independent of the
// standard library's distribution implementations).
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- records ----------------------------------------------------------------

struct VerdictSummary {
  char value = 's';  // 't' | 'f' | 's'
  std::string skip_reason;
  std::string method;
};

inline VerdictSummary summarize(const Verdict& v) {
  VerdictSummary s;
  s.value = v.truthy() ? 't' : (v.skipped() ? 's' : 'f');
  s.skip_reason = v.skip_reason;
  s.method = v.method;
  return s;
}

struct VerificationRecord {
  std::string id;
  int order = 0;
  VerdictSummary ultrasolvable, fully_solvable, aut_supersolvable, condition2;
  long aut_order = -1;  // -1 when the enumeration was capped
  std::string aut_order_skip;
  char main_theorem_agrees = 's';  // 't' | 'f' | 's'
  std::map<std::string, double> timings_ms;
  nlohmann::json certificates = nlohmann::json::object();
};

namespace detail {

inline nlohmann::json mask_json(const Bitmask& m) { return nlohmann::json(m.members()); }

inline Bitmask mask_from_json(const nlohmann::json& j, int n) {
  Bitmask m(n);
  for (int x : j.get<std::vector<int>>()) m.set(x);
  return m;
}

inline const char* invariance_name(InvarianceKind k) {
  switch (k) {
    case InvarianceKind::none: return "none";
    case InvarianceKind::automorphism_set: return "automorphism_set";
    case InvarianceKind::endomorphism_set: return "endomorphism_set";
    case InvarianceKind::canonical_abelian: return "canonical_abelian";
  }
  return "none";
}

inline InvarianceKind invariance_from_name(const std::string& s) {
  if (s == "automorphism_set") return InvarianceKind::automorphism_set;
  if (s == "endomorphism_set") return InvarianceKind::endomorphism_set;
  if (s == "canonical_abelian") return InvarianceKind::canonical_abelian;
  return InvarianceKind::none;
}

inline nlohmann::json chain_json(const ChainCertificate& c) {
  nlohmann::json j;
  j["invariance"] = invariance_name(c.invariance);
  j["steps"] = nlohmann::json::array();
  for (const auto& s : c.steps) j["steps"].push_back(mask_json(s));
  j["witnesses"] = c.cyclic_witness;
  if (!c.canonical.empty()) {
    j["canonical"] = nlohmann::json::array();
    for (const auto& s : c.canonical)
      j["canonical"].push_back({{"p", s.prime}, {"j", s.power_exp}, {"k", s.torsion_exp}});
  }
  return j;
}

inline ChainCertificate chain_from_json(const nlohmann::json& j, int n) {
  ChainCertificate c;
  c.invariance = invariance_from_name(j.at("invariance").get<std::string>());
  for (const auto& s : j.at("steps")) c.steps.push_back(mask_from_json(s, n));
  c.cyclic_witness = j.at("witnesses").get<std::vector<int>>();
  if (j.contains("canonical"))
    for (const auto& s : j.at("canonical"))
      c.canonical.push_back(
          CanonStep{s.at("p").get<long>(), s.at("j").get<int>(), s.at("k").get<int>()});
  return c;
}

inline nlohmann::json certificate_json(const FiniteGroup& g, const Certificate& c) {
  nlohmann::json j;
  switch (c.kind) {
    case CertKind::cyclic_chain:
      j["kind"] = "cyclic_chain";
      j["chain"] = chain_json(c.chain);
      break;
    case CertKind::h_times_v:
      j["kind"] = "h_times_v";
      j["h"] = mask_json(c.h_mask);
      j["v"] = mask_json(c.v_mask);
      j["chain"] = chain_json(c.chain);
      break;
    case CertKind::abelian_rule: {
      j["kind"] = "abelian_rule";
      nlohmann::json inv = nlohmann::json::object();
      for (const auto& [p, e] : c.invariants) inv[std::to_string(p)] = e;
      j["invariants"] = inv;
      break;
    }
    case CertKind::chief: {
      j["kind"] = "chief";
      j["factor_orders"] = c.chief.factor_orders;
      j["steps"] = nlohmann::json::array();
      for (const auto& s : c.chief.steps) j["steps"].push_back(mask_json(s));
      break;
    }
    default:
      j["kind"] = "other";
  }
  (void)g;
  return j;
}

}  // namespace detail

// Per-entry verification: both sides of the main theorem computed
// independently, plus the fully-solvable verdict and timings. Every
// certificate produced here is pushed through the independent checker
// before the record is returned.
inline VerificationRecord verify_entry(const CatalogEntry& entry, const HarnessOptions& opts) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t) {
    return std::chrono::duration<double, std::milli>(clock::now() - t).count();
  };
  VerificationRecord rec;
  rec.id = entry.id;
  rec.order = entry.order;

  auto t = clock::now();
  FiniteGroup g = realize(entry, opts.build);
  rec.timings_ms["realize"] = ms_since(t);

  t = clock::now();
  AutEnumeration aut = try_enumerate_automorphisms(g, opts.aut_cap);
  rec.timings_ms["aut_enum"] = ms_since(t);
  if (aut.capped()) {
    rec.aut_order = -1;
    rec.aut_order_skip = "AutCapExceeded";
  } else {
    rec.aut_order = long(aut.maps->size());
  }

  auto require_valid = [&](const FiniteGroup& about, const Verdict& v, const char* what) {
    if (auto err = certificate_error(about, v))
      throw Error(std::string("certificate check failed for ") + what + " of " + entry.id +
                  ": " + *err);
  };

  t = clock::now();
  Verdict ultra = is_ultrasolvable(g, aut);
  rec.timings_ms["ultrasolvable"] = ms_since(t);
  require_valid(g, ultra, "ultrasolvable");
  rec.ultrasolvable = summarize(ultra);
  if (ultra.truthy())
    rec.certificates["ultrasolvable"] = detail::certificate_json(g, *ultra.cert);

  // side 1 of the main theorem: supersolvability of Aut(G) as a group
  t = clock::now();
  Verdict autss;
  if (!aut.capped()) {
    AutGroup ag = aut_as_group(*aut.maps, opts.build);
    autss = is_supersolvable(ag.group);
    autss.method = "aut-as-group+chief-series";
    require_valid(ag.group, autss, "aut_supersolvable");
    if (autss.truthy()) {
      rec.certificates["aut_supersolvable"] = detail::certificate_json(ag.group, *autss.cert);
      rec.certificates["aut_supersolvable"]["aut_order"] = ag.group.order();
      rec.certificates["aut_supersolvable"]["checked"] = true;
    }
  } else {
    autss = aut_supersolvable(g, aut, opts.build);  // abelian rule or skipped
    if (autss.truthy()) {
      require_valid(g, autss, "aut_supersolvable");
      rec.certificates["aut_supersolvable"] = detail::certificate_json(g, *autss.cert);
    }
  }
  rec.timings_ms["aut_supersolvable"] = ms_since(t);
  rec.aut_supersolvable = summarize(autss);

  // side 2: ultrasolvable or H x Klein-four with H ultrasolvable of odd order
  t = clock::now();
  Verdict cond2 = condition2(g, aut, opts.aut_cap, opts.build);
  rec.timings_ms["condition2"] = ms_since(t);
  require_valid(g, cond2, "condition2");
  rec.condition2 = summarize(cond2);
  if (cond2.truthy()) rec.certificates["condition2"] = detail::certificate_json(g, *cond2.cert);

  t = clock::now();
  EndEnumeration endos = try_enumerate_endomorphisms(g, opts.end_cap);
  Verdict fully = is_fully_solvable(g, endos);
  rec.timings_ms["fully_solvable"] = ms_since(t);
  require_valid(g, fully, "fully_solvable");
  rec.fully_solvable = summarize(fully);
  if (fully.truthy())
    rec.certificates["fully_solvable"] = detail::certificate_json(g, *fully.cert);

  if (autss.skipped() || cond2.skipped())
    rec.main_theorem_agrees = 's';
  else
    rec.main_theorem_agrees = autss.truthy() == cond2.truthy() ? 't' : 'f';
  return rec;
}

// Entries are verified independently (in parallel when workers > 1) and the
// records merged back in catalog order.
inline std::vector<VerificationRecord> verify_main(const std::vector<CatalogEntry>& entries,
                                                   const HarnessOptions& opts = {}) {
  std::vector<const CatalogEntry*> work;
  for (const auto& e : entries)
    if (opts.max_order == 0 || e.order <= opts.max_order) work.push_back(&e);
  std::vector<VerificationRecord> records(work.size());
  if (opts.workers <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) records[i] = verify_entry(*work[i], opts);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < opts.workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= work.size()) return;
        records[i] = verify_entry(*work[i], opts);
      }
    });
  for (auto& th : pool) th.join();
  return records;
}

// ---- counting ----------------------------------------------------------------

enum class PredicateId { ultrasolvable, fully_solvable, supersolvable, solvable };

inline PredicateId parse_predicate(const std::string& s) {
  if (s == "ultrasolvable") return PredicateId::ultrasolvable;
  if (s == "fully-solvable") return PredicateId::fully_solvable;
  if (s == "supersolvable") return PredicateId::supersolvable;
  if (s == "solvable") return PredicateId::solvable;
  throw InvalidParameter("unknown predicate: " + s +
                         " (want ultrasolvable|fully-solvable|supersolvable|solvable)");
}

// Exact count of entries of the given order satisfying the predicate.
// Skipped verdicts abort: counts must be exact.
inline long count_predicate(const std::vector<CatalogEntry>& entries, int order,
                            PredicateId pred, const HarnessOptions& opts = {}) {
  long count = 0;
  std::vector<std::string> skipped;
  for (const auto& e : entries) {
    if (e.order != order) continue;
    FiniteGroup g = realize(e, opts.build);
    Verdict v;
    switch (pred) {
      case PredicateId::ultrasolvable:
        v = is_ultrasolvable(g, try_enumerate_automorphisms(g, opts.aut_cap));
        break;
      case PredicateId::fully_solvable:
        v = is_fully_solvable(g, try_enumerate_endomorphisms(g, opts.end_cap));
        break;
      case PredicateId::supersolvable:
        v = is_supersolvable(g);
        break;
      case PredicateId::solvable:
        v = is_solvable(g);
        break;
    }
    if (v.skipped())
      skipped.push_back(e.id);
    else if (v.truthy())
      ++count;
  }
  if (!skipped.empty()) throw SkippedEntriesPresent(skipped);
  return count;
}

// ---- lemma suites -------------------------------------------------------------

struct LemmaEntryResult {
  std::string id;
  char status = 'p';  // 'p' pass | 'f' fail | 's' skip
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  std::vector<LemmaEntryResult> entries;
  int passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }

  void add(const std::string& id, char status, std::string detail = {}) {
    entries.push_back({id, status, std::move(detail)});
    if (status == 'p') ++passed;
    else if (status == 'f') ++failed;
    else ++skipped;
  }
};

inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{
      "sylow-tower", "pcore",         "baer",       "abelian-rule",
      "pgroup-equiv", "two-group-corollary", "corsi-tani", "hierarchy"};
  return ids;
}

namespace detail {

inline void lemma_sylow_tower(const FiniteGroup& g, const std::string& id, LemmaReport& rep) {
  if (!is_supersolvable(g).truthy()) return;  // out of hypothesis
  for (long n = 2; n <= 64; ++n) {
    std::vector<long> pi;
    for (long p : prime_divisors(g.order()))
      if (p >= n) pi.push_back(p);
    if (!normal_hall(g, pi)) {
      rep.add(id, 'f', "no normal Hall subgroup for primes >= " + std::to_string(n));
      return;
    }
  }
  rep.add(id, 'p');
}

inline void lemma_pcore(const FiniteGroup& g, const std::string& id, long aut_cap,
                        const BuildOptions& build, LemmaReport& rep) {
  long p = pgroup_prime(g);
  if (p == 0 || g.is_abelian()) return;  // domain: nonabelian p-groups
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  if (aut.capped()) {
    rep.add(id, 's', "AutCapExceeded");
    return;
  }
  AutGroup ag = aut_as_group(*aut.maps, build);
  std::vector<long> pprime;
  for (long q : prime_divisors(ag.group.order()))
    if (q != p) pprime.push_back(q);
  if (o_pi(ag.group, pprime).count() == 1)
    rep.add(id, 'p');
  else
    rep.add(id, 'f', "O_p'(Aut) is nontrivial");
}

inline void lemma_baer(const FiniteGroup& g, const std::string& id, LemmaReport& rep) {
  bool ss = is_supersolvable(g).truthy();
  for (long p : prime_divisors(g.order()))
    if (is_strictly_p_closed(g, p).truthy() && !ss) {
      rep.add(id, 'f', "strictly " + std::to_string(p) + "-closed but not supersolvable");
      return;
    }
  rep.add(id, 'p');
}

inline void lemma_abelian_rule(const FiniteGroup& g, const std::string& id, long aut_cap,
                               long end_cap, const BuildOptions& build, LemmaReport& rep) {
  if (!g.is_abelian()) return;
  bool rule = abelian_aut_supersolvable_rule(abelian_invariants(g));
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  Verdict u = is_ultrasolvable(g, aut);
  Verdict f = is_fully_solvable(g, try_enumerate_endomorphisms(g, end_cap));
  if (!u.skipped() && !f.skipped() && u.truthy() != f.truthy()) {
    rep.add(id, 'f', "ultrasolvable and fully solvable disagree on an abelian group");
    return;
  }
  if (aut.capped()) {
    rep.add(id, 's', "AutCapExceeded; ultra==fully held");
    return;
  }
  Verdict generic = aut_supersolvable(g, aut, build);
  if (generic.truthy() != rule)
    rep.add(id, 'f', "invariant rule disagrees with the chief-series verdict");
  else
    rep.add(id, 'p');
}

inline void lemma_pgroup_equiv(const FiniteGroup& g, const std::string& id, long aut_cap,
                               std::uint64_t seed, const BuildOptions& build,
                               LemmaReport& rep) {
  long p = pgroup_prime(g);
  if (p == 0 || g.order() > 16) return;  // domain: p-groups of order <= 16
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  if (aut.capped()) {
    rep.add(id, 's', "AutCapExceeded");
    return;
  }
  AutGroup ag = aut_as_group(*aut.maps, build);
  int na = ag.group.order();

  std::set<std::vector<int>> subgroup_sets;
  for (int a = 0; a < na; ++a)
    subgroup_sets.insert(subgroup_closure(ag.group, std::vector<int>{a}).members());
  SplitMix64 rng{seed ^ fnv1a(id)};
  for (int s = 0; s < 20; ++s) {
    int a = int(rng.below(na)), b = int(rng.below(na));
    subgroup_sets.insert(subgroup_closure(ag.group, std::vector<int>{a, b}).members());
  }

  Quotient frat = quotient(g, frattini_pgroup(g, p), build);
  for (const auto& members : subgroup_sets) {
    MapSet sub{&g, MapKind::automorphisms, true, {}};
    for (int e : members) sub.maps.push_back(ag.maps[e]);
    bool v1 = is_A_solvable(g, sub).truthy();

    MapSet induced{&frat.group, MapKind::automorphisms, true, {}};
    for (const auto& m : sub.maps) {
      GroupMap im = induced_on_quotient(frat, m);
      if (!is_automorphism(im)) {
        rep.add(id, 'f', "induced map on P/Phi(P) is not an automorphism");
        return;
      }
      induced.maps.push_back(std::move(im));
    }
    bool v2 = is_A_solvable(frat.group, induced).truthy();

    Bitmask mask(na);
    for (int e : members) mask.set(e);
    auto restr = mask_as_group(ag.group, mask, build);
    bool v3 = is_strictly_p_closed(restr.group, p, build).truthy();

    if (v1 != v2 || v2 != v3) {
      rep.add(id, 'f',
              "equivalence broken for a subgroup of Aut of order " +
                  std::to_string(members.size()));
      return;
    }
  }
  rep.add(id, 'p');
}

inline void lemma_two_group(const FiniteGroup& g, const std::string& id, long aut_cap,
                            LemmaReport& rep) {
  if (pgroup_prime(g) != 2) return;  // domain: 2-groups
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  Verdict u = is_ultrasolvable(g, aut);
  unsigned long long aut_order;
  if (!aut.capped()) {
    aut_order = aut.maps->size();
  } else if (g.is_abelian()) {
    aut_order = abelian_aut_order(abelian_invariants(g));
  } else {
    rep.add(id, 's', "AutCapExceeded");
    return;
  }
  if (u.skipped()) {
    rep.add(id, 's', u.skip_reason);
    return;
  }
  bool pow2 = (aut_order & (aut_order - 1)) == 0;
  if (u.truthy() == pow2)
    rep.add(id, 'p');
  else
    rep.add(id, 'f', "|Aut| = " + std::to_string(aut_order));
}

inline void lemma_corsi_tani(const FiniteGroup& g, const std::string& id, long aut_cap,
                             const BuildOptions& build, LemmaReport& rep) {
  if (pgroup_prime(g) == 0) return;  // domain: p-groups, excluding Klein four
  if (g.order() == 4 && exponent(g) == 2) return;
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  Verdict ss = aut_supersolvable(g, aut, build);
  Verdict u = is_ultrasolvable(g, aut);
  if (ss.skipped() || u.skipped()) {
    rep.add(id, 's', ss.skip_reason + u.skip_reason);
    return;
  }
  if (ss.truthy() == u.truthy())
    rep.add(id, 'p');
  else
    rep.add(id, 'f', "Aut supersolvable and ultrasolvable disagree on a p-group");
}

inline void lemma_hierarchy(const FiniteGroup& g, const std::string& id, long aut_cap,
                            long end_cap, const BuildOptions& build, LemmaReport& rep) {
  Verdict solv = is_solvable(g);
  Verdict ss = is_supersolvable(g);
  Verdict inn = is_A_solvable(g, inner_automorphisms(g));
  if (inn.truthy() != ss.truthy()) {
    rep.add(id, 'f', "Inn-chain search disagrees with the chief-series method");
    return;
  }
  if (inn.truthy() && !solv.truthy()) {
    rep.add(id, 'f', "supersolvable but not solvable");
    return;
  }
  AutEnumeration aut = try_enumerate_automorphisms(g, aut_cap);
  Verdict ultra = is_ultrasolvable(g, aut);
  Verdict fully = is_fully_solvable(g, try_enumerate_endomorphisms(g, end_cap));
  bool partial = ultra.skipped() || fully.skipped();
  if (!fully.skipped() && !ultra.skipped() && fully.truthy() && !ultra.truthy()) {
    rep.add(id, 'f', "fully solvable but not ultrasolvable");
    return;
  }
  if (!ultra.skipped() && ultra.truthy() && !inn.truthy()) {
    rep.add(id, 'f', "ultrasolvable but not supersolvable");
    return;
  }
  Verdict autss = aut_supersolvable(g, aut, build);
  if (!ultra.skipped() && !autss.skipped() && ultra.truthy() && !autss.truthy()) {
    rep.add(id, 'f', "ultrasolvable with non-supersolvable Aut");
    return;
  }
  rep.add(id, partial ? 's' : 'p', partial ? "caps limited some verdicts" : "");
}

}  // namespace detail

inline LemmaReport verify_lemma(const std::vector<CatalogEntry>& entries,
                                const std::string& lemma_id, const HarnessOptions& opts = {}) {
  LemmaReport rep;
  rep.lemma = lemma_id;
  bool known = false;
  for (const auto& id : lemma_ids()) known |= id == lemma_id;
  if (!known) throw UnknownLemma(lemma_id);

  for (const auto& e : entries) {
    if (opts.max_order != 0 && e.order > opts.max_order) continue;
    FiniteGroup g = realize(e, opts.build);
    if (lemma_id == "sylow-tower")
      detail::lemma_sylow_tower(g, e.id, rep);
    else if (lemma_id == "pcore")
      detail::lemma_pcore(g, e.id, opts.aut_cap, opts.build, rep);
    else if (lemma_id == "baer")
      detail::lemma_baer(g, e.id, rep);
    else if (lemma_id == "abelian-rule")
      detail::lemma_abelian_rule(g, e.id, opts.aut_cap, opts.end_cap, opts.build, rep);
    else if (lemma_id == "pgroup-equiv")
      detail::lemma_pgroup_equiv(g, e.id, opts.aut_cap, opts.seed, opts.build, rep);
    else if (lemma_id == "two-group-corollary")
      detail::lemma_two_group(g, e.id, opts.aut_cap, rep);
    else if (lemma_id == "corsi-tani")
      detail::lemma_corsi_tani(g, e.id, opts.aut_cap, opts.build, rep);
    else if (lemma_id == "hierarchy")
      detail::lemma_hierarchy(g, e.id, opts.aut_cap, opts.end_cap, opts.build, rep);
  }
  return rep;
}

// ---- report IO ----------------------------------------------------------------

inline nlohmann::json record_json(const VerificationRecord& r, bool with_timings = true) {
  auto vj = [](const VerdictSummary& v) {
    nlohmann::json j;
    j["value"] = std::string(1, v.value);
    if (!v.skip_reason.empty()) j["skip_reason"] = v.skip_reason;
    if (!v.method.empty()) j["method"] = v.method;
    return j;
  };
  nlohmann::json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["ultrasolvable"] = vj(r.ultrasolvable);
  j["fully_solvable"] = vj(r.fully_solvable);
  j["aut_supersolvable"] = vj(r.aut_supersolvable);
  j["condition2"] = vj(r.condition2);
  if (r.aut_order >= 0)
    j["aut_order"] = r.aut_order;
  else
    j["aut_order_skip"] = r.aut_order_skip;
  j["main_theorem_agrees"] = std::string(1, r.main_theorem_agrees);
  if (with_timings) {
    nlohmann::json t;
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  j["certificates"] = r.certificates;
  return j;
}

inline void write_records_jsonl(std::ostream& out, const std::vector<VerificationRecord>& recs,
                                bool with_timings = true) {
  for (const auto& r : recs) out << record_json(r, with_timings).dump() << "\n";
}

inline void write_summary_table(std::ostream& out,
                                const std::vector<VerificationRecord>& recs) {
  std::map<int, std::array<int, 6>> rows;  // order -> entries,ultra,fully,autss,agree,skip
  for (const auto& r : recs) {
    auto& row = rows[r.order];
    ++row[0];
    if (r.ultrasolvable.value == 't') ++row[1];
    if (r.fully_solvable.value == 't') ++row[2];
    if (r.aut_supersolvable.value == 't') ++row[3];
    if (r.main_theorem_agrees == 't') ++row[4];
    if (r.main_theorem_agrees == 's') ++row[5];
  }
  out << "order  groups  ultra  fully  aut-ss  agree  skip\n";
  for (const auto& [order, row] : rows) {
    out << std::setw(5) << order << std::setw(8) << row[0] << std::setw(7) << row[1]
        << std::setw(7) << row[2] << std::setw(8) << row[3] << std::setw(7) << row[4]
        << std::setw(6) << row[5] << "\n";
  }
  int disagreements = 0;
  std::vector<std::string> skips, cap_notes;
  for (const auto& r : recs) {
    if (r.main_theorem_agrees == 'f') ++disagreements;
    if (r.main_theorem_agrees == 's') skips.push_back(r.id);
    if (r.aut_order < 0) cap_notes.push_back(r.id + " (" + r.aut_order_skip + ")");
  }
  out << "entries: " << recs.size() << ", disagreements: " << disagreements << "\n";
  if (!skips.empty()) {
    out << "skipped (verdict undecidable under caps):";
    for (const auto& s : skips) out << " " << s;
    out << "\n";
  }
  if (!cap_notes.empty()) {
    out << "aut enumeration capped:";
    for (const auto& s : cap_notes) out << " " << s;
    out << "\n";
  }
}

// ---- certificates-only re-validation -------------------------------------------

// Re-validates every certificate stored in a report without re-running any
// chain search. Map sets named by the invariance kind are re-derived by
// enumeration; the chains themselves are taken from the report as-is.
inline int revalidate_report(std::istream& report, const std::vector<CatalogEntry>& entries,
                             const HarnessOptions& opts, std::ostream& log) {
  std::map<std::string, const CatalogEntry*> by_id;
  for (const auto& e : entries) by_id[e.id] = &e;
  int failures = 0, checked = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(report, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    std::string id = j.at("id").get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      log << "record " << id << ": not in catalog\n";
      ++failures;
      continue;
    }
    FiniteGroup g = realize(*it->second, opts.build);
    const auto& certs = j.at("certificates");

    auto check_chain_like = [&](const std::string& key) {
      if (!certs.contains(key)) return;
      const auto& cj = certs.at(key);
      std::string kind = cj.at("kind").get<std::string>();
      Verdict v;
      v.value = Verdict::Value::yes;
      Certificate c;
      if (kind == "cyclic_chain" || kind == "h_times_v") {
        c.kind = kind == "h_times_v" ? CertKind::h_times_v : CertKind::cyclic_chain;
        c.chain = detail::chain_from_json(cj.at("chain"), g.order());
        if (c.kind == CertKind::h_times_v) {
          c.h_mask = detail::mask_from_json(cj.at("h"), g.order());
          c.v_mask = detail::mask_from_json(cj.at("v"), g.order());
        }
        // re-derive the attached map set named by the invariance kind
        if (c.chain.invariance == InvarianceKind::automorphism_set) {
          if (c.kind == CertKind::h_times_v) {
            auto hs = mask_as_group(g, c.h_mask, opts.build);
            AutEnumeration ha = try_enumerate_automorphisms(hs.group, opts.aut_cap);
            if (!ha.capped()) {
              std::vector<int> h_of(g.order(), -1), v_of(g.order(), -1);
              for (int h : c.h_mask.members())
                for (int vv : c.v_mask.members()) {
                  int x = g.mul(h, vv);
                  h_of[x] = h;
                  v_of[x] = vv;
                }
              MapSet ext{&g, MapKind::automorphisms, false, {}};
              for (const auto& hm : ha.maps->maps) {
                GroupMap em{&g, &g, std::vector<std::uint16_t>(g.order())};
                for (int x = 0; x < g.order(); ++x) {
                  int himg = hs.to_parent[hm.images[hs.from_parent[h_of[x]]]];
                  em.images[x] = std::uint16_t(g.mul(himg, v_of[x]));
                }
                ext.maps.push_back(std::move(em));
              }
              c.chain.maps = std::make_shared<const MapSet>(std::move(ext));
            } else {
              c.chain.invariance = InvarianceKind::none;
            }
          } else {
            AutEnumeration aut = try_enumerate_automorphisms(g, opts.aut_cap);
            if (!aut.capped())
              c.chain.maps = aut.maps;
            else
              c.chain.invariance = InvarianceKind::none;
          }
        } else if (c.chain.invariance == InvarianceKind::endomorphism_set) {
          EndEnumeration en = try_enumerate_endomorphisms(g, opts.end_cap);
          if (!en.capped())
            c.chain.maps = en.maps;
          else
            c.chain.invariance = InvarianceKind::none;
        }
      } else if (kind == "abelian_rule") {
        c.kind = CertKind::abelian_rule;
        for (const auto& [ps, es] : cj.at("invariants").items())
          c.invariants[std::stol(ps)] = es.get<std::vector<int>>();
      } else {
        return;  // aut-side chief certificates are handled below
      }
      v.cert = std::move(c);
      ++checked;
      if (auto err = certificate_error(g, v)) {
        log << "record " << id << ": " << key << ": " << *err << "\n";
        ++failures;
      }
    };
    check_chain_like("ultrasolvable");
    check_chain_like("fully_solvable");
    check_chain_like("condition2");

    if (certs.contains("aut_supersolvable") &&
        certs.at("aut_supersolvable").at("kind") == "chief") {
      AutEnumeration aut = try_enumerate_automorphisms(g, opts.aut_cap);
      if (!aut.capped()) {
        AutGroup ag = aut_as_group(*aut.maps, opts.build);
        const auto& cj = certs.at("aut_supersolvable");
        Verdict v;
        v.value = Verdict::Value::yes;
        Certificate c;
        c.kind = CertKind::chief;
        c.chief.factor_orders = cj.at("factor_orders").get<std::vector<long>>();
        for (const auto& s : cj.at("steps"))
          c.chief.steps.push_back(detail::mask_from_json(s, ag.group.order()));
        v.cert = std::move(c);
        ++checked;
        if (auto err = certificate_error(ag.group, v)) {
          log << "record " << id << ": aut_supersolvable: " << *err << "\n";
          ++failures;
        }
      }
    } else if (certs.contains("aut_supersolvable") &&
               certs.at("aut_supersolvable").at("kind") == "abelian_rule") {
      const auto& cj = certs.at("aut_supersolvable");
      Verdict v;
      v.value = Verdict::Value::yes;
      Certificate c;
      c.kind = CertKind::abelian_rule;
      for (const auto& [ps, es] : cj.at("invariants").items())
        c.invariants[std::stol(ps)] = es.get<std::vector<int>>();
      v.cert = std::move(c);
      ++checked;
      if (auto err = certificate_error(g, v)) {
        log << "record " << id << ": aut_supersolvable: " << *err << "\n";
        ++failures;
      }
    }
  }
  log << "re-validated " << checked << " certificates, " << failures << " failure(s)\n";
  return failures;
}

}  // namespace grp
