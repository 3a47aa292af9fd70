// Batch verification CLI: catalog sweeps for the main equivalence, exact
// predicate counts, lemma suites, and ad-hoc classification of one group
// given by permutation generators.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grp/catalog.hpp"
#include "grp/classify.hpp"
#include "grp/harness.hpp"

using namespace grp;

namespace {

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atol(v);
}

std::vector<std::vector<int>> parse_gens(const std::string& s) {
  std::vector<std::vector<int>> gens;
  std::stringstream per(s);
  std::string one;
  while (std::getline(per, one, ';')) {
    std::vector<int> img;
    std::stringstream nums(one);
    std::string tok;
    while (std::getline(nums, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      img.push_back(std::stoi(tok));
    }
    if (!img.empty()) gens.push_back(std::move(img));
  }
  return gens;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["value"] = v.truthy() ? "true" : (v.skipped() ? "skipped" : "false");
  if (!v.skip_reason.empty()) j["skip_reason"] = v.skip_reason;
  if (!v.method.empty()) j["method"] = v.method;
  return j;
}

int run_classify(const std::string& gens_arg, const HarnessOptions& opts) {
  auto gens = parse_gens(gens_arg);
  if (gens.empty()) {
    std::cerr << "classify: --gens needs at least one image array\n";
    return 2;
  }
  PermSpec spec{int(gens[0].size()), gens};
  FiniteGroup g = from_generators(spec, opts.build.max_order, opts.build);

  nlohmann::json out;
  out["order"] = g.order();
  out["abelian"] = g.is_abelian();
  out["solvable"] = verdict_json(is_solvable(g));
  out["supersolvable"] = verdict_json(is_supersolvable(g));
  out["two_nilpotent"] = verdict_json(is_2_nilpotent(g));
  nlohmann::json spc = nlohmann::json::object();
  for (long p : prime_divisors(g.order()))
    spc[std::to_string(p)] = verdict_json(is_strictly_p_closed(g, p, opts.build));
  out["strictly_p_closed"] = spc;
  out["inn_solvable"] = verdict_json(is_A_solvable(g, inner_automorphisms(g)));

  AutEnumeration aut = try_enumerate_automorphisms(g, opts.aut_cap);
  if (!aut.capped()) out["aut_order"] = aut.maps->size();
  Verdict ultra = is_ultrasolvable(g, aut);
  out["ultrasolvable"] = verdict_json(ultra);
  out["aut_supersolvable"] = verdict_json(aut_supersolvable(g, aut, opts.build));
  Verdict cond2 = condition2(g, aut, opts.aut_cap, opts.build);
  out["condition2"] = verdict_json(cond2);
  Verdict fully = is_fully_solvable(g, try_enumerate_endomorphisms(g, opts.end_cap));
  out["fully_solvable"] = verdict_json(fully);

  nlohmann::json certs = nlohmann::json::object();
  auto attach = [&](const char* key, const Verdict& v) {
    if (v.truthy() && v.cert) certs[key] = detail::certificate_json(g, *v.cert);
  };
  attach("ultrasolvable", ultra);
  attach("condition2", cond2);
  attach("fully_solvable", fully);
  out["certificates"] = certs;

  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group verification harness"};
  app.require_subcommand(1);

  HarnessOptions opts;
  opts.aut_cap = env_long("GRPCHECK_AUT_CAP", kDefaultAutCap);
  opts.end_cap = env_long("GRPCHECK_END_CAP", kDefaultEndCap);

  std::string catalog_path, out_path, recheck_path, predicate = "ultrasolvable";
  std::string gens_arg, lemma_id;
  int order = 0;

  app.add_option("--seed", opts.seed, "seed for sampled-subgroup randomness");

  auto* verify = app.add_subcommand("verify", "verify theorem statements over a catalog");
  auto* vmain = verify->add_subcommand("main", "main equivalence: Aut supersolvable vs "
                                               "ultrasolvable-or-HxV");
  vmain->add_option("--catalog", catalog_path, "catalog file (JSON lines)")->required();
  vmain->add_option("--max-order", opts.max_order, "only entries up to this order");
  vmain->add_option("--aut-cap", opts.aut_cap, "automorphism enumeration cap");
  vmain->add_option("--end-cap", opts.end_cap, "endomorphism enumeration cap");
  vmain->add_option("--workers", opts.workers, "parallel workers");
  vmain->add_option("--out", out_path, "write JSONL records here");
  vmain->add_option("--certificates-only", recheck_path,
                    "re-validate the certificates stored in this report instead of searching");

  auto* count = app.add_subcommand("count", "exact predicate count at one order");
  count->add_option("--catalog", catalog_path, "catalog file")->required();
  count->add_option("--order", order, "group order")->required();
  count->add_option("--predicate", predicate,
                    "ultrasolvable|fully-solvable|supersolvable|solvable")
      ->required();
  count->add_option("--aut-cap", opts.aut_cap, "automorphism enumeration cap");
  count->add_option("--end-cap", opts.end_cap, "endomorphism enumeration cap");

  auto* lemma = app.add_subcommand("lemma", "run one lemma suite over the catalog");
  lemma->add_option("id", lemma_id, "sylow-tower|pcore|baer|abelian-rule|pgroup-equiv|"
                                    "two-group-corollary|corsi-tani|hierarchy")
      ->required();
  lemma->add_option("--catalog", catalog_path, "catalog file")->required();
  lemma->add_option("--max-order", opts.max_order, "only entries up to this order");
  lemma->add_option("--aut-cap", opts.aut_cap, "automorphism enumeration cap");
  lemma->add_option("--end-cap", opts.end_cap, "endomorphism enumeration cap");

  auto* classify = app.add_subcommand("classify", "all verdicts for one ad-hoc group");
  classify->add_option("--gens", gens_arg,
                       "semicolon-separated 0-based image arrays, e.g. \"1,0,2;1,2,0\"")
      ->required();
  classify->add_option("--aut-cap", opts.aut_cap, "automorphism enumeration cap");
  classify->add_option("--end-cap", opts.end_cap, "endomorphism enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (vmain->parsed()) {
      auto entries = ingest_catalog_file(catalog_path);
      if (!recheck_path.empty()) {
        std::ifstream rep(recheck_path);
        if (!rep) {
          std::cerr << "cannot open report: " << recheck_path << "\n";
          return 2;
        }
        int failures = revalidate_report(rep, entries, opts, std::cout);
        return failures == 0 ? 0 : 1;
      }
      auto records = verify_main(entries, opts);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return 2;
        }
        write_records_jsonl(out, records);
      }
      write_summary_table(std::cout, records);
      for (const auto& r : records)
        if (r.main_theorem_agrees == 'f') return 1;
      return 0;
    }
    if (count->parsed()) {
      auto entries = ingest_catalog_file(catalog_path);
      try {
        std::cout << count_predicate(entries, order, parse_predicate(predicate), opts) << "\n";
      } catch (const SkippedEntriesPresent& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (lemma->parsed()) {
      auto entries = ingest_catalog_file(catalog_path);
      LemmaReport rep = verify_lemma(entries, lemma_id, opts);
      for (const auto& e : rep.entries) {
        std::cout << rep.lemma << " " << e.id << " "
                  << (e.status == 'p' ? "pass" : e.status == 'f' ? "FAIL" : "skip");
        if (!e.detail.empty()) std::cout << " (" << e.detail << ")";
        std::cout << "\n";
      }
      std::cout << rep.lemma << ": " << rep.passed << " passed, " << rep.failed
                << " failed, " << rep.skipped << " skipped\n";
      return rep.ok() ? 0 : 1;
    }
    if (classify->parsed()) return run_classify(gens_arg, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
