// Builds the vendored small-groups catalog (orders 1..63) from scratch.
//
// Method: every solvable group has a normal subgroup of prime index, so the
// groups of order n are exactly the cyclic extensions of the groups of order
// n/p by C_p (over all primes p | n), plus the nonsolvable A5 at order 60.
// An extension of N by C_p is determined by a pair (alpha, t) with
// alpha in Aut(N), t in N, alpha(t) = t and alpha^p = conjugation by t:
// the group is <N, x> with x u x^-1 = alpha(u) and x^p = t. Candidates are
// reduced up to isomorphism; the per-order class counts are validated
// against the published numbers before anything is written.
//
// Regeneration: ./gen_catalog --out data/smallgroups63.jsonl
// Runtime is a few minutes; the output is committed, not rebuilt in CI.

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grp/catalog.hpp"
#include "grp/classify.hpp"
#include "grp/group.hpp"
#include "grp/morphisms.hpp"
#include "grp/structure.hpp"

using namespace grp;

namespace {

// Published number of groups of each order 1..63.
const int kExpectedCounts[63] = {
    1, 1, 1, 2,  1, 2, 1, 5,  2, 2,  1, 5,  1, 2, 1, 14, 1, 5,  1, 5,  2,
    2, 1, 15, 2, 2, 5, 4, 1,  4, 1,  51, 1, 2, 1, 14, 1, 2,  2, 14, 1, 6,
    1, 4, 2,  2, 1, 52, 2, 5, 1, 5,  1, 15, 2, 13, 2, 2, 1, 13, 1, 2,  4};

// ---- canonical class colors (shared intern table so that colors are
// comparable across groups) --------------------------------------------------

std::map<std::vector<long>, int> g_color_intern;

int intern_color(const std::vector<long>& sig) {
  auto [it, fresh] = g_color_intern.emplace(sig, int(g_color_intern.size()));
  (void)fresh;
  return it->second;
}

struct Fingerprint {
  int order = 0;
  bool abelian = false;
  std::map<long, std::vector<int>> invariants;  // abelian only: complete invariant
  std::vector<std::pair<int, int>> order_hist;
  int center = 0, derived = 0;
  long exp = 0;
  std::vector<std::pair<int, int>> color_hist;  // (class color, total size)

  bool operator==(const Fingerprint&) const = default;
};

struct Candidate {
  FiniteGroup group;
  Fingerprint fp;
  std::vector<int> elem_color;  // per element, its class color
};

Candidate analyze(FiniteGroup g) {
  Candidate c{std::move(g), {}, {}};
  const FiniteGroup& G = c.group;
  int n = G.order();
  c.fp.order = n;
  c.fp.abelian = G.is_abelian();
  if (c.fp.abelian) c.fp.invariants = abelian_invariants(G);
  std::map<int, int> hist;
  for (int x = 0; x < n; ++x) ++hist[G.element_order(x)];
  c.fp.order_hist.assign(hist.begin(), hist.end());
  c.fp.center = center(G).count();
  c.fp.derived = derived_subgroup(G).count();
  c.fp.exp = exponent(G);

  // Iterated class colors: start from (size, order), refine by the colors
  // of the classes of x^2 and x^3 until stable.
  auto classes = conjugacy_classes(G);
  std::vector<int> cls_of(n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i]) cls_of[x] = int(i);
  std::vector<int> color(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    color[i] = intern_color({long(classes[i].size()), long(G.element_order(classes[i][0]))});
  for (int round = 0; round < 6; ++round) {
    std::vector<int> next(classes.size());
    bool changed = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      int rep = classes[i][0];
      next[i] = intern_color({long(color[i]), long(color[cls_of[G.pow(rep, 2)]]),
                              long(color[cls_of[G.pow(rep, 3)]])});
      changed |= next[i] != color[i];
    }
    color = std::move(next);
    if (!changed) break;
  }
  std::map<int, int> ch;
  for (std::size_t i = 0; i < classes.size(); ++i) ch[color[i]] += int(classes[i].size());
  c.fp.color_hist.assign(ch.begin(), ch.end());
  c.elem_color.resize(n);
  for (int x = 0; x < n; ++x) c.elem_color[x] = color[cls_of[x]];
  return c;
}

// Backtracking isomorphism test over generator images, pruned by element
// order and class color. Exhaustive, so a negative answer is definitive.
bool isomorphic(const Candidate& a, const Candidate& b) {
  if (!(a.fp == b.fp)) return false;
  if (a.fp.abelian) return true;  // invariants decide abelian groups
  const FiniteGroup& g1 = a.group;
  const FiniteGroup& g2 = b.group;
  int n = g1.order();
  auto gens = minimal_generating_set(g1);
  auto levels = grp::detail::build_gen_levels(g1, gens);
  int k = int(gens.size());

  std::vector<std::vector<int>> cand(k);
  for (int i = 0; i < k; ++i)
    for (int y = 0; y < n; ++y)
      if (g2.element_order(y) == g1.element_order(gens[i]) &&
          b.elem_color[y] == a.elem_color[gens[i]])
        cand[i].push_back(y);

  std::vector<int> img(n, -1);
  img[0] = 0;
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::vector<int> timg(k);
  bool found = false;

  std::function<void(int)> assign = [&](int lvl) {
    if (found) return;
    for (int t : cand[lvl]) {
      if (used[t]) continue;
      timg[lvl] = t;
      std::vector<int> journal;
      bool ok = true;
      for (const auto& e : levels.tree[lvl]) {
        int v = g2.mul(img[e.from], timg[e.gen]);
        if (used[v]) {
          ok = false;
          break;
        }
        img[e.to] = v;
        used[v] = 1;
        journal.push_back(e.to);
      }
      if (ok)
        for (const auto& e : levels.checks[lvl])
          if (img[e.to] != g2.mul(img[e.from], timg[e.gen])) {
            ok = false;
            break;
          }
      if (ok) {
        if (lvl == k - 1) {
          bool hom = true;
          for (int x = 0; x < n && hom; ++x)
            for (int y = 0; y < n; ++y)
              if (img[g1.mul(x, y)] != g2.mul(img[x], img[y])) {
                hom = false;
                break;
              }
          if (hom) found = true;
        } else {
          assign(lvl + 1);
        }
      }
      for (int y : journal) {
        used[img[y]] = 0;
        img[y] = -1;
      }
      if (found) return;
    }
  };
  assign(0);
  return found;
}

// Cyclic extension of N by C_p for (alpha, t): elements (i, u) = x^i u with
// index i*|N| + u, product (i,u)(j,v) = ((i+j) mod p, t^carry beta^j(u) v)
// where beta = alpha^-1.
FiniteGroup build_extension(const FiniteGroup& n_grp, int p, const GroupMap& alpha, int t) {
  int m = n_grp.order();
  int n = p * m;
  GroupMap beta = inverse_map(alpha);
  std::vector<std::vector<std::uint16_t>> beta_pow(p);
  beta_pow[0] = identity_map(n_grp).images;
  for (int j = 1; j < p; ++j) {
    beta_pow[j].resize(m);
    for (int u = 0; u < m; ++u) beta_pow[j][u] = beta.images[beta_pow[j - 1][u]];
  }
  std::vector<std::uint16_t> table(std::size_t(n) * n);
  for (int i = 0; i < p; ++i)
    for (int u = 0; u < m; ++u)
      for (int j = 0; j < p; ++j) {
        int r = (i + j) % p;
        int carry = (i + j) / p;
        int base = carry ? t : 0;
        for (int v = 0; v < m; ++v) {
          int w = n_grp.mul(n_grp.mul(base, beta_pow[j][u]), v);
          table[std::size_t(i * m + u) * n + (j * m + v)] = std::uint16_t(r * m + w);
        }
      }
  return FiniteGroup::from_table(n, std::move(table));
}

std::string abelian_name(const std::map<long, std::vector<int>>& invs) {
  std::string s;
  for (const auto& [p, es] : invs)
    for (int e : es) {
      long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      if (!s.empty()) s += "x";
      s += "C" + std::to_string(q);
    }
  return s.empty() ? "C1" : s;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = "data/smallgroups63.jsonl";
  int max_order = 63;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--out") && i + 1 < argc)
      out_path = argv[++i];
    else if (!std::strcmp(argv[i], "--max-order") && i + 1 < argc)
      max_order = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: gen_catalog [--out FILE] [--max-order N]\n";
      return 2;
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<Candidate>> by_order(max_order + 1);
  by_order[1].push_back(analyze(cyclic(1)));

  for (int n = 2; n <= max_order; ++n) {
    std::vector<Candidate>& classes = by_order[n];
    std::set<std::vector<int>> seen_tables;
    long considered = 0;

    auto consider = [&](FiniteGroup g) {
      ++considered;
      std::vector<int> flat;
      flat.reserve(std::size_t(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat.push_back(g.mul(a, b));
      if (!seen_tables.insert(std::move(flat)).second) return;
      Candidate c = analyze(std::move(g));
      for (const auto& cls : classes)
        if (isomorphic(c, cls)) return;
      classes.push_back(std::move(c));
    };

    for (long p : prime_divisors(n)) {
      int m = int(n / p);
      for (const Candidate& base : by_order[m]) {
        const FiniteGroup& N = base.group;
        MapSet auts = enumerate_automorphisms(N, 30000);
        for (const auto& alpha : auts.maps) {
          std::vector<std::uint16_t> ap = identity_map(N).images;
          for (int i = 0; i < p; ++i)
            for (int u = 0; u < m; ++u) ap[u] = alpha.images[ap[u]];
          for (int t = 0; t < m; ++t) {
            if (alpha.images[t] != t) continue;
            bool match = true;
            for (int u = 0; u < m && match; ++u)
              match = ap[u] == N.mul(N.mul(t, u), N.inv(t));
            if (!match) continue;
            consider(build_extension(N, int(p), alpha, t));
          }
        }
      }
    }
    if (n == 60)
      consider(from_generators(PermSpec{5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}}, 60));

    if (n <= 63 && int(classes.size()) != kExpectedCounts[n - 1]) {
      std::cerr << "FATAL: order " << n << ": found " << classes.size()
                << " classes, published count is " << kExpectedCounts[n - 1] << "\n";
      return 1;
    }
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "order " << n << ": " << classes.size() << " groups (" << considered
              << " candidates, " << dt << " ms total)\n";
  }

  // Named references for the well-known groups.
  std::vector<std::pair<std::string, Candidate>> named;
  for (int m = 3; 2 * m <= max_order; ++m)
    named.emplace_back("D" + std::to_string(2 * m), analyze(dihedral(m)));
  named.emplace_back("Q8", analyze(quaternion8()));
  named.emplace_back("A4",
                     analyze(from_generators(PermSpec{4, {{1, 2, 0, 3}, {1, 0, 3, 2}}}, 12)));
  named.emplace_back("S4",
                     analyze(from_generators(PermSpec{4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}, 24)));
  if (max_order >= 60)
    named.emplace_back(
        "A5", analyze(from_generators(PermSpec{5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}}, 60)));

  std::vector<CatalogEntry> entries;
  for (int n = 1; n <= max_order; ++n) {
    int k = 0;
    for (const Candidate& c : by_order[n]) {
      CatalogEntry e;
      e.id = std::to_string(n) + "." + std::to_string(++k);
      e.order = n;
      e.degree = n;
      for (int s : minimal_generating_set(c.group)) {
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x) img[x] = c.group.mul(x, s);  // right regular action
        e.generators.push_back(std::move(img));
      }
      if (c.fp.abelian) {
        e.name = abelian_name(c.fp.invariants);
      } else {
        for (const auto& [nm, ref] : named)
          if (ref.fp.order == n && isomorphic(c, ref)) {
            e.name = nm;
            break;
          }
      }
      entries.push_back(std::move(e));
    }
  }

  {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << "# Small groups catalog, orders 1.." << max_order
        << "; one JSON object per line.\n";
    out << "# Generators are 0-based image arrays of the right regular action.\n";
    write_catalog(out, entries);
  }

  auto back = ingest_catalog_file(out_path);
  if (back.size() != entries.size()) {
    std::cerr << "FATAL: re-ingest mismatch\n";
    return 1;
  }
  std::cout << "wrote " << entries.size() << " entries to " << out_path << "\n";
  return 0;
}
