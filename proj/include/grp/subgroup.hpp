#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "grp/bitmask.hpp"
#include "grp/error.hpp"
#include "grp/group.hpp"
#include "grp/map.hpp"

namespace grp {

// A subgroup of a fixed parent group as a membership mask.
struct SubgroupMask {
  const FiniteGroup* parent = nullptr;
  Bitmask members;

  int count() const { return members.count(); }
};

// Subgroup generated by the seed elements. In a finite group closing under
// right multiplication by the seeds already yields inverses.
inline Bitmask subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  Bitmask m(g.order());
  m.set(0);
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int s : seed) {
      int y = g.mul(x, s);
      if (!m.test(y)) {
        m.set(y);
        queue.push_back(y);
      }
    }
  }
  return m;
}

inline Bitmask subgroup_closure(const FiniteGroup& g, const Bitmask& seed) {
  return subgroup_closure(g, seed.members());
}

inline bool is_subgroup_mask(const FiniteGroup& g, const Bitmask& m) {
  if (!m.test(0)) return false;
  auto mem = m.members();
  for (int a : mem) {
    if (!m.test(g.inv(a))) return false;
    for (int b : mem)
      if (!m.test(g.mul(a, b))) return false;
  }
  return true;
}

// Is `inner` normal in `outer`? Both are element masks of g; inner must be
// contained in outer. Normality in the whole group is outer = full.
inline bool is_normal_in(const FiniteGroup& g, const Bitmask& inner, const Bitmask& outer) {
  auto in = inner.members();
  auto out = outer.members();
  for (int k : out)
    for (int h : in)
      if (!inner.test(g.conj(k, h))) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Bitmask& m) {
  auto in = m.members();
  for (int k = 0; k < g.order(); ++k)
    for (int h : in)
      if (!m.test(g.conj(k, h))) return false;
  return true;
}

// Setwise product {a*b : a in A, b in B}. For normal subgroups this is the
// join; in general it need not be a subgroup.
inline Bitmask product_mask(const FiniteGroup& g, const Bitmask& a, const Bitmask& b) {
  Bitmask m(g.order());
  for (int x : a.members())
    for (int y : b.members()) m.set(g.mul(x, y));
  return m;
}

inline Bitmask derived_subgroup(const FiniteGroup& g) {
  int n = g.order();
  Bitmask comm(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comm.set(g.commutator(a, b));
  return subgroup_closure(g, comm);
}

// The subgroup as a group of its own; members are re-indexed in ascending
// parent order, which keeps the identity at 0.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

inline SubgroupAsGroup mask_as_group(const FiniteGroup& g, const Bitmask& m,
                                     const BuildOptions& opts = {}) {
  auto mem = m.members();
  int k = int(mem.size());
  std::vector<int> from(g.order(), -1);
  for (int i = 0; i < k; ++i) from[mem[i]] = i;
  std::vector<std::uint16_t> t(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = from[g.mul(mem[i], mem[j])];
      if (v < 0) throw InvalidParameter("mask_as_group: mask is not closed");
      t[std::size_t(i) * k + j] = std::uint16_t(v);
    }
  return SubgroupAsGroup{FiniteGroup::from_table(k, std::move(t), opts), std::move(mem),
                         std::move(from)};
}

// Quotient by a normal subgroup. Cosets are represented by their least
// element index and indexed by ascending representative, so the coset of
// the identity is element 0. Multiplication is verified to be well defined
// over all pairs during construction.
struct Quotient {
  FiniteGroup group;
  std::vector<std::uint16_t> coset_of;  // parent index -> quotient index
  std::vector<int> rep_of;              // quotient index -> least parent element
};

inline Quotient quotient(const FiniteGroup& g, const Bitmask& normal_sub,
                         const BuildOptions& opts = {}) {
  if (!is_subgroup_mask(g, normal_sub)) throw NotNormal("quotient: mask is not a subgroup");
  if (!is_normal(g, normal_sub)) throw NotNormal("quotient: subgroup is not normal");

  int n = g.order();
  auto nm = normal_sub.members();
  std::vector<int> rep(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (rep[a] >= 0) continue;
    int r = a;  // first unseen element of the coset is its least member
    reps.push_back(r);
    for (int h : nm) rep[g.mul(a, h)] = r;
  }
  std::sort(reps.begin(), reps.end());
  int q = int(reps.size());
  std::vector<std::uint16_t> qidx(n);
  for (int i = 0; i < q; ++i) qidx[reps[i]] = std::uint16_t(i);
  for (int a = 0; a < n; ++a) qidx[a] = qidx[rep[a]];

  std::vector<std::uint16_t> t(std::size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[std::size_t(i) * q + j] = qidx[g.mul(reps[i], reps[j])];
  // well-definedness: the product coset must not depend on representatives
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[std::size_t(qidx[a]) * q + qidx[b]] != qidx[g.mul(a, b)])
        throw NotNormal("quotient: multiplication not well defined");

  return Quotient{FiniteGroup::from_table(q, std::move(t), opts), std::move(qidx),
                  std::move(reps)};
}

// Projection G -> G/N as a GroupMap; `parent` and `q.group` must stay alive.
inline GroupMap projection_map(const FiniteGroup& parent, const Quotient& q) {
  return GroupMap{&parent, &q.group, q.coset_of};
}

// The automorphism of the quotient induced by an automorphism of the parent
// that fixes the kernel setwise.
inline GroupMap induced_on_quotient(const Quotient& q, const GroupMap& alpha) {
  const FiniteGroup& qg = q.group;
  GroupMap r{&qg, &qg, std::vector<std::uint16_t>(qg.order())};
  for (int i = 0; i < qg.order(); ++i) r.images[i] = q.coset_of[alpha.images[q.rep_of[i]]];
  return r;
}

}  // namespace grp
