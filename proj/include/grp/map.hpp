#pragma once

#include <cstdint>
#include <vector>

#include "grp/error.hpp"
#include "grp/group.hpp"

namespace grp {

// A total map between groups given by its image array on all elements.
// Groups are referenced, not owned; keep them alive while maps exist.
// Composition convention throughout: compose(f, g) applies f first.
struct GroupMap {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<std::uint16_t> images;

  int operator()(int x) const { return images[x]; }
};

inline GroupMap identity_map(const FiniteGroup& g) {
  GroupMap m{&g, &g, std::vector<std::uint16_t>(g.order())};
  for (int i = 0; i < g.order(); ++i) m.images[i] = std::uint16_t(i);
  return m;
}

// Checks the homomorphism identity on all |source|^2 pairs.
inline bool is_homomorphism(const GroupMap& m) {
  const FiniteGroup& s = *m.source;
  const FiniteGroup& t = *m.target;
  if (int(m.images.size()) != s.order()) return false;
  if (m.images[0] != 0) return false;
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (m.images[s.mul(a, b)] != t.mul(m.images[a], m.images[b])) return false;
  return true;
}

inline bool is_bijection(const GroupMap& m) {
  if (m.source->order() != m.target->order()) return false;
  std::vector<char> seen(m.target->order(), 0);
  for (auto v : m.images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_automorphism(const GroupMap& m) {
  return m.source == m.target && is_bijection(m) && is_homomorphism(m);
}

inline GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap r{f.source, g.target, std::vector<std::uint16_t>(f.images.size())};
  for (std::size_t x = 0; x < f.images.size(); ++x) r.images[x] = g.images[f.images[x]];
  return r;
}

inline GroupMap inverse_map(const GroupMap& f) {
  GroupMap r{f.target, f.source, std::vector<std::uint16_t>(f.images.size())};
  for (std::size_t x = 0; x < f.images.size(); ++x) r.images[f.images[x]] = std::uint16_t(x);
  return r;
}

enum class MapKind { automorphisms, endomorphisms };

// A list of maps over a common group. `complete` distinguishes an
// exhaustive enumeration from a generating or sampled set.
struct MapSet {
  const FiniteGroup* group = nullptr;
  MapKind kind = MapKind::automorphisms;
  bool complete = false;
  std::vector<GroupMap> maps;

  std::size_t size() const { return maps.size(); }
};

// Per-element successor lists {m(x) : m in maps}, deduplicated. Built once
// so that orbit closures do not rescan a large map list per step.
inline std::vector<std::vector<std::uint16_t>> image_successors(const MapSet& ms) {
  int n = ms.group->order();
  std::vector<std::vector<std::uint16_t>> succ(n);
  std::vector<char> mark(n, 0);
  for (int x = 0; x < n; ++x) {
    for (const auto& m : ms.maps) {
      int y = m.images[x];
      if (!mark[y]) {
        mark[y] = 1;
        succ[x].push_back(std::uint16_t(y));
      }
    }
    for (auto y : succ[x]) mark[y] = 0;
  }
  return succ;
}

}  // namespace grp
