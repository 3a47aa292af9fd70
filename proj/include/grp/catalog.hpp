#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "grp/error.hpp"
#include "grp/group.hpp"

namespace grp {

// An ingested group: identifier, order, and permutation generators as
// 0-based image arrays. The file format is JSON Lines: one object per line
// with fields id (string), order (int), degree (int), generators (array of
// image arrays) and optional name; blank lines and lines starting with '#'
// are ignored. See docs/catalog-format.md.
struct CatalogEntry {
  std::string id;
  int order = 0;
  int degree = 0;
  std::vector<std::vector<int>> generators;
  std::string name;

  PermSpec spec() const { return PermSpec{degree, generators}; }
};

inline FiniteGroup realize(const CatalogEntry& e, const BuildOptions& opts = {}) {
  return from_generators(e.spec(), e.order, opts);
}

inline std::vector<CatalogEntry> ingest_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    CatalogEntry entry;
    try {
      entry.id = j.at("id").get<std::string>();
      entry.order = j.at("order").get<int>();
      entry.degree = j.at("degree").get<int>();
      entry.generators = j.at("generators").get<std::vector<std::vector<int>>>();
      if (j.contains("name")) entry.name = j.at("name").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    if (entry.order <= 0 || entry.degree <= 0)
      throw ParseError(lineno, "order and degree must be positive");
    if (!ids.insert(entry.id).second) throw DuplicateId(entry.id);

    try {
      FiniteGroup g = realize(entry);
      if (g.order() != entry.order)
        throw OrderMismatch(entry.id, "generators close to " + std::to_string(g.order()) +
                                          " elements, entry declares " +
                                          std::to_string(entry.order));
    } catch (const ClosureExceedsCap&) {
      throw OrderMismatch(entry.id, "generators close to more elements than declared");
    } catch (const InvalidPermutation& e) {
      throw ParseError(lineno, e.what());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::vector<CatalogEntry> ingest_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return ingest_catalog(in);
}

inline void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) {
    nlohmann::json j;
    j["id"] = e.id;
    j["order"] = e.order;
    j["degree"] = e.degree;
    j["generators"] = e.generators;
    if (!e.name.empty()) j["name"] = e.name;
    out << j.dump() << "\n";
  }
}

}  // namespace grp
