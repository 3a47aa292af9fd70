#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};
struct InvalidPermutation : Error {
  using Error::Error;
};
struct ClosureExceedsCap : Error {
  using Error::Error;
};
struct ProductExceedsCap : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct NotPGroup : Error {
  using Error::Error;
};
struct NotAbelian : Error {
  using Error::Error;
};
struct NotCentral : Error {
  using Error::Error;
};
struct InvariantsNotStrict : Error {
  using Error::Error;
};
struct TrivialGroup : Error {
  using Error::Error;
};

struct AutCapExceeded : Error {
  long count_so_far;
  explicit AutCapExceeded(long found)
      : Error("automorphism cap exceeded after " + std::to_string(found) + " maps"),
        count_so_far(found) {}
};

struct EndCapExceeded : Error {
  long count_so_far;
  explicit EndCapExceeded(long found)
      : Error("endomorphism cap exceeded after " + std::to_string(found) + " maps"),
        count_so_far(found) {}
};

// Catalog / harness errors.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct OrderMismatch : Error {
  std::string id;
  OrderMismatch(std::string entry_id, const std::string& detail)
      : Error("order mismatch for entry " + entry_id + ": " + detail), id(std::move(entry_id)) {}
};

struct DuplicateId : Error {
  std::string id;
  explicit DuplicateId(std::string entry_id)
      : Error("duplicate catalog id " + entry_id), id(std::move(entry_id)) {}
};

struct SkippedEntriesPresent : Error {
  std::vector<std::string> ids;
  explicit SkippedEntriesPresent(std::vector<std::string> skipped)
      : Error(describe(skipped)), ids(std::move(skipped)) {}

private:
  static std::string describe(const std::vector<std::string>& skipped) {
    std::string s = "count requires exact verdicts but entries were skipped:";
    for (const auto& id : skipped) s += " " + id;
    return s;
  }
};

struct UnknownLemma : Error {
  explicit UnknownLemma(const std::string& id) : Error("unknown lemma id: " + id) {}
};

}  // namespace grp
