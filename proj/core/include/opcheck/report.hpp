#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opcheck/verdict.hpp"

namespace opcheck {

/// One predicate outcome, optionally matched against an expected status.
struct ReportEntry {
  std::string predicate;
  std::string anchor;  // the identity or statement being checked
  Verdict verdict;
  std::optional<Status> expected;

  bool matched() const { return !expected || *expected == verdict.status; }
};

/// Machine-readable record of a check suite. Serialization has a fixed field
/// order (schema 1) and entries are order-normalized by predicate name, so
/// identical configs yield byte-identical reports (timestamps aside).
struct Report {
  std::string descriptor;
  std::uint64_t seed = 0;
  TolerancePolicy tol{};
  std::vector<ReportEntry> entries;
  std::vector<std::pair<std::string, std::string>> metadata;

  void add(std::string predicate, std::string anchor, Verdict v,
           std::optional<Status> expected = std::nullopt);
  void note(std::string key, std::string value);
  void note(std::string key, double value);

  /// Stable sort by predicate name.
  void normalize();

  bool all_expected_met() const;
  bool any_inconclusive() const;
  bool any_expectation() const;
  std::size_t count(Status s) const;
  std::size_t mismatches() const;
};

struct SerializeOptions {
  bool with_timestamp = true;
  int indent = 2;
};

std::string to_json(const Report& r, const SerializeOptions& opt = {});

/// One human-readable line per entry (for stderr summaries).
std::string summary_lines(const Report& r);

}  // namespace opcheck
