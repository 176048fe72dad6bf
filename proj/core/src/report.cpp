#include "opcheck/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace opcheck {

void Report::add(std::string predicate, std::string anchor, Verdict v,
                 std::optional<Status> expected) {
  entries.push_back({std::move(predicate), std::move(anchor), std::move(v), expected});
}

void Report::note(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void Report::note(std::string key, double value) {
  metadata.emplace_back(std::move(key), format_17g(value));
}

void Report::normalize() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     return a.predicate < b.predicate;
                   });
}

bool Report::all_expected_met() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.matched(); });
}

bool Report::any_inconclusive() const {
  return std::any_of(entries.begin(), entries.end(), [](const ReportEntry& e) {
    return e.verdict.status == Status::Inconclusive;
  });
}

bool Report::any_expectation() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.expected.has_value(); });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(),
      [s](const ReportEntry& e) { return e.verdict.status == s; }));
}

std::size_t Report::mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.matched(); }));
}

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ull) {
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string iso_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json witness_json(const Witness& w) {
  Json j = Json::object();
  if (const auto* vec = std::get_if<SparseVec>(&w)) {
    for (const auto& [l, c] : vec->entries())
      j[l.str()] = Json::array({c.real(), c.imag()});
  } else if (const auto* v = std::get_if<VertexKey>(&w)) {
    j["v" + to_string(*v)] = Json::array({1.0, 0.0});
  }
  return j;
}

Json entry_json(const ReportEntry& e, std::uint64_t seed) {
  // fixed field order: predicate, anchor, status, discrepancy, witness,
  // witness_tag, seed, then the optional blocks
  Json j;
  j["predicate"] = e.predicate;
  j["anchor"] = e.anchor;
  j["status"] = std::string(to_string(e.verdict.status));
  j["discrepancy"] = format_17g(e.verdict.discrepancy);
  j["witness"] = witness_json(e.verdict.witness);
  if (const auto* tag = std::get_if<std::string>(&e.verdict.witness)) j["witness_tag"] = *tag;
  j["seed"] = e.verdict.context.seed ? e.verdict.context.seed : seed;
  if (e.expected) {
    j["expected"] = std::string(to_string(*e.expected));
    j["match"] = e.matched();
  }
  if (!e.verdict.reason.empty()) j["reason"] = e.verdict.reason;
  Json ctx;
  ctx["probes_used"] = e.verdict.context.probes_used;
  ctx["window_size"] = e.verdict.context.window_size;
  ctx["abs_tol"] = format_17g(e.verdict.context.abs_tol);
  ctx["rel_tol"] = format_17g(e.verdict.context.rel_tol);
  for (const auto& [k, v] : e.verdict.context.extras) ctx[k] = v;
  j["context"] = ctx;
  return j;
}

}  // namespace

std::string to_json(const Report& r, const SerializeOptions& opt) {
  Json j;
  j["schema"] = 1;
  j["descriptor"] = r.descriptor;
  if (opt.with_timestamp) j["timestamp"] = iso_utc_now();
  j["seed"] = r.seed;
  Json tol;
  tol["abs"] = format_17g(r.tol.abs_tol);
  tol["rel"] = format_17g(r.tol.rel_tol);
  j["tolerances"] = tol;

  std::uint64_t h = fnv1a(r.descriptor);
  h = fnv1a(format_17g(r.tol.abs_tol), h);
  h = fnv1a(format_17g(r.tol.rel_tol), h);
  h = fnv1a(std::to_string(r.seed), h);
  for (const auto& e : r.entries) h = fnv1a(e.predicate, h);
  j["config_hash"] = hex64(h);

  Json meta = Json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  j["metadata"] = meta;

  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(e, r.seed));
  j["entries"] = entries;

  Json summary;
  summary["holds"] = r.count(Status::Holds);
  summary["fails"] = r.count(Status::Fails);
  summary["inconclusive"] = r.count(Status::Inconclusive);
  summary["mismatches"] = r.mismatches();
  j["summary"] = summary;

  return j.dump(opt.indent) + "\n";
}

std::string summary_lines(const Report& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << (e.matched() ? "  " : "! ") << e.predicate << ": " << to_string(e.verdict.status);
    if (e.expected) os << " (expected " << to_string(*e.expected) << ")";
    if (e.verdict.status == Status::Fails) os << " discrepancy=" << format_17g(e.verdict.discrepancy);
    if (!e.verdict.reason.empty()) os << " [" << e.verdict.reason << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace opcheck
