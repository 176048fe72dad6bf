#include "opcheck/verdict.hpp"

#include <cstdio>

namespace opcheck {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    default:
      return "inconclusive";
  }
}

std::optional<Status> status_from_string(std::string_view s) {
  if (s == "holds") return Status::Holds;
  if (s == "fails") return Status::Fails;
  if (s == "inconclusive") return Status::Inconclusive;
  return std::nullopt;
}

std::string format_17g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CheckContext::note(std::string key, std::string value) {
  extras.emplace_back(std::move(key), std::move(value));
}

void CheckContext::note(std::string key, double value) {
  extras.emplace_back(std::move(key), format_17g(value));
}

Verdict Verdict::make_holds(CheckContext ctx, double residual) {
  Verdict v;
  v.status = Status::Holds;
  v.discrepancy = residual;
  v.context = std::move(ctx);
  return v;
}

Verdict Verdict::make_fails(double discrepancy, Witness w, CheckContext ctx) {
  Verdict v;
  v.status = Status::Fails;
  v.witness = std::move(w);
  v.discrepancy = discrepancy;
  v.context = std::move(ctx);
  return v;
}

Verdict Verdict::make_inconclusive(std::string reason, CheckContext ctx) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.reason = std::move(reason);
  v.context = std::move(ctx);
  return v;
}

}  // namespace opcheck
