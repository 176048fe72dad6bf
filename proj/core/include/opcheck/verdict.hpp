#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "opcheck/sparse_vec.hpp"

namespace opcheck {

enum class Status { Holds, Fails, Inconclusive };

std::string_view to_string(Status s);
std::optional<Status> status_from_string(std::string_view s);

/// Everything needed to replay a check: seed, probe budget actually used,
/// window size, tolerances, plus free-form key/value notes.
struct CheckContext {
  std::uint64_t seed = 0;
  int probes_used = 0;
  std::size_t window_size = 0;
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  std::vector<std::pair<std::string, std::string>> extras;

  void note(std::string key, std::string value);
  void note(std::string key, double value);  // 17 significant digits
};

/// A witness is a concrete vector, a vertex, or a short id (projector,
/// broken condition); monostate means none.
using Witness = std::variant<std::monostate, SparseVec, VertexKey, std::string>;

/// Outcome of a predicate. A Fails always carries a witness that replays the
/// discrepancy; Holds records the budget actually exhausted via the context.
struct Verdict {
  Status status = Status::Inconclusive;
  Witness witness{};
  double discrepancy = 0.0;
  std::string reason;
  CheckContext context{};

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
  bool inconclusive() const { return status == Status::Inconclusive; }

  static Verdict make_holds(CheckContext ctx = {}, double residual = 0.0);
  static Verdict make_fails(double discrepancy, Witness w, CheckContext ctx = {});
  static Verdict make_inconclusive(std::string reason, CheckContext ctx = {});
};

std::string format_17g(double v);

}  // namespace opcheck
