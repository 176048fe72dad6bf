#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "opcheck/label.hpp"

namespace opcheck {

/// A directed tree: either an explicit finite vertex/edge set, or the
/// parametric family T_{2,kappa} (a chain of length kappa feeding a
/// branching vertex of valency 2, with two infinite rays).
///
/// For the parametric family, parent/children/contains are total closed-form
/// queries at any depth; the depth caps only bound vertex enumeration, and
/// window requests deeper than the cap extend transparently.
class DirectedTree {
 public:
  static DirectedTree finite(const std::vector<VertexKey>& vertices,
                             const std::vector<std::pair<VertexKey, VertexKey>>& edges);

  /// T_{2,kappa}. kappa = nullopt means an infinite chain (rootless tree);
  /// a trunk_depth_cap is then required for enumeration. Caps must be > 0.
  static DirectedTree t2_kappa(std::optional<std::int64_t> kappa,
                               std::int64_t branch_depth_cap,
                               std::optional<std::int64_t> trunk_depth_cap = std::nullopt);

  bool parametric() const { return parametric_; }
  std::optional<VertexKey> root() const { return root_; }
  bool contains(VertexKey v) const;
  /// nullopt at the root. Throws for vertices outside the tree.
  std::optional<VertexKey> parent(VertexKey v) const;
  std::vector<VertexKey> children(VertexKey v) const;

  /// All vertices (finite trees) or the materialized window up to the caps
  /// (parametric trees), in key order.
  std::vector<VertexKey> vertex_window() const;
  /// Parametric trees: window with an explicit branch depth, extending past
  /// the construction cap if asked.
  std::vector<VertexKey> vertex_window(std::int64_t branch_depth) const;

  std::optional<std::int64_t> kappa() const { return kappa_; }

 private:
  DirectedTree() = default;

  bool parametric_ = false;
  std::optional<VertexKey> root_;

  // finite storage
  std::vector<VertexKey> vertices_;
  std::map<VertexKey, VertexKey> parent_;
  std::map<VertexKey, std::vector<VertexKey>> children_;

  // parametric parameters
  std::optional<std::int64_t> kappa_;
  std::int64_t branch_cap_ = 0;
  std::int64_t trunk_cap_ = 0;
};

}  // namespace opcheck
