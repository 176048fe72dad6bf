#include "opcheck/directed_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace opcheck {

DirectedTree DirectedTree::finite(
    const std::vector<VertexKey>& vertices,
    const std::vector<std::pair<VertexKey, VertexKey>>& edges) {
  DirectedTree t;
  t.parametric_ = false;
  t.vertices_ = vertices;
  std::sort(t.vertices_.begin(), t.vertices_.end());
  if (std::adjacent_find(t.vertices_.begin(), t.vertices_.end()) != t.vertices_.end())
    throw std::invalid_argument("DirectedTree: duplicate vertex");
  auto has = [&](VertexKey v) {
    return std::binary_search(t.vertices_.begin(), t.vertices_.end(), v);
  };
  for (const auto& [u, v] : edges) {
    if (!has(u) || !has(v))
      throw std::invalid_argument("DirectedTree: edge endpoint outside vertex set");
    if (t.parent_.count(v))
      throw std::invalid_argument("DirectedTree: vertex " + to_string(v) +
                                  " has two parents");
    t.parent_.emplace(v, u);
    t.children_[u].push_back(v);
  }
  for (auto& [u, ch] : t.children_) std::sort(ch.begin(), ch.end());
  // exactly one root, and every vertex must reach it (no cycles)
  std::optional<VertexKey> root;
  for (const auto& v : t.vertices_) {
    if (t.parent_.count(v)) continue;
    if (root) throw std::invalid_argument("DirectedTree: more than one root");
    root = v;
  }
  if (!root) throw std::invalid_argument("DirectedTree: no root (cycle)");
  t.root_ = root;
  for (const auto& v : t.vertices_) {
    VertexKey w = v;
    std::size_t steps = 0;
    while (w != *root) {
      const auto it = t.parent_.find(w);
      if (it == t.parent_.end() || ++steps > t.vertices_.size())
        throw std::invalid_argument("DirectedTree: cycle detected at " + to_string(v));
      w = it->second;
    }
  }
  return t;
}

DirectedTree DirectedTree::t2_kappa(std::optional<std::int64_t> kappa,
                                    std::int64_t branch_depth_cap,
                                    std::optional<std::int64_t> trunk_depth_cap) {
  if (branch_depth_cap <= 0)
    throw std::invalid_argument("t2_kappa: branch_depth_cap must be positive");
  if (kappa && *kappa < 0) throw std::invalid_argument("t2_kappa: kappa must be >= 0");
  if (!kappa && !trunk_depth_cap)
    throw std::invalid_argument("t2_kappa: infinite chain requires a trunk_depth_cap");
  if (trunk_depth_cap && *trunk_depth_cap <= 0)
    throw std::invalid_argument("t2_kappa: trunk_depth_cap must be positive");
  DirectedTree t;
  t.parametric_ = true;
  t.kappa_ = kappa;
  t.branch_cap_ = branch_depth_cap;
  t.trunk_cap_ = kappa ? *kappa : *trunk_depth_cap;
  if (kappa) t.root_ = VertexKey{0, static_cast<std::int32_t>(-*kappa)};
  return t;
}

bool DirectedTree::contains(VertexKey v) const {
  if (!parametric_)
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  if (v.branch == 0) {
    if (v.index > 0) return false;
    return !kappa_ || v.index >= -*kappa_;
  }
  return (v.branch == 1 || v.branch == 2) && v.index >= 1;
}

std::optional<VertexKey> DirectedTree::parent(VertexKey v) const {
  if (!contains(v))
    throw std::invalid_argument("DirectedTree::parent: vertex " + to_string(v) +
                                " outside the tree");
  if (!parametric_) {
    const auto it = parent_.find(v);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
  }
  if (root_ && v == *root_) return std::nullopt;
  if (v.branch == 0) return VertexKey{0, v.index - 1};
  if (v.index == 1) return VertexKey{0, 0};
  return VertexKey{v.branch, v.index - 1};
}

std::vector<VertexKey> DirectedTree::children(VertexKey v) const {
  if (!contains(v))
    throw std::invalid_argument("DirectedTree::children: vertex " + to_string(v) +
                                " outside the tree");
  if (!parametric_) {
    const auto it = children_.find(v);
    return it == children_.end() ? std::vector<VertexKey>{} : it->second;
  }
  if (v.branch == 0) {
    if (v.index == 0) return {VertexKey{1, 1}, VertexKey{2, 1}};
    return {VertexKey{0, v.index + 1}};
  }
  return {VertexKey{v.branch, v.index + 1}};
}

std::vector<VertexKey> DirectedTree::vertex_window() const {
  return parametric_ ? vertex_window(branch_cap_) : vertices_;
}

std::vector<VertexKey> DirectedTree::vertex_window(std::int64_t branch_depth) const {
  if (!parametric_) return vertices_;
  if (branch_depth <= 0) throw std::invalid_argument("vertex_window: depth must be positive");
  std::vector<VertexKey> out;
  for (std::int64_t k = trunk_cap_; k >= 1; --k)
    out.push_back(VertexKey{0, static_cast<std::int32_t>(-k)});
  out.push_back(VertexKey{0, 0});
  for (std::int32_t i = 1; i <= 2; ++i)
    for (std::int64_t j = 1; j <= branch_depth; ++j)
      out.push_back(VertexKey{i, static_cast<std::int32_t>(j)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opcheck
