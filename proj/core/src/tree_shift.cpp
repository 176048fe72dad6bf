#include "opcheck/tree_shift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opcheck/probes.hpp"

namespace opcheck {

WeightSystem WeightSystem::from_map(std::map<VertexKey, Complex> w) {
  WeightSystem ws;
  ws.closed_form_ = false;
  ws.map_ = std::move(w);
  return ws;
}

WeightSystem WeightSystem::t2_family(Complex alpha1, Complex alpha2, Complex beta1,
                                     Complex beta2, Complex chain) {
  WeightSystem ws;
  ws.closed_form_ = true;
  ws.alpha_[0] = alpha1;
  ws.alpha_[1] = alpha2;
  ws.beta_[0] = beta1;
  ws.beta_[1] = beta2;
  ws.chain_ = chain;
  return ws;
}

Complex WeightSystem::at(VertexKey v) const {
  if (!closed_form_) {
    const auto it = map_.find(v);
    if (it == map_.end())
      throw std::invalid_argument("WeightSystem: missing weight at vertex " + to_string(v));
    return it->second;
  }
  if (v.branch == 0) return chain_;
  return v.index == 1 ? alpha_[v.branch - 1] : beta_[v.branch - 1];
}

bool WeightSystem::has(VertexKey v) const {
  return closed_form_ || map_.count(v) > 0;
}

TreeShiftOp::TreeShiftOp(DirectedTree tree, WeightSystem weights)
    : tree_(std::move(tree)), weights_(std::move(weights)) {
  if (!weights_.closed_form()) {
    for (const VertexKey& v : tree_.vertex_window()) {
      if (tree_.root() && v == *tree_.root()) continue;
      (void)weights_.at(v);  // throws naming the vertex if absent
    }
  }
  // adjoint duality probe batch on construction
  const auto window = orbit_window(tree_, 3);
  std::vector<Label> labels;
  labels.reserve(window.size());
  for (const auto& v : window) labels.push_back(Label::vertex(v));
  Rng rng(0x5EEDULL);
  double scale = 1.0;
  for (const auto& v : window) scale = std::max(scale, std::sqrt(branch_weight_sum(v)));
  for (int i = 0; i < 16; ++i) {
    const SparseVec u = random_probe(rng, labels, 4);
    const SparseVec w = random_probe(rng, labels, 4);
    const Complex lhs = inner(apply(u), w);
    const Complex rhs = inner(u, adjoint_apply(w));
    if (std::abs(lhs - rhs) > 1e-10 * scale * norm(u) * norm(w))
      throw std::logic_error("TreeShiftOp: adjoint duality probe failed, |<Su,w>-<u,S*w>| = " +
                             format_17g(std::abs(lhs - rhs)));
  }
}

SparseVec TreeShiftOp::apply(const SparseVec& f) const {
  SparseVec out;
  for (const auto& [l, c] : f.entries()) {
    if (l.kind() != Label::Kind::Vertex)
      throw std::invalid_argument("TreeShiftOp::apply: non-vertex label " + l.str());
    for (const VertexKey& v : tree_.children(l.vertex_key()))
      out.add(Label::vertex(v), weights_.at(v) * c);
  }
  return out;
}

SparseVec TreeShiftOp::adjoint_apply(const SparseVec& f) const {
  SparseVec out;
  for (const auto& [l, c] : f.entries()) {
    if (l.kind() != Label::Kind::Vertex)
      throw std::invalid_argument("TreeShiftOp::adjoint_apply: non-vertex label " + l.str());
    const VertexKey u = l.vertex_key();
    const auto p = tree_.parent(u);
    if (!p) continue;  // S* kills the root
    out.add(Label::vertex(*p), std::conj(weights_.at(u)) * c);
  }
  return out;
}

LocalOperator TreeShiftOp::to_local() const {
  const TreeShiftOp self = *this;
  return {"tree_shift", [self](const SparseVec& f) { return self.apply(f); },
          [self](const SparseVec& f) { return self.adjoint_apply(f); }};
}

double TreeShiftOp::branch_weight_sum(VertexKey u) const {
  double d = 0.0;
  for (const VertexKey& v : tree_.children(u)) d += std::norm(weights_.at(v));
  return d;
}

double TreeShiftOp::norm_power_on_basis(VertexKey u, int n) const {
  if (n < 0) throw std::invalid_argument("norm_power_on_basis: negative power");
  if (n == 0) return 1.0;
  // sum of |path weight|^2 over all depth-n descendants
  struct Walker {
    const TreeShiftOp& s;
    int n;
    double total = 0.0;
    void walk(VertexKey u, int depth, double wsq) {
      if (depth == n) {
        total += wsq;
        return;
      }
      for (const VertexKey& v : s.tree_.children(u))
        walk(v, depth + 1, wsq * std::norm(s.weights_.at(v)));
    }
  } w{*this, n};
  w.walk(u, 0, 1.0);
  return std::sqrt(w.total);
}

double TreeShiftOp::sup_branch_weight(std::span<const VertexKey> window) const {
  double s = 0.0;
  for (const VertexKey& u : window) s = std::max(s, std::sqrt(branch_weight_sum(u)));
  return s;
}

std::vector<VertexKey> orbit_window(const DirectedTree& tree, int n) {
  if (!tree.parametric()) return tree.vertex_window();
  const std::int64_t depth = static_cast<std::int64_t>(n) + 2;
  std::vector<VertexKey> out;
  const std::int64_t trunk = tree.kappa() ? std::min<std::int64_t>(*tree.kappa(), depth) : depth;
  for (std::int64_t k = trunk; k >= 1; --k)
    out.push_back(VertexKey{0, static_cast<std::int32_t>(-k)});
  out.push_back(VertexKey{0, 0});
  for (std::int32_t i = 1; i <= 2; ++i)
    for (std::int64_t j = 1; j <= depth; ++j)
      out.push_back(VertexKey{i, static_cast<std::int32_t>(j)});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// verdicts must record the window they were decided on; no silent
// truncation claims generality
std::string window_string(std::span<const VertexKey> window) {
  std::string out;
  for (const VertexKey& v : window) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

}  // namespace

Verdict prop_ws_test(const TreeShiftOp& s, int n, std::span<const VertexKey> window,
                     const TolerancePolicy& tol) {
  if (window.empty()) throw std::invalid_argument("prop_ws_test: empty vertex window");
  if (n <= 0) throw std::invalid_argument("prop_ws_test: power must be positive");
  const double nu = std::max(1.0, s.sup_branch_weight(window));
  const double bound = tol.bound(std::pow(nu, n));

  CheckContext ctx;
  ctx.window_size = window.size();
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  ctx.note("window", window_string(window));

  double worst = -1.0;
  VertexKey worst_v{};
  double worst_lhs = 0.0, worst_rhs = 0.0;
  for (const VertexKey& u : window) {
    const double lhs = std::pow(std::sqrt(s.branch_weight_sum(u)), n);
    const double rhs = s.norm_power_on_basis(u, n);
    const double d = std::abs(lhs - rhs);
    if (d > worst) {
      worst = d;
      worst_v = u;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  ctx.note("worst_vertex", to_string(worst_v));
  ctx.note("d_pow", worst_lhs);
  ctx.note("norm_power", worst_rhs);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), worst);
  return Verdict::make_fails(worst, worst_v, std::move(ctx));
}

Verdict quasinormal_tree_test(const TreeShiftOp& s, std::span<const VertexKey> window,
                              const TolerancePolicy& tol) {
  if (window.empty()) throw std::invalid_argument("quasinormal_tree_test: empty vertex window");
  const double nu = std::max(1.0, s.sup_branch_weight(window));
  const double bound = tol.bound(nu * nu * nu);

  CheckContext ctx;
  ctx.window_size = window.size();
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  ctx.note("window", window_string(window));

  double worst = -1.0;
  VertexKey worst_u{}, worst_child{};
  double worst_du = 0.0, worst_dv = 0.0;
  for (const VertexKey& u : window) {
    const double du = s.branch_weight_sum(u);
    // exact residual ||(CC*C - C*CC) e_u||^2 = sum_v |lambda_v|^2 (d(v)-d(u))^2
    double res_sq = 0.0;
    double edge_worst = -1.0;
    VertexKey edge_child{};
    double edge_dv = 0.0;
    for (const VertexKey& v : s.tree().children(u)) {
      const double w2 = std::norm(s.weights().at(v));
      if (w2 == 0.0) continue;  // zero weights impose no constraint
      const double dv = s.branch_weight_sum(v);
      res_sq += w2 * (dv - du) * (dv - du);
      const double gap = std::abs(dv - du) * std::sqrt(w2);
      if (gap > edge_worst) {
        edge_worst = gap;
        edge_child = v;
        edge_dv = dv;
      }
    }
    const double res = std::sqrt(res_sq);
    if (res > worst) {
      worst = res;
      worst_u = u;
      worst_child = edge_child;
      worst_du = du;
      worst_dv = edge_dv;
    }
  }
  ctx.note("worst_vertex", to_string(worst_u));
  ctx.note("edge_child", to_string(worst_child));
  ctx.note("d_parent", worst_du);
  ctx.note("d_child", worst_dv);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), std::max(0.0, worst));
  return Verdict::make_fails(worst, worst_u, std::move(ctx));
}

}  // namespace opcheck
