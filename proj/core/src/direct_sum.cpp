#include "opcheck/direct_sum.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace opcheck {

ScaleRule ScaleRule::constant(double c) {
  if (c < 0.0) throw std::invalid_argument("ScaleRule: negative scale");
  ScaleRule r;
  r.kind_ = Kind::Constant;
  r.a_ = c;
  r.text_ = "r_j=" + std::to_string(c);
  return r;
}

ScaleRule ScaleRule::affine(double slope, double offset) {
  if (slope < 0.0 || offset < 0.0) throw std::invalid_argument("ScaleRule: negative scale");
  ScaleRule r;
  r.kind_ = Kind::Affine;
  r.a_ = slope;
  r.b_ = offset;
  r.text_ = "r_j=" + std::to_string(slope) + "*j+" + std::to_string(offset);
  return r;
}

ScaleRule ScaleRule::geometric(double base, double ratio) {
  if (base < 0.0 || ratio < 0.0) throw std::invalid_argument("ScaleRule: negative scale");
  ScaleRule r;
  r.kind_ = Kind::Geometric;
  r.a_ = base;
  r.b_ = ratio;
  r.text_ = "r_j=" + std::to_string(base) + "*" + std::to_string(ratio) + "^j";
  return r;
}

ScaleRule ScaleRule::from_list(std::vector<double> values) {
  for (double v : values)
    if (v < 0.0) throw std::invalid_argument("ScaleRule: negative scale in list");
  ScaleRule r;
  r.kind_ = Kind::List;
  r.list_ = std::move(values);
  r.text_ = "r=list[" + std::to_string(r.list_.size()) + "]";
  return r;
}

double ScaleRule::at(std::int64_t j) const {
  if (j < 0) throw std::invalid_argument("ScaleRule: negative block index");
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::Affine:
      return a_ * static_cast<double>(j) + b_;
    case Kind::Geometric:
      return a_ * std::pow(b_, static_cast<double>(j));
    default:
      if (static_cast<std::size_t>(j) >= list_.size())
        throw std::out_of_range("ScaleRule: block index " + std::to_string(j) +
                                " past end of explicit list (size " +
                                std::to_string(list_.size()) + ")");
      return list_[static_cast<std::size_t>(j)];
  }
}

bool ScaleRule::is_monotone_unbounded() const {
  switch (kind_) {
    case Kind::Affine:
      return a_ > 0.0;
    case Kind::Geometric:
      return a_ > 0.0 && b_ > 1.0;
    default:
      return false;
  }
}

double ScaleRule::min_value() const {
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::Affine:
      return b_;
    case Kind::Geometric:
      return b_ >= 1.0 ? a_ : 0.0;  // decreasing geometric has infimum 0
    default: {
      double m = list_.empty() ? 0.0 : list_[0];
      for (double v : list_) m = std::min(m, v);
      return m;
    }
  }
}

namespace {

// Split f into per-block inner vectors; non-block labels are a universe error.
std::map<std::int64_t, SparseVec> split_blocks(const SparseVec& f, const char* who) {
  std::map<std::int64_t, SparseVec> per;
  for (const auto& [l, c] : f.entries()) {
    if (l.kind() != Label::Kind::Block)
      throw std::invalid_argument(std::string(who) + ": non-block label " + l.str());
    per[l.block_index()].set(l.block_inner(), c);
  }
  return per;
}

SparseVec merge_block(std::int64_t j, const SparseVec& g, double scl, SparseVec out) {
  for (const auto& [il, c] : g.entries()) out.add(Label::block(j, il), scl * c);
  return out;
}

}  // namespace

DirectSumOp::DirectSumOp(LocalOperator block_op, ScaleRule scales)
    : block_(std::move(block_op)), scales_(std::move(scales)) {}

SparseVec DirectSumOp::apply(const SparseVec& f) const {
  SparseVec out;
  for (const auto& [j, g] : split_blocks(f, "DirectSumOp::apply"))
    out = merge_block(j, block_.apply(g), scales_.at(j), std::move(out));
  return out;
}

SparseVec DirectSumOp::adjoint_apply(const SparseVec& f) const {
  SparseVec out;
  // scales are real, so the adjoint block action is r_j * block_op^*
  for (const auto& [j, g] : split_blocks(f, "DirectSumOp::adjoint_apply"))
    out = merge_block(j, block_.adjoint_apply(g), scales_.at(j), std::move(out));
  return out;
}

LocalOperator DirectSumOp::to_local() const {
  const DirectSumOp self = *this;
  return {"dsum(" + block_.descriptor() + ", " + scales_.str() + ")",
          [self](const SparseVec& f) { return self.apply(f); },
          [self](const SparseVec& f) { return self.adjoint_apply(f); }};
}

DirectSumOp direct_sum(const LocalOperator& block_op, const ScaleRule& scales) {
  return {block_op, scales};
}

LocalOperator direct_sum_blocks(std::vector<LocalOperator> blocks) {
  auto at = [blocks](std::int64_t j) -> const LocalOperator& {
    if (j < 0 || static_cast<std::size_t>(j) >= blocks.size())
      throw std::out_of_range("direct_sum_blocks: block index " + std::to_string(j) +
                              " out of range");
    return blocks[static_cast<std::size_t>(j)];
  };
  auto fwd = [at](const SparseVec& f) {
    SparseVec out;
    for (const auto& [j, g] : split_blocks(f, "direct_sum_blocks"))
      out = merge_block(j, at(j).apply(g), 1.0, std::move(out));
    return out;
  };
  auto adj = [at](const SparseVec& f) {
    SparseVec out;
    for (const auto& [j, g] : split_blocks(f, "direct_sum_blocks"))
      out = merge_block(j, at(j).adjoint_apply(g), 1.0, std::move(out));
    return out;
  };
  return {"dsum_blocks[" + std::to_string(blocks.size()) + "]", fwd, adj};
}

FiniteMatrixOp block_diag(const std::vector<FiniteMatrixOp>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  Eigen::Index off = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    m.block(off, off, b.dim(), b.dim()) = b.matrix();
    for (const auto& l : b.basis()) labels.push_back(Label::block(static_cast<std::int64_t>(j), l));
    off += b.dim();
  }
  return {std::move(m), std::move(labels)};
}

}  // namespace opcheck
