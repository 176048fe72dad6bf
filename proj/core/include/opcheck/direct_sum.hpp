#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opcheck/finite_matrix.hpp"
#include "opcheck/local_operator.hpp"

namespace opcheck {

/// Nonnegative block-scale rule j -> r_j, either a closed form evaluated on
/// demand (no truncation of the block index) or an explicit finite list
/// (indices past the end are an error, never silently zero).
class ScaleRule {
 public:
  static ScaleRule constant(double c);
  static ScaleRule affine(double slope, double offset);    // r_j = slope*j + offset
  static ScaleRule geometric(double base, double ratio);   // r_j = base * ratio^j
  static ScaleRule from_list(std::vector<double> values);

  double at(std::int64_t j) const;
  /// True for closed forms with r_j -> infinity (affine slope > 0, geometric
  /// ratio > 1); certified by the rule itself, not by sampling.
  bool is_monotone_unbounded() const;
  /// Infimum of r_j over j >= 0.
  double min_value() const;
  const std::string& str() const { return text_; }

 private:
  enum class Kind { Constant, Affine, Geometric, List };
  Kind kind_ = Kind::Constant;
  double a_ = 0.0, b_ = 0.0;
  std::vector<double> list_;
  std::string text_;
};

/// Blockwise operator on Block(j, .) labels: applies r_j * block_op inside
/// block j; blocks never mix. Rejects labels outside the block universe.
class DirectSumOp {
 public:
  DirectSumOp(LocalOperator block_op, ScaleRule scales);

  SparseVec apply(const SparseVec& f) const;
  SparseVec adjoint_apply(const SparseVec& f) const;
  LocalOperator to_local() const;

  const LocalOperator& block_op() const { return block_; }
  const ScaleRule& scales() const { return scales_; }

 private:
  LocalOperator block_;
  ScaleRule scales_;
};

DirectSumOp direct_sum(const LocalOperator& block_op, const ScaleRule& scales);

/// Finite orthogonal sum of heterogeneous operators, block j acting inside
/// Block(j, .).
LocalOperator direct_sum_blocks(std::vector<LocalOperator> blocks);

/// Assembled block-diagonal matrix with Block(j, inner) basis labels.
FiniteMatrixOp block_diag(const std::vector<FiniteMatrixOp>& blocks);

}  // namespace opcheck
