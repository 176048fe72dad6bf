#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <vector>

#include "opcheck/local_operator.hpp"

namespace opcheck {

/// A finite matrix acting on the span of an ordered label basis. Applying it
/// to a sparse vector first projects onto that span (compression semantics);
/// the adjoint action is the conjugate transpose.
class FiniteMatrixOp {
 public:
  /// Basis defaults to the sequence labels 0..n-1.
  explicit FiniteMatrixOp(Eigen::MatrixXcd m);
  FiniteMatrixOp(Eigen::MatrixXcd m, std::vector<Label> basis);

  Eigen::Index dim() const { return d_->m.rows(); }
  const Eigen::MatrixXcd& matrix() const { return d_->m; }
  const std::vector<Label>& basis() const { return d_->basis; }

  SparseVec apply(const SparseVec& f) const;
  SparseVec adjoint_apply(const SparseVec& f) const;
  LocalOperator to_local() const;

  /// Coefficients of f on the basis (components off the span are dropped).
  Eigen::VectorXcd coords(const SparseVec& f) const;
  SparseVec from_coords(const Eigen::VectorXcd& x) const;

 private:
  struct Data {
    Eigen::MatrixXcd m;
    std::vector<Label> basis;
    std::map<Label, Eigen::Index> index;
  };
  std::shared_ptr<const Data> d_;
};

/// Compression of a to span(labels): entry (i,j) = <A e_{labels[j]}, e_{labels[i]}>.
FiniteMatrixOp matrix_of(const LocalOperator& a, const std::vector<Label>& labels);

std::vector<Label> nat_labels(Eigen::Index n);

/// Max Euclidean column norm -- the operator-norm surrogate used in
/// tolerance scales throughout.
double max_column_norm(const Eigen::MatrixXcd& m);

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int n);

}  // namespace opcheck
