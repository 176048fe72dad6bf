#include "opcheck/finite_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace opcheck {

FiniteMatrixOp::FiniteMatrixOp(Eigen::MatrixXcd m)
    : FiniteMatrixOp(std::move(m), {}) {}

FiniteMatrixOp::FiniteMatrixOp(Eigen::MatrixXcd m, std::vector<Label> basis) {
  if (m.rows() != m.cols()) throw std::invalid_argument("FiniteMatrixOp: matrix must be square");
  auto data = std::make_shared<Data>();
  if (basis.empty()) basis = nat_labels(m.rows());
  if (static_cast<Eigen::Index>(basis.size()) != m.rows())
    throw std::invalid_argument("FiniteMatrixOp: basis size does not match dimension");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!data->index.emplace(basis[static_cast<std::size_t>(i)], i).second)
      throw std::invalid_argument("FiniteMatrixOp: duplicate basis label " +
                                  basis[static_cast<std::size_t>(i)].str());
  }
  data->m = std::move(m);
  data->basis = std::move(basis);
  d_ = std::move(data);
}

Eigen::VectorXcd FiniteMatrixOp::coords(const SparseVec& f) const {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim());
  for (const auto& [l, c] : f.entries()) {
    const auto it = d_->index.find(l);
    if (it != d_->index.end()) x(it->second) = c;
  }
  return x;
}

SparseVec FiniteMatrixOp::from_coords(const Eigen::VectorXcd& x) const {
  SparseVec out;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out.set(d_->basis[static_cast<std::size_t>(i)], x(i));
  return out;
}

SparseVec FiniteMatrixOp::apply(const SparseVec& f) const {
  return from_coords(d_->m * coords(f));
}

SparseVec FiniteMatrixOp::adjoint_apply(const SparseVec& f) const {
  return from_coords(d_->m.adjoint() * coords(f));
}

LocalOperator FiniteMatrixOp::to_local() const {
  const FiniteMatrixOp self = *this;  // shares Data
  return {"matrix(" + std::to_string(dim()) + "x" + std::to_string(dim()) + ")",
          [self](const SparseVec& f) { return self.apply(f); },
          [self](const SparseVec& f) { return self.adjoint_apply(f); }};
}

FiniteMatrixOp matrix_of(const LocalOperator& a, const std::vector<Label>& labels) {
  const Eigen::Index n = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::map<Label, Eigen::Index> index;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!index.emplace(labels[static_cast<std::size_t>(i)], i).second)
      throw std::invalid_argument("matrix_of: duplicate label " +
                                  labels[static_cast<std::size_t>(i)].str());
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const SparseVec col = a.apply(SparseVec::basis(labels[static_cast<std::size_t>(j)]));
    for (const auto& [l, c] : col.entries()) {
      const auto it = index.find(l);
      if (it != index.end()) m(it->second, j) = c;
    }
  }
  return {std::move(m), labels};
}

std::vector<Label> nat_labels(Eigen::Index n) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(Label::nat(i));
  return out;
}

double max_column_norm(const Eigen::MatrixXcd& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).norm());
  return best;
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int n) {
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace opcheck
