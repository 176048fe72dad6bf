#pragma once

#include <cstdint>
#include <map>

#include "opcheck/predicates.hpp"
#include "opcheck/tree_shift.hpp"

namespace opcheck {

/// Seeded generators behind the random corpora. Entry draw order is
/// row-major; unitaries come from modified Gram-Schmidt on a Gaussian
/// matrix, normal matrices from a random unitary conjugating a random
/// complex diagonal (the eigenbasis is known by construction).
Eigen::MatrixXcd random_complex_matrix(Rng& rng, int n);
Eigen::MatrixXcd random_unitary(Rng& rng, int n);
struct NormalWithBasis {
  Eigen::MatrixXcd matrix;
  Eigen::MatrixXcd eigenbasis;
  Eigen::VectorXcd eigenvalues;
};
NormalWithBasis random_normal_matrix(Rng& rng, int n);
Eigen::MatrixXcd random_hermitian(Rng& rng, int n);
Eigen::MatrixXcd random_psd(Rng& rng, int n);

/// Random directed tree on at most max_vertices vertices (random
/// attachment), with complex Gaussian weights zeroed independently with
/// probability zero_weight_prob.
struct RandomTreeShift {
  DirectedTree tree;
  std::map<VertexKey, Complex> weights;
};
RandomTreeShift random_tree_shift(Rng& rng, int max_vertices, double zero_weight_prob);

/// The structural-invariant run behind `opcheck corpus`: over `count` seeded
/// random matrices of dimensions dim_lo..dim_hi it checks that the three
/// quasinormality characterizations agree, that the power identity at n = 2
/// is equivalent to normality, that moment solvability of
/// (C*C, C*^2C^2, C*^3C^3) matches the quasinormality verdict, and the
/// power-identity biconditional at n = 2,3. One report entry per invariant.
Report corpus_run(std::uint64_t seed, int count, int dim_lo, int dim_hi,
                  const TolerancePolicy& tol);

}  // namespace opcheck
