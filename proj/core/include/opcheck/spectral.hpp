#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "opcheck/finite_matrix.hpp"
#include "opcheck/rng.hpp"
#include "opcheck/verdict.hpp"

namespace opcheck {

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues,
/// orthonormal eigenvector columns. Reconstruction residual and V*V = I are
/// kept within 1e-10 * max(1, ||H||) by the backing solver.
struct HermEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Rejects non-Hermitian input, reporting the measured asymmetry.
/// Deterministic for fixed input.
HermEigen herm_eig(const Eigen::MatrixXcd& h, double herm_tol = 1e-10);

/// |C| = (C*C)^{1/2} via the eigendecomposition of C*C with negative
/// eigenvalues clamped to zero.
Eigen::MatrixXcd modulus_of(const Eigen::MatrixXcd& c);

/// C = U|C| with U a partial isometry, ker U = ker C; singular values below
/// 1e-12 * sigma_max are treated as zero.
struct PolarDecomp {
  Eigen::MatrixXcd partial_isometry;
  Eigen::MatrixXcd modulus;
};
PolarDecomp polar_decompose(const Eigen::MatrixXcd& c);

/// Orthogonal projector onto the span of an eigenvalue cluster.
struct SpectralProjector {
  double cluster_value = 0.0;
  int multiplicity = 0;
  Eigen::MatrixXcd projector;
};

/// Groups ascending eigenvalues into clusters whose internal gaps are
/// <= cluster_tol * max(1, ||H||); one projector per cluster, a partition of
/// the identity.
std::vector<SpectralProjector> spectral_projectors(const Eigen::MatrixXcd& h,
                                                   double cluster_tol = 1e-8);
std::vector<SpectralProjector> projectors_from_eigen(const HermEigen& eig, double gap);

/// Projectors of a normal matrix given by a known orthonormal eigenbasis and
/// complex eigenvalues, clustered in the complex plane.
struct ComplexSpectralProjector {
  Complex cluster_value{};
  int multiplicity = 0;
  Eigen::MatrixXcd projector;
};
std::vector<ComplexSpectralProjector> complex_spectral_projectors(
    const Eigen::MatrixXcd& eigenbasis, const Eigen::VectorXcd& eigenvalues,
    double cluster_tol = 1e-8);

/// Holds iff every cluster projector of |C| commutes with C within
/// tolerance; Fails reports the worst projector and residual.
Verdict spectral_commutation_check(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Holds iff (I + C*C)^{-1} commutes with C within tolerance. The inverse is
/// computed spectrally; all eigenvalues of I + C*C are >= 1.
Verdict resolvent_commutation_check(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Commutation of a with phi(r) for the fixed test family: cluster
/// indicators of r, x -> 1/(1+x), x -> x, x -> x^2, and indicators composed
/// with the square root (clusters of the square roots of the spectrum). Rejects non-positive r.
/// Per-function residuals are recorded in the context.
Verdict function_calculus_commutation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& r,
                                      const TolerancePolicy& tol);

/// Random search for a finite pair (N normal, A) with NA = AN but
/// N*A != AN*. Asserts nothing: in finite dimension the search is expected
/// to come back empty, and the harness reports that honestly.
Verdict fuglede_counterexample_search(std::uint64_t seed, int trials, int dim,
                                      const TolerancePolicy& tol);

}  // namespace opcheck
