#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opcheck/direct_sum.hpp"
#include "opcheck/predicates.hpp"
#include "opcheck/tree_shift.hpp"

namespace opcheck {

/// A predicate the exhibit is expected to produce, with the anchor identity.
struct ExpectedOutcome {
  std::string predicate;
  Status expected = Status::Holds;
  std::string anchor;
};

struct ExhibitRunOptions {
  std::uint64_t seed = 42;
  TolerancePolicy tol{};
  int probe_budget = 200;        // identity checks
  int falsifier_budget = 10000;  // paranormality search
  std::vector<int> toeplitz_dims = {16, 32, 64};
};

// ----------------------------------------------------------------- prz2
/// Weighted shift on T_{2,kappa} with alpha weights entering the rays and
/// beta weights along them: the power identity at n = 2 holds while
/// quasinormality fails. Construction re-validates all parameter
/// constraints: nonzero weights, |a1|^2 + |a2|^2 = 1,
/// |a1 b1|^2 + |a2 b2|^2 = 1 and (1 - |b1|)(1 - |b2|) != 0.
struct Prz2Exhibit {
  TreeShiftOp op;
  Complex alpha1, alpha2, beta1, beta2;
  std::optional<std::int64_t> kappa;
  std::vector<ExpectedOutcome> expected;

  Report run(const ExhibitRunOptions& opts) const;
};
Prz2Exhibit build_prz2(Complex alpha1, Complex alpha2, Complex beta1, Complex beta2,
                       std::optional<std::int64_t> kappa = 0, std::int64_t depth_cap = 8);
/// alpha = (1/sqrt2, 1/sqrt2), beta = (1/sqrt2, sqrt(3/2)), kappa = 0.
Prz2Exhibit build_prz2_default();

// ----------------------------------------------------------------- prz3
/// f(x) = log(log(2-x)/(-log x)) / log(x/(2-x)) on (0,1); positive, tends
/// to 0 as x -> 0+. x = 1 is a singularity of the formula.
double prz3_f(double x);
/// g(x) = gamma^{x/(n-1)} + (2-gamma)^{x/(n-1)}; strictly increasing on
/// [(n-1) f(gamma), infinity).
double prz3_g(double x, double gamma, int n);
/// Largest x in the scan sequence 2^-m, m = 1, 2, ..., with
/// 0 < (n-1) f(x) <= 1; deterministic. Throws if the scan exhausts at
/// m = 64 (numerical breakdown, not mathematical failure).
double prz3_gamma(int n);

/// Weighted shift on T_{2,0} separating the power identities: the identity
/// holds exactly for k in {0, 1, n} and fails for every other k, with
/// margin |g(k-1)/2 - 1|.
struct Prz3Exhibit {
  TreeShiftOp op;
  int n;
  double gamma;
  double beta1, beta2;
  std::vector<ExpectedOutcome> expected;

  Report run(const ExhibitRunOptions& opts) const;
};
Prz3Exhibit build_prz3(int n, std::int64_t depth_cap = 8);

// ----------------------------------------------------------------- prz1
struct Prz1Section {
  int dim = 0;
  Eigen::MatrixXcd toeplitz;       // (T)_{jk} = c_{j-k}
  Eigen::MatrixXcd shift;          // N x N shift compression
  Eigen::MatrixXcd sqrt_toeplitz;  // spectral square root of the section
  Eigen::MatrixXcd c;              // S * T^{1/2}
};
Prz1Section build_prz1_section(int dim, const std::vector<Complex>& coeffs);

/// Toeplitz compression study: the banded identity S*TS = T is exact on the
/// window j,k < N-1, while the power identity (C*C)^2 = C*^2C^2 for
/// C = S T^{1/2} is certified only in the N -> infinity trend. The
/// discrepancy is measured on one interior window [0, N_min - 2b) common to
/// all requested dimensions. The symbol must be a real nonnegative
/// trigonometric polynomial with c_1 != 0 (nonvanishing first moment, which
/// keeps S and T from commuting).
struct Prz1Exhibit {
  std::vector<Complex> coeffs;  // c_0..c_b; c_{-k} = conj(c_k)
  std::vector<int> dims;
  std::vector<ExpectedOutcome> expected;

  Report run(const ExhibitRunOptions& opts) const;
};
Prz1Exhibit build_prz1(std::vector<int> dims = {16, 32, 64},
                       std::vector<Complex> coeffs = {Complex(2.0, 0.0), Complex(1.0, 0.0)});

// ----------------------------------------------------------------- prz4
/// Orthogonal sum of scaled shift isometries, quasinormal with an
/// unbounded scale rule. The witness sequence t_j = 1/(r_j sqrt(j+1)) gives
/// a vector inside the domain of the adjoint of the n-th power but outside
/// the domain of the n-th power of the adjoint; both sides are certified,
/// the divergent harmonic side symbolically for large thresholds.
struct Prz4Exhibit {
  DirectSumOp op;
  ScaleRule rule;
  int n;
  std::vector<ExpectedOutcome> expected;

  Report run(const ExhibitRunOptions& opts) const;
};
Prz4Exhibit build_prz4(const ScaleRule& rule, int n);

/// Smallest count T with sum_{j=0}^{T-1} 1/(j+1) > m, by direct summation.
std::int64_t harmonic_terms_exceeding(double m);

// ----------------------------------------------------------------- sums
/// Blockwise identities of finite orthogonal sums: adjoint powers, C*C and
/// the modulus decompose blockwise, and the sum is quasinormal iff every
/// block is. Requires at least two blocks.
Report achtenZ_demo(const std::vector<FiniteMatrixOp>& blocks, const ExhibitRunOptions& opts);

// ----------------------------------------------------------------- catalog
/// Accepts "prz1", "prz2", "prz2:kappa=2", "prz3:n=4", "prz4:r=poly1",
/// "prz4:r=pow2,n=3", "achtenZ". Unknown names or parameters throw.
Report run_exhibit(const std::string& name_with_params, const ExhibitRunOptions& opts);
std::vector<std::string> exhibit_catalog();

}  // namespace opcheck
