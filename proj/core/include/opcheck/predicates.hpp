#pragma once

#include <optional>

#include "opcheck/finite_matrix.hpp"
#include "opcheck/probes.hpp"
#include "opcheck/report.hpp"
#include "opcheck/spectral.hpp"

namespace opcheck {

/// The identities behind each predicate, quoted verbatim in report anchors.
namespace anchors {
inline constexpr const char* quasinormal = "CC*C = C*CC";
inline constexpr const char* normality = "C*C = CC*";
inline constexpr const char* resolvent = "(I+C*C)^{-1}C = C(I+C*C)^{-1}";
inline constexpr const char* spectral = "E_{|C|}C = CE_{|C|}";
inline constexpr const char* agreement =
    "triple product <=> resolvent commutation <=> spectral commutation";
inline constexpr const char* embry_biconditional =
    "quasinormal <=> power identities at n=2 and n=3";
inline constexpr const char* power_family = "quasinormal => (C*C)^n = C*^nC^n for all n";
inline constexpr const char* moment = "M1 >= 0, M2 = M1^2, M3 = M1^3";
inline constexpr const char* paranormal = "||Cf||^2 <= ||C^2 f|| ||f||";
inline constexpr const char* hyponormal = "C*C >= CC*";
inline constexpr const char* paran2 = "(C*C)^2 = C*^2C^2 <=> normal (finite dimension)";
inline constexpr const char* power_closure = "(C^n)*^k(C^n)^k = (C*C)^{nk}";
std::string power_identity(int n);
}  // namespace anchors

/// CC*C f = C*CC f on the window basis and on random probes. Fails returns
/// the worst probe vector.
Verdict quasinormal_test(const LocalOperator& c, const ProbeConfig& probes,
                         const TolerancePolicy& tol);
/// Exact matrix products; the witness is the worst basis column.
Verdict quasinormal_test(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// (C*C)^n f = C*^n C^n f. n in {0,1} holds identically.
///
/// In finite dimension there is no inclusion-vs-equality distinction (a
/// symmetric restriction of a selfadjoint matrix of the same rank is the
/// matrix), and (C^n)* = C*^n, so the variant identities (C*C)^n = (C^n)*C^n
/// collapse to this one; the Fails witness is always a basis vector for the
/// matrix overload.
Verdict power_identity_test(const LocalOperator& c, int n, const ProbeConfig& probes,
                            const TolerancePolicy& tol);
Verdict power_identity_test(const FiniteMatrixOp& c, int n, const TolerancePolicy& tol);

Verdict normality_test(const LocalOperator& c, const ProbeConfig& probes,
                       const TolerancePolicy& tol);
Verdict normality_test(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Finite-dimensional solvability of the truncated operator moment problem:
/// Holds iff m1 is positive semidefinite, m2 = m1^2 and m3 = m1^3 (the
/// spectral measure is then E_{m1}, and it is unique). Rejects non-Hermitian
/// input. Fails names the broken condition.
Verdict moment_solvability_test(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2,
                                const Eigen::MatrixXcd& m3, const TolerancePolicy& tol);

/// Searches for f with ||Cf||^2 > ||C^2 f|| ||f||: window basis, random
/// probes, then a projective grid over the span of the two worst probes
/// (360 angles x 20 moduli). Paranormality is not decidable by sampling, so
/// the negative outcome is Inconclusive, never Holds.
Verdict paranormal_falsify(const LocalOperator& c, const ProbeConfig& probes,
                           const TolerancePolicy& tol);
/// Decisive for matrices: C is paranormal iff C*^2C^2 - 2t C*C + t^2 I >= 0
/// for all t > 0; the least eigenvalue is minimized over the log grid
/// t = 2^k, k = -20..20, refined by golden section. A negative minimum
/// yields an explicit witness vector.
Verdict paranormal_falsify(const FiniteMatrixOp& c, const TolerancePolicy& tol);
/// Dense sampling oracle used to validate the decisive test: returns a
/// violating vector if one of num_probes Gaussian probes scores positive.
std::optional<Eigen::VectorXcd> paranormal_probe_search(const FiniteMatrixOp& c, int num_probes,
                                                        std::uint64_t seed,
                                                        const TolerancePolicy& tol);

/// Searches for f with <(C*C - CC*)f, f> < 0. The quadratic form is
/// evaluated exactly on finitely supported vectors, so a witness is valid
/// for the genuine operator, not just a compression. After basis and probe
/// scans, the form is compressed to the window and its least eigenvector is
/// tried.
Verdict hyponormal_falsify(const LocalOperator& c, const ProbeConfig& probes,
                           const TolerancePolicy& tol);
/// Decisive for matrices: least eigenvalue of C*C - CC*.
Verdict hyponormal_falsify(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Asserts the finite-dimensional biconditional: power identity at n = 2
/// holds iff C is normal. Fails only if the biconditional itself breaks,
/// which would be a defect of this artifact.
Verdict paran2_check(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Requires quasinormal_test(c) to hold (else Inconclusive); verifies
/// (C^n)*^k (C^n)^k = (C*C)^{nk} and that C^n is itself quasinormal.
Verdict quasinormal_power_closure_check(const FiniteMatrixOp& c, int n, int k,
                                          const TolerancePolicy& tol);

/// Runs the three equivalent characterizations -- triple product equality,
/// resolvent commutation, spectral-projector commutation -- and flags any
/// disagreement as a defect of this artifact. (Equality and inclusion
/// versions of the triple product coincide in finite dimension.)
Report quasinormal_agreement(const FiniteMatrixOp& c, const TolerancePolicy& tol);

/// Power identities for n = 2..n_max plus the quasinormality test, with the
/// biconditional (quasinormal <=> n = 2 and n = 3 both hold) asserted and a
/// "separation" note whenever a single power identity holds for a
/// non-quasinormal operator. Requires n_max >= 3.
Report embry_suite(const LocalOperator& c, int n_max, const ProbeConfig& probes,
                   const TolerancePolicy& tol);
Report embry_suite(const FiniteMatrixOp& c, int n_max, const TolerancePolicy& tol);

}  // namespace opcheck
