#include "opcheck/corpus.hpp"

#include <stdexcept>

namespace opcheck {

Eigen::MatrixXcd random_complex_matrix(Rng& rng, int n) {
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

Eigen::MatrixXcd random_unitary(Rng& rng, int n) {
  Eigen::MatrixXcd a = random_complex_matrix(rng, n);
  // modified Gram-Schmidt; dimensions are desk scale so this is stable enough
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) a.col(j) -= a.col(k).dot(a.col(j)) * a.col(k);
    const double nj = a.col(j).norm();
    if (nj < 1e-12) throw std::runtime_error("random_unitary: degenerate draw");
    a.col(j) /= nj;
  }
  return a;
}

NormalWithBasis random_normal_matrix(Rng& rng, int n) {
  NormalWithBasis out;
  out.eigenbasis = random_unitary(rng, n);
  out.eigenvalues = Eigen::VectorXcd(n);
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues(i) = rng.complex_gaussian();
  out.matrix = out.eigenbasis * out.eigenvalues.asDiagonal() * out.eigenbasis.adjoint();
  return out;
}

Eigen::MatrixXcd random_hermitian(Rng& rng, int n) {
  const Eigen::MatrixXcd a = random_complex_matrix(rng, n);
  return ((a + a.adjoint()) * 0.5).eval();
}

Eigen::MatrixXcd random_psd(Rng& rng, int n) {
  const Eigen::MatrixXcd a = random_complex_matrix(rng, n);
  return (a.adjoint() * a).eval();
}

RandomTreeShift random_tree_shift(Rng& rng, int max_vertices, double zero_weight_prob) {
  if (max_vertices < 2) throw std::invalid_argument("random_tree_shift: need >= 2 vertices");
  const int n = 2 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_vertices - 1)));
  std::vector<VertexKey> vertices;
  std::vector<std::pair<VertexKey, VertexKey>> edges;
  std::map<VertexKey, Complex> weights;
  for (int v = 0; v < n; ++v) vertices.push_back(VertexKey{0, v});
  for (int v = 1; v < n; ++v) {
    const auto p = static_cast<std::int32_t>(rng.uniform_below(static_cast<std::uint64_t>(v)));
    edges.emplace_back(VertexKey{0, p}, VertexKey{0, v});
    const Complex w =
        rng.uniform01() < zero_weight_prob ? Complex(0.0, 0.0) : rng.complex_gaussian();
    weights.emplace(VertexKey{0, v}, w);
  }
  return {DirectedTree::finite(vertices, edges), std::move(weights)};
}

Report corpus_run(std::uint64_t seed, int count, int dim_lo, int dim_hi,
                  const TolerancePolicy& tol) {
  if (count < 0) throw std::invalid_argument("corpus_run: negative count");
  if (dim_lo < 1 || dim_hi < dim_lo) throw std::invalid_argument("corpus_run: bad dimension range");
  Report r;
  r.descriptor = "corpus(count=" + std::to_string(count) + ",dims=" + std::to_string(dim_lo) +
                 ".." + std::to_string(dim_hi) + ")";
  r.seed = seed;
  r.tol = tol;

  Rng rng(seed);
  int agree_bad = -1, paran2_bad = -1, moment_bad = -1, embry_bad = -1;
  for (int i = 0; i < count; ++i) {
    const int dim = dim_lo + i % (dim_hi - dim_lo + 1);
    const FiniteMatrixOp c(random_complex_matrix(rng, dim));
    const Eigen::MatrixXcd& m = c.matrix();

    if (agree_bad < 0) {
      const Report a = quasinormal_agreement(c, tol);
      if (!std::all_of(a.entries.begin(), a.entries.end(), [](const ReportEntry& e) {
            return e.predicate != "agreement" || e.verdict.holds();
          }))
        agree_bad = i;
    }
    if (paran2_bad < 0 && !paran2_check(c, tol).holds()) paran2_bad = i;
    if (moment_bad < 0) {
      const Eigen::MatrixXcd m1 = m.adjoint() * m;
      const Eigen::MatrixXcd c2 = m * m;
      const Eigen::MatrixXcd c3 = m * m * m;
      const Verdict ms = moment_solvability_test(m1, c2.adjoint() * c2, c3.adjoint() * c3, tol);
      if (ms.holds() != quasinormal_test(c, tol).holds()) moment_bad = i;
    }
    if (embry_bad < 0) {
      const Report e = embry_suite(c, 6, tol);
      if (!std::all_of(e.entries.begin(), e.entries.end(), [](const ReportEntry& en) {
            return (en.predicate != "embry_biconditional" &&
                    en.predicate != "power_family_consistency") ||
                   en.verdict.holds();
          }))
        embry_bad = i;
    }
  }

  auto add_invariant = [&r, count](const std::string& name, const std::string& anchor,
                                   int bad_index) {
    CheckContext ctx;
    ctx.probes_used = count;
    Verdict v = bad_index < 0
                    ? Verdict::make_holds(std::move(ctx))
                    : Verdict::make_fails(1.0, "instance " + std::to_string(bad_index),
                                          std::move(ctx));
    r.add(name, anchor, std::move(v));
  };
  add_invariant("characterization_agreement", anchors::agreement, agree_bad);
  add_invariant("paran2_biconditional", anchors::paran2, paran2_bad);
  add_invariant("moment_vs_quasinormal", anchors::moment, moment_bad);
  add_invariant("embry_biconditional", anchors::embry_biconditional, embry_bad);
  r.normalize();
  return r;
}

}  // namespace opcheck
