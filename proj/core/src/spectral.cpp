#include "opcheck/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opcheck {

HermEigen herm_eig(const Eigen::MatrixXcd& h, double herm_tol) {
  const double asym = (h - h.adjoint()).norm();
  if (asym > herm_tol * std::max(1.0, h.norm()))
    throw std::invalid_argument("herm_eig: input not Hermitian, ||H - H*|| = " +
                                format_17g(asym));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((h + h.adjoint()) * 0.5).eval());
  if (es.info() != Eigen::Success) throw std::runtime_error("herm_eig: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXcd modulus_of(const Eigen::MatrixXcd& c) {
  const HermEigen eig = herm_eig(c.adjoint() * c);
  Eigen::VectorXd s = eig.values.cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd m = eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
  return ((m + m.adjoint()) * 0.5).eval();
}

PolarDecomp polar_decompose(const Eigen::MatrixXcd& c) {
  const HermEigen eig = herm_eig(c.adjoint() * c);
  const Eigen::VectorXd s = eig.values.cwiseMax(0.0).cwiseSqrt();
  const double cut = 1e-12 * (s.size() ? s.maxCoeff() : 0.0);
  Eigen::VectorXd sinv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) sinv(i) = 1.0 / s(i);
  PolarDecomp out;
  const Eigen::MatrixXcd mod = eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
  out.modulus = ((mod + mod.adjoint()) * 0.5).eval();
  out.partial_isometry = c * eig.vectors * sinv.asDiagonal() * eig.vectors.adjoint();
  return out;
}

std::vector<SpectralProjector> projectors_from_eigen(const HermEigen& eig, double gap) {
  std::vector<SpectralProjector> out;
  const Eigen::Index n = eig.values.size();
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && eig.values(hi) - eig.values(hi - 1) <= gap) ++hi;
    SpectralProjector p;
    p.multiplicity = static_cast<int>(hi - lo);
    p.cluster_value = eig.values.segment(lo, hi - lo).mean();
    const auto block = eig.vectors.middleCols(lo, hi - lo);
    p.projector = block * block.adjoint();
    out.push_back(std::move(p));
    lo = hi;
  }
  return out;
}

std::vector<SpectralProjector> spectral_projectors(const Eigen::MatrixXcd& h,
                                                   double cluster_tol) {
  const HermEigen eig = herm_eig(h);
  const double scale =
      std::max(1.0, eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0);
  return projectors_from_eigen(eig, cluster_tol * scale);
}

std::vector<ComplexSpectralProjector> complex_spectral_projectors(
    const Eigen::MatrixXcd& eigenbasis, const Eigen::VectorXcd& eigenvalues,
    double cluster_tol) {
  const Eigen::Index n = eigenvalues.size();
  if (eigenbasis.cols() != n)
    throw std::invalid_argument("complex_spectral_projectors: basis/value size mismatch");
  const double scale =
      std::max(1.0, n ? eigenvalues.cwiseAbs().maxCoeff() : 0.0);
  const double gap = cluster_tol * scale;

  // single-link clustering by union-find; n is small everywhere in scope
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(eigenvalues(i) - eigenvalues(j)) <= gap)
        parent[static_cast<std::size_t>(find(j))] = find(i);

  std::vector<ComplexSpectralProjector> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    const Eigen::Index root = find(i);
    ComplexSpectralProjector p;
    p.projector = Eigen::MatrixXcd::Zero(eigenbasis.rows(), eigenbasis.rows());
    Complex sum(0.0, 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (find(j) != root) continue;
      used[static_cast<std::size_t>(j)] = true;
      p.projector += eigenbasis.col(j) * eigenbasis.col(j).adjoint();
      sum += eigenvalues(j);
      ++p.multiplicity;
    }
    p.cluster_value = sum / static_cast<double>(p.multiplicity);
    out.push_back(std::move(p));
  }
  return out;
}

Verdict spectral_commutation_check(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const HermEigen eig = herm_eig(m.adjoint() * m);
  const Eigen::VectorXd s = eig.values.cwiseMax(0.0).cwiseSqrt();
  HermEigen mod{s, eig.vectors};
  const double mscale = std::max(1.0, s.size() ? s.maxCoeff() : 0.0);
  const auto projectors = projectors_from_eigen(mod, 1e-8 * mscale);

  CheckContext ctx;
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  ctx.note("clusters", static_cast<double>(projectors.size()));
  const double bound = tol.bound(std::max(1.0, max_column_norm(m)));

  double worst = -1.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const double r = (projectors[k].projector * m - m * projectors[k].projector).norm();
    if (r > worst) {
      worst = r;
      worst_k = k;
    }
  }
  ctx.note("worst_residual", worst);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), worst);
  return Verdict::make_fails(
      worst,
      "projector[" + std::to_string(worst_k) + "]@" +
          format_17g(projectors[worst_k].cluster_value),
      std::move(ctx));
}

Verdict resolvent_commutation_check(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const HermEigen eig = herm_eig(m.adjoint() * m);
  // eigenvalues of I + C*C are >= 1, so the inverse is well conditioned
  Eigen::VectorXd inv = (eig.values.array().cwiseMax(0.0) + 1.0).inverse().matrix();
  const Eigen::MatrixXcd res = eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
  const double r = (res * m - m * res).norm();
  CheckContext ctx;
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  ctx.note("residual", r);
  const double bound = tol.bound(std::max(1.0, max_column_norm(m)));
  if (r <= bound) return Verdict::make_holds(std::move(ctx), r);
  return Verdict::make_fails(r, std::string("resolvent"), std::move(ctx));
}

Verdict function_calculus_commutation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& r,
                                      const TolerancePolicy& tol) {
  const HermEigen eig = herm_eig(r);  // rejects non-Hermitian input
  const double rscale = std::max(1.0, eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0);
  if (eig.values.size() && eig.values.minCoeff() < -tol.bound(rscale))
    throw std::invalid_argument("function_calculus_commutation: r is not positive, min eig = " +
                                format_17g(eig.values.minCoeff()));

  struct TestFn {
    std::string name;
    Eigen::MatrixXcd value;
  };
  std::vector<TestFn> family;

  const auto indicators = projectors_from_eigen(eig, 1e-8 * rscale);
  for (std::size_t k = 0; k < indicators.size(); ++k)
    family.push_back({"indicator[" + std::to_string(k) + "]@" +
                          format_17g(indicators[k].cluster_value),
                      indicators[k].projector});

  Eigen::VectorXd inv = (eig.values.array().cwiseMax(0.0) + 1.0).inverse().matrix();
  family.push_back({"1/(1+x)", eig.vectors * inv.asDiagonal() * eig.vectors.adjoint()});
  family.push_back({"x", r});
  family.push_back({"x^2", r * r});

  // indicators of sqrt-spectrum clusters, i.e. phi(x) = chi_D(sqrt(x))
  HermEigen sqrt_eig{eig.values.cwiseMax(0.0).cwiseSqrt(), eig.vectors};
  const double sscale = std::max(1.0, sqrt_eig.values.size() ? sqrt_eig.values.maxCoeff() : 0.0);
  const auto sqrt_ind = projectors_from_eigen(sqrt_eig, 1e-8 * sscale);
  for (std::size_t k = 0; k < sqrt_ind.size(); ++k)
    family.push_back({"indicator_sqrt[" + std::to_string(k) + "]@" +
                          format_17g(sqrt_ind[k].cluster_value),
                      sqrt_ind[k].projector});

  CheckContext ctx;
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  const double anorm = std::max(1.0, max_column_norm(a));
  double worst = -1.0;
  std::string worst_name;
  for (const auto& fn : family) {
    const double res = (fn.value * a - a * fn.value).norm();
    ctx.note(fn.name, res);
    const double rel = res / std::max(1.0, max_column_norm(fn.value));
    if (rel > worst) {
      worst = rel;
      worst_name = fn.name;
    }
  }
  const double bound = tol.bound(anorm);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), worst);
  return Verdict::make_fails(worst, std::move(worst_name), std::move(ctx));
}

Verdict fuglede_counterexample_search(std::uint64_t seed, int trials, int dim,
                                      const TolerancePolicy& tol) {
  Rng rng(seed);
  CheckContext ctx;
  ctx.seed = seed;
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  ctx.probes_used = trials;
  for (int t = 0; t < trials; ++t) {
    // N normal with known eigenbasis; A compressed blockwise so the
    // hypothesis NA = AN holds exactly, then the adjoint side is probed
    Eigen::MatrixXcd g(dim, dim), b(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        g(i, j) = rng.complex_gaussian();
        b(i, j) = rng.complex_gaussian();
      }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::VectorXcd lambda(dim);
    for (Eigen::Index i = 0; i < dim; ++i) lambda(i) = rng.complex_gaussian();
    const Eigen::MatrixXcd n = q * lambda.asDiagonal() * q.adjoint();
    // force NA = AN exactly in the eigenbasis
    Eigen::MatrixXcd d = q.adjoint() * b * q;
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        if (i != j) d(i, j) = 0.0;
    const Eigen::MatrixXcd a = q * d * q.adjoint();
    const double fwd = (n * a - a * n).norm();
    const double adj = (n.adjoint() * a - a * n.adjoint()).norm();
    const double bound = tol.bound(std::max(1.0, max_column_norm(n)) *
                                   std::max(1.0, max_column_norm(a)));
    if (fwd <= bound && adj > bound) {
      CheckContext cx = ctx;
      cx.note("trial", static_cast<double>(t));
      return Verdict::make_fails(adj, std::string("trial " + std::to_string(t)), std::move(cx));
    }
  }
  return Verdict::make_inconclusive("no counterexample found (expected: finite dimension)",
                                    std::move(ctx));
}

}  // namespace opcheck
