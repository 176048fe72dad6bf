#include "opcheck/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace opcheck {

namespace anchors {
std::string power_identity(int n) {
  return "C*^" + std::to_string(n) + "C^" + std::to_string(n) + " = (C*C)^" +
         std::to_string(n);
}
}  // namespace anchors

namespace {

CheckContext probe_context(const ProbeConfig& cfg, const TolerancePolicy& tol) {
  CheckContext ctx;
  ctx.seed = cfg.seed;
  ctx.probes_used = cfg.num_probes;
  ctx.window_size = cfg.window.size();
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  return ctx;
}

CheckContext matrix_context(const TolerancePolicy& tol) {
  CheckContext ctx;
  ctx.abs_tol = tol.abs_tol;
  ctx.rel_tol = tol.rel_tol;
  return ctx;
}

using VecFn = std::function<SparseVec(const SparseVec&)>;

Verdict identity_verdict(const VecFn& lhs, const VecFn& rhs, const ProbeConfig& cfg,
                         double bound, CheckContext ctx) {
  double worst = -1.0;
  SparseVec worst_f;
  auto eval = [&](const SparseVec& f) {
    const double d = norm(lhs(f) - rhs(f));
    if (d > worst) {
      worst = d;
      worst_f = f;
    }
  };
  for (const Label& l : cfg.window) eval(SparseVec::basis(l));
  for (const SparseVec& p : make_probes(cfg)) eval(p);
  ctx.note("worst_residual", worst);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), std::max(0.0, worst));
  return Verdict::make_fails(worst, std::move(worst_f), std::move(ctx));
}

Verdict matrix_identity_verdict(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs,
                                const FiniteMatrixOp& c, double bound, CheckContext ctx) {
  const Eigen::MatrixXcd d = lhs - rhs;
  double worst = -1.0;
  Eigen::Index worst_j = 0;
  for (Eigen::Index j = 0; j < d.cols(); ++j) {
    const double r = d.col(j).norm();
    if (r > worst) {
      worst = r;
      worst_j = j;
    }
  }
  ctx.note("worst_residual", worst);
  if (worst <= bound) return Verdict::make_holds(std::move(ctx), std::max(0.0, worst));
  return Verdict::make_fails(
      worst, SparseVec::basis(c.basis()[static_cast<std::size_t>(worst_j)]), std::move(ctx));
}

double pow_scale(double nu, int k) { return std::pow(std::max(1.0, nu), k); }

}  // namespace

Verdict quasinormal_test(const LocalOperator& c, const ProbeConfig& probes,
                         const TolerancePolicy& tol) {
  const double nu = window_column_norm(c, probes.window);
  CheckContext ctx = probe_context(probes, tol);
  ctx.note("window_norm", nu);
  auto lhs = [c](const SparseVec& f) { return c.apply(c.adjoint_apply(c.apply(f))); };
  auto rhs = [c](const SparseVec& f) { return c.adjoint_apply(c.apply(c.apply(f))); };
  return identity_verdict(lhs, rhs, probes, tol.bound(pow_scale(nu, 3)), std::move(ctx));
}

Verdict quasinormal_test(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  CheckContext ctx = matrix_context(tol);
  ctx.note("window_norm", nu);
  return matrix_identity_verdict(m * m.adjoint() * m, m.adjoint() * m * m, c,
                                 tol.bound(pow_scale(nu, 3)), std::move(ctx));
}

Verdict power_identity_test(const LocalOperator& c, int n, const ProbeConfig& probes,
                            const TolerancePolicy& tol) {
  if (n < 0) throw std::invalid_argument("power_identity_test: negative power");
  if (n <= 1) {
    CheckContext ctx = probe_context(probes, tol);
    ctx.note("trivial", std::string("identical for n <= 1"));
    return Verdict::make_holds(std::move(ctx));
  }
  const double nu = window_column_norm(c, probes.window);
  CheckContext ctx = probe_context(probes, tol);
  ctx.note("window_norm", nu);
  auto lhs = [c, n](const SparseVec& f) {
    SparseVec g = f;
    for (int i = 0; i < n; ++i) g = c.adjoint_apply(c.apply(g));
    return g;
  };
  auto rhs = [c, n](const SparseVec& f) {
    SparseVec g = f;
    for (int i = 0; i < n; ++i) g = c.apply(g);
    for (int i = 0; i < n; ++i) g = c.adjoint_apply(g);
    return g;
  };
  return identity_verdict(lhs, rhs, probes, tol.bound(pow_scale(nu, 2 * n)), std::move(ctx));
}

Verdict power_identity_test(const FiniteMatrixOp& c, int n, const TolerancePolicy& tol) {
  if (n < 0) throw std::invalid_argument("power_identity_test: negative power");
  if (n <= 1) {
    CheckContext ctx = matrix_context(tol);
    ctx.note("trivial", std::string("identical for n <= 1"));
    return Verdict::make_holds(std::move(ctx));
  }
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  CheckContext ctx = matrix_context(tol);
  ctx.note("window_norm", nu);
  const Eigen::MatrixXcd mn = matrix_power(m, n);
  return matrix_identity_verdict(matrix_power(m.adjoint() * m, n), mn.adjoint() * mn, c,
                                 tol.bound(pow_scale(nu, 2 * n)), std::move(ctx));
}

Verdict normality_test(const LocalOperator& c, const ProbeConfig& probes,
                       const TolerancePolicy& tol) {
  const double nu = window_column_norm(c, probes.window);
  CheckContext ctx = probe_context(probes, tol);
  ctx.note("window_norm", nu);
  auto lhs = [c](const SparseVec& f) { return c.adjoint_apply(c.apply(f)); };
  auto rhs = [c](const SparseVec& f) { return c.apply(c.adjoint_apply(f)); };
  return identity_verdict(lhs, rhs, probes, tol.bound(pow_scale(nu, 2)), std::move(ctx));
}

Verdict normality_test(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  CheckContext ctx = matrix_context(tol);
  ctx.note("window_norm", nu);
  return matrix_identity_verdict(m.adjoint() * m, m * m.adjoint(), c,
                                 tol.bound(pow_scale(nu, 2)), std::move(ctx));
}

Verdict moment_solvability_test(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2,
                                const Eigen::MatrixXcd& m3, const TolerancePolicy& tol) {
  for (const auto* m : {&m1, &m2, &m3}) {
    const double asym = (*m - m->adjoint()).norm();
    if (asym > tol.bound(std::max(1.0, m->norm())))
      throw std::invalid_argument("moment_solvability_test: non-Hermitian moment, asymmetry " +
                                  format_17g(asym));
  }
  CheckContext ctx = matrix_context(tol);
  const double nu = std::max(1.0, max_column_norm(m1));
  const HermEigen eig = herm_eig(m1);
  const double lambda_min = eig.values.size() ? eig.values.minCoeff() : 0.0;
  const double r2 = (m2 - m1 * m1).norm();
  const double r3 = (m3 - m1 * m1 * m1).norm();
  ctx.note("m1_min_eig", lambda_min);
  ctx.note("r2", r2);
  ctx.note("r3", r3);
  if (lambda_min < -tol.bound(nu))
    return Verdict::make_fails(-lambda_min, std::string("m1 not positive"), std::move(ctx));
  if (r2 > tol.bound(nu * nu))
    return Verdict::make_fails(r2, std::string("m2 != m1^2"), std::move(ctx));
  if (r3 > tol.bound(nu * nu * nu))
    return Verdict::make_fails(r3, std::string("m3 != m1^3"), std::move(ctx));
  return Verdict::make_holds(std::move(ctx), std::max({0.0, r2, r3}));
}

namespace {

// normalized violation score; positive means f falsifies paranormality
double paranormal_score(const LocalOperator& c, const SparseVec& f) {
  const double nf = norm(f);
  if (nf == 0.0) return 0.0;
  const SparseVec cf = c.apply(f);
  const SparseVec ccf = c.apply(cf);
  return (norm_sq(cf) - norm(ccf) * nf) / (nf * nf);
}

}  // namespace

Verdict paranormal_falsify(const LocalOperator& c, const ProbeConfig& probes,
                           const TolerancePolicy& tol) {
  const double nu = window_column_norm(c, probes.window);
  const double bound = tol.bound(pow_scale(nu, 2));
  CheckContext ctx = probe_context(probes, tol);
  ctx.note("window_norm", nu);

  double best1 = -std::numeric_limits<double>::infinity();
  double best2 = -std::numeric_limits<double>::infinity();
  SparseVec f1, f2;
  auto consider = [&](const SparseVec& f) -> std::optional<double> {
    const double s = paranormal_score(c, f);
    if (s > bound) return s;
    if (s > best1) {
      best2 = best1;
      f2 = f1;
      best1 = s;
      f1 = f;
    } else if (s > best2) {
      best2 = s;
      f2 = f;
    }
    return std::nullopt;
  };

  for (const Label& l : probes.window)
    if (auto s = consider(SparseVec::basis(l))) return Verdict::make_fails(*s, SparseVec::basis(l), std::move(ctx));
  for (const SparseVec& p : make_probes(probes))
    if (auto s = consider(p)) return Verdict::make_fails(*s, p, std::move(ctx));

  // coarse projective refinement over span{f1, f2}
  if (!f1.empty() && !f2.empty()) {
    constexpr int kAngles = 360;
    constexpr int kModuli = 20;
    for (int a = 0; a < kAngles; ++a) {
      const double theta = 2.0 * 3.14159265358979323846 * a / kAngles;
      for (int t = 0; t < kModuli; ++t) {
        const double rho = 1e-2 * std::pow(1e4, static_cast<double>(t) / (kModuli - 1));
        const SparseVec f = f1 + (rho * Complex(std::cos(theta), std::sin(theta))) * f2;
        const double s = paranormal_score(c, f);
        if (s > bound) {
          ctx.note("refinement", std::string("span-grid hit"));
          return Verdict::make_fails(s, f, std::move(ctx));
        }
      }
    }
  }
  ctx.note("best_score", best1);
  return Verdict::make_inconclusive("no counterexample within probe budget", std::move(ctx));
}

namespace {

double least_eig(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((h + h.adjoint()) * 0.5).eval());
  return es.eigenvalues().minCoeff();
}

Eigen::VectorXcd least_eigvec(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((h + h.adjoint()) * 0.5).eval());
  return es.eigenvectors().col(0);
}

}  // namespace

Verdict paranormal_falsify(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  const double bound = tol.bound(pow_scale(nu, 4));
  CheckContext ctx = matrix_context(tol);
  ctx.note("window_norm", nu);

  const Eigen::MatrixXcd m2 = m * m;
  const Eigen::MatrixXcd a = m2.adjoint() * m2;  // C*^2 C^2
  const Eigen::MatrixXcd b = m.adjoint() * m;    // C*C
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());

  auto g = [&](double t) { return least_eig(a - 2.0 * t * b + t * t * id); };

  // log grid t = 2^k, then golden-section refinement around the best points
  double gmin = std::numeric_limits<double>::infinity();
  double tmin = 1.0;
  std::vector<std::pair<double, double>> grid;  // (g, log2 t)
  for (int k = -20; k <= 20; ++k) {
    const double t = std::pow(2.0, k);
    const double v = g(t);
    grid.emplace_back(v, static_cast<double>(k));
    if (v < gmin) {
      gmin = v;
      tmin = t;
    }
  }
  std::sort(grid.begin(), grid.end());
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const std::size_t restarts = std::min<std::size_t>(3, grid.size());
  for (std::size_t s = 0; s < restarts; ++s) {
    double lo = grid[s].second - 1.0, hi = grid[s].second + 1.0;
    double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
    double g1 = g(std::pow(2.0, x1)), g2 = g(std::pow(2.0, x2));
    for (int it = 0; it < 60; ++it) {
      if (g1 <= g2) {
        hi = x2;
        x2 = x1;
        g2 = g1;
        x1 = hi - golden * (hi - lo);
        g1 = g(std::pow(2.0, x1));
      } else {
        lo = x1;
        x1 = x2;
        g1 = g2;
        x2 = lo + golden * (hi - lo);
        g2 = g(std::pow(2.0, x2));
      }
    }
    const double x = (g1 <= g2) ? x1 : x2;
    const double v = std::min(g1, g2);
    if (v < gmin) {
      gmin = v;
      tmin = std::pow(2.0, x);
    }
  }
  ctx.note("least_value", gmin);
  ctx.note("at_t", tmin);
  if (gmin >= -bound) return Verdict::make_holds(std::move(ctx), std::max(0.0, -gmin));

  // extract an explicit witness: a negative pencil value at t forces
  // ||Cv||^2 > ||C^2 v|| ||v|| for the corresponding eigenvector
  const Eigen::VectorXcd v = least_eigvec(a - 2.0 * tmin * b + tmin * tmin * id);
  const double score = (m * v).squaredNorm() - (m2 * v).norm() * v.norm();
  if (score > 0.0) return Verdict::make_fails(score, c.from_coords(v), std::move(ctx));
  // rounding ate the witness margin; report the pencil value itself
  return Verdict::make_fails(-gmin, std::string("pencil least eigenvalue at t=") + format_17g(tmin),
                             std::move(ctx));
}

std::optional<Eigen::VectorXcd> paranormal_probe_search(const FiniteMatrixOp& c, int num_probes,
                                                        std::uint64_t seed,
                                                        const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const Eigen::MatrixXcd m2 = m * m;
  const double bound = tol.bound(pow_scale(max_column_norm(m), 2));
  Rng rng(seed);
  const Eigen::Index n = m.rows();
  Eigen::VectorXcd v(n);
  for (int p = 0; p < num_probes; ++p) {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
    const double nf = v.norm();
    const double score = ((m * v).squaredNorm() - (m2 * v).norm() * nf) / (nf * nf);
    if (score > bound) return v;
  }
  return std::nullopt;
}

namespace {

// exact quadratic form <(C*C - CC*)f, f> / ||f||^2
double hyponormal_score(const LocalOperator& c, const SparseVec& f) {
  const double n2 = norm_sq(f);
  if (n2 == 0.0) return 0.0;
  return (norm_sq(c.apply(f)) - norm_sq(c.adjoint_apply(f))) / n2;
}

}  // namespace

Verdict hyponormal_falsify(const LocalOperator& c, const ProbeConfig& probes,
                           const TolerancePolicy& tol) {
  const double nu = window_column_norm(c, probes.window);
  const double bound = tol.bound(pow_scale(nu, 2));
  CheckContext ctx = probe_context(probes, tol);
  ctx.note("window_norm", nu);

  auto check = [&](const SparseVec& f) -> std::optional<Verdict> {
    const double s = hyponormal_score(c, f);
    if (s < -bound) return Verdict::make_fails(-s, f, ctx);
    return std::nullopt;
  };
  for (const Label& l : probes.window)
    if (auto v = check(SparseVec::basis(l))) return std::move(*v);
  for (const SparseVec& p : make_probes(probes))
    if (auto v = check(p)) return std::move(*v);

  // least eigenvector of the exactly evaluated form compressed to the window
  constexpr std::size_t kMaxDim = 32;
  std::vector<Label> lab(probes.window.begin(), probes.window.end());
  if (lab.size() > kMaxDim) {
    std::stable_sort(lab.begin(), lab.end(), [&](const Label& x, const Label& y) {
      return hyponormal_score(c, SparseVec::basis(x)) < hyponormal_score(c, SparseVec::basis(y));
    });
    lab.resize(kMaxDim);
    std::sort(lab.begin(), lab.end());
  }
  if (!lab.empty()) {
    const Eigen::Index n = static_cast<Eigen::Index>(lab.size());
    std::vector<SparseVec> fw(lab.size()), ad(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) {
      fw[i] = c.apply(SparseVec::basis(lab[i]));
      ad[i] = c.adjoint_apply(SparseVec::basis(lab[i]));
    }
    Eigen::MatrixXcd form(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        form(i, j) = inner(fw[static_cast<std::size_t>(j)], fw[static_cast<std::size_t>(i)]) -
                     inner(ad[static_cast<std::size_t>(j)], ad[static_cast<std::size_t>(i)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((form + form.adjoint()) * 0.5).eval());
    const double lmin = es.eigenvalues().minCoeff();
    ctx.note("form_least_eig", lmin);
    if (lmin < -bound) {
      SparseVec w;
      const Eigen::VectorXcd v = es.eigenvectors().col(0);
      for (Eigen::Index i = 0; i < n; ++i) w.set(lab[static_cast<std::size_t>(i)], v(i));
      const double s = hyponormal_score(c, w);
      if (s < -bound) return Verdict::make_fails(-s, std::move(w), std::move(ctx));
    }
  }
  return Verdict::make_inconclusive("no counterexample within probe budget", std::move(ctx));
}

Verdict hyponormal_falsify(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  const double bound = tol.bound(pow_scale(nu, 2));
  CheckContext ctx = matrix_context(tol);
  ctx.note("window_norm", nu);
  const Eigen::MatrixXcd form = m.adjoint() * m - m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((form + form.adjoint()) * 0.5).eval());
  const double lmin = es.eigenvalues().minCoeff();
  ctx.note("form_least_eig", lmin);
  if (lmin >= -bound) return Verdict::make_holds(std::move(ctx), std::max(0.0, lmin));
  return Verdict::make_fails(-lmin, c.from_coords(es.eigenvectors().col(0)), std::move(ctx));
}

Verdict paran2_check(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  const Verdict p2 = power_identity_test(c, 2, tol);
  const Verdict nm = normality_test(c, tol);
  CheckContext ctx = matrix_context(tol);
  ctx.note("power_identity_2", std::string(to_string(p2.status)));
  ctx.note("normality", std::string(to_string(nm.status)));
  if (p2.holds() == nm.holds())
    return Verdict::make_holds(std::move(ctx), std::max(p2.discrepancy, nm.discrepancy));
  return Verdict::make_fails(std::max(p2.discrepancy, nm.discrepancy),
                             std::string("biconditional broken"), std::move(ctx));
}

Verdict quasinormal_power_closure_check(const FiniteMatrixOp& c, int n, int k,
                                          const TolerancePolicy& tol) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("quasinormal_power_closure_check: negative exponent");
  const Verdict pre = quasinormal_test(c, tol);
  CheckContext ctx = matrix_context(tol);
  if (!pre.holds())
    return Verdict::make_inconclusive("precondition violated: operator is not quasinormal",
                                      std::move(ctx));
  const Eigen::MatrixXcd& m = c.matrix();
  const double nu = max_column_norm(m);
  const Eigen::MatrixXcd cn = matrix_power(m, n);
  const Eigen::MatrixXcd cnk = matrix_power(cn, k);
  const Eigen::MatrixXcd lhs = cnk.adjoint() * cnk;
  const Eigen::MatrixXcd rhs = matrix_power(m.adjoint() * m, n * k);
  const double res = (lhs - rhs).norm();
  ctx.note("power_residual", res);
  const Verdict sub = quasinormal_test(FiniteMatrixOp(cn, c.basis()), tol);
  ctx.note("power_quasinormal", std::string(to_string(sub.status)));
  const double bound = tol.bound(pow_scale(nu, 2 * n * k));
  if (res <= bound && sub.holds()) return Verdict::make_holds(std::move(ctx), res);
  return Verdict::make_fails(std::max(res, sub.discrepancy), std::string("power closure"),
                             std::move(ctx));
}

Report quasinormal_agreement(const FiniteMatrixOp& c, const TolerancePolicy& tol) {
  Report r;
  r.descriptor = "quasinormal_agreement";
  r.tol = tol;
  const Verdict v1 = quasinormal_test(c, tol);
  const Verdict v3 = resolvent_commutation_check(c, tol);
  const Verdict v4 = spectral_commutation_check(c, tol);
  r.add("quasinormal", anchors::quasinormal, v1);
  r.add("resolvent_commutation", anchors::resolvent, v3);
  r.add("spectral_commutation", anchors::spectral, v4);
  Verdict agree;
  const bool ok = v1.status == v3.status && v3.status == v4.status;
  if (ok) {
    agree = Verdict::make_holds();
  } else {
    agree = Verdict::make_fails(1.0, std::string("characterizations disagree"), {});
    agree.reason = "artifact defect: equivalent characterizations disagree";
  }
  agree.context.note("quasinormal", std::string(to_string(v1.status)));
  agree.context.note("resolvent", std::string(to_string(v3.status)));
  agree.context.note("spectral", std::string(to_string(v4.status)));
  r.add("agreement", anchors::agreement, agree);
  r.normalize();
  return r;
}

namespace {

Report embry_common(std::function<Verdict()> quasinormal,
                    std::function<Verdict(int)> power, int n_max,
                    const TolerancePolicy& tol) {
  if (n_max < 3) throw std::invalid_argument("embry_suite: n_max must be >= 3");
  Report r;
  r.descriptor = "embry_suite";
  r.tol = tol;
  const Verdict q = quasinormal();
  r.add("quasinormal", anchors::quasinormal, q);
  std::vector<bool> ok(static_cast<std::size_t>(n_max) + 1, false);
  std::vector<int> holding;
  for (int n = 2; n <= n_max; ++n) {
    const Verdict v = power(n);
    ok[static_cast<std::size_t>(n)] = v.holds();
    if (v.holds()) holding.push_back(n);
    r.add("power_identity(n=" + std::to_string(n) + ")", anchors::power_identity(n), v);
  }
  const bool bicond = q.holds() == (ok[2] && ok[3]);
  Verdict vb = bicond ? Verdict::make_holds()
                      : Verdict::make_fails(1.0, std::string("biconditional broken"), {});
  r.add("embry_biconditional", anchors::embry_biconditional, vb);

  bool family_ok = true;
  if (q.holds())
    for (int n = 2; n <= n_max; ++n) family_ok = family_ok && ok[static_cast<std::size_t>(n)];
  Verdict vf = family_ok ? Verdict::make_holds()
                         : Verdict::make_fails(1.0, std::string("power family broken"), {});
  r.add("power_family_consistency", anchors::power_family, vf);

  if (!q.holds() && !holding.empty()) {
    std::string ns;
    for (int n : holding) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    r.note("separation",
           "prz-type separation: power identity holds at n = {" + ns +
               "} while the operator is not quasinormal");
  }
  r.normalize();
  return r;
}

}  // namespace

Report embry_suite(const LocalOperator& c, int n_max, const ProbeConfig& probes,
                   const TolerancePolicy& tol) {
  Report r = embry_common([&] { return quasinormal_test(c, probes, tol); },
                          [&](int n) { return power_identity_test(c, n, probes, tol); },
                          n_max, tol);
  r.seed = probes.seed;
  return r;
}

Report embry_suite(const FiniteMatrixOp& c, int n_max, const TolerancePolicy& tol) {
  return embry_common([&] { return quasinormal_test(c, tol); },
                      [&](int n) { return power_identity_test(c, n, tol); }, n_max, tol);
}

}  // namespace opcheck
