#include <doctest.h>

#include "opcheck/corpus.hpp"
#include "opcheck/predicates.hpp"
#include "opcheck/spectral.hpp"

using namespace opcheck;

namespace {

Eigen::MatrixXcd diag3(double a, double b, double c) {
  return Eigen::Vector3cd(a, b, c).asDiagonal();
}

Eigen::MatrixXcd jordan2() {
  Eigen::MatrixXcd j(2, 2);
  j << 0.0, 1.0, 0.0, 0.0;
  return j;
}

}  // namespace

TEST_CASE("herm_eig basics") {
  const HermEigen e1 = herm_eig(diag3(3, 1, 2));
  CHECK(e1.values(0) == doctest::Approx(1.0));
  CHECK(e1.values(1) == doctest::Approx(2.0));
  CHECK(e1.values(2) == doctest::Approx(3.0));

  const HermEigen e2 = herm_eig(Eigen::MatrixXcd::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(e2.values(i) == doctest::Approx(1.0));
  CHECK((e2.vectors.adjoint() * e2.vectors - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-10);

  Eigen::MatrixXcd h(2, 2);
  h << 2.0, 1.0, 1.0, 2.0;
  const HermEigen e3 = herm_eig(h);
  CHECK(e3.values(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e3.values(1) == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(herm_eig(jordan2()), std::invalid_argument);
}

TEST_CASE("herm_eig invariants on random Hermitians") {
  Rng rng(314);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(7));
    const Eigen::MatrixXcd h = random_hermitian(rng, n);
    const HermEigen e = herm_eig(h);
    const double scale = std::max(1.0, h.norm());
    CHECK((e.vectors * e.values.asDiagonal() * e.vectors.adjoint() - h).norm() <= 1e-10 * scale);
    CHECK((e.vectors.adjoint() * e.vectors - Eigen::MatrixXcd::Identity(n, n)).norm() <= 1e-10);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) CHECK(e.values(i) >= e.values(i - 1));
  }
}

TEST_CASE("modulus examples") {
  Eigen::MatrixXcd c(2, 2);
  c << 0.0, 0.0, 2.0, 0.0;
  CHECK((modulus_of(c) - Eigen::Vector2cd(2.0, 0.0).asDiagonal().toDenseMatrix()).norm() < 1e-12);

  Rng rng(21);
  const Eigen::MatrixXcd u = random_unitary(rng, 4);
  CHECK((modulus_of(u) - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-10);

  // ||  |C| x || = || C x || on probes, via <C*Cx,x> = <|C|^2 x,x>
  const Eigen::MatrixXcd m = random_complex_matrix(rng, 6);
  const Eigen::MatrixXcd mod = modulus_of(m);
  for (int p = 0; p < 50; ++p) {
    Eigen::VectorXcd x(6);
    for (int i = 0; i < 6; ++i) x(i) = rng.complex_gaussian();
    CHECK((mod * x).norm() == doctest::Approx((m * x).norm()).epsilon(1e-9));
  }
  // squared-modulus residual contract
  CHECK((mod * mod - m.adjoint() * m).norm() <=
        1e-8 * std::max(1.0, (m.adjoint() * m).norm()));
}

TEST_CASE("polar decomposition examples") {
  const PolarDecomp z = polar_decompose(Eigen::MatrixXcd::Zero(3, 3));
  CHECK(z.partial_isometry.norm() == 0.0);
  CHECK(z.modulus.norm() == 0.0);

  const PolarDecomp d = polar_decompose(Eigen::Vector2cd(2.0, 3.0).asDiagonal().toDenseMatrix());
  CHECK((d.partial_isometry - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);
  CHECK((d.modulus - Eigen::Vector2cd(2.0, 3.0).asDiagonal().toDenseMatrix()).norm() < 1e-12);

  // 4x4 shift compression: U is the compression itself, |C| = diag(1,1,1,0)
  Eigen::MatrixXcd s4 = Eigen::MatrixXcd::Zero(4, 4);
  for (int j = 0; j < 3; ++j) s4(j + 1, j) = 1.0;
  const PolarDecomp p = polar_decompose(s4);
  CHECK((p.partial_isometry - s4).norm() < 1e-12);
  CHECK((p.modulus - Eigen::Vector4cd(1.0, 1.0, 1.0, 0.0).asDiagonal().toDenseMatrix()).norm() <
        1e-12);
}

TEST_CASE("polar invariants on random matrices") {
  Rng rng(58);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(5));
    const Eigen::MatrixXcd c = random_complex_matrix(rng, n);
    const PolarDecomp p = polar_decompose(c);
    CHECK((p.partial_isometry * p.modulus - c).norm() <= 1e-9 * std::max(1.0, c.norm()));
    // U*U is the orthogonal projector onto ran |C|
    const Eigen::MatrixXcd proj = p.partial_isometry.adjoint() * p.partial_isometry;
    CHECK((proj * proj - proj).norm() < 1e-9);
    CHECK((proj * p.modulus - p.modulus).norm() < 1e-9 * std::max(1.0, c.norm()));
  }
}

TEST_CASE("spectral projectors") {
  const auto single = spectral_projectors(Eigen::MatrixXcd::Identity(3, 3));
  REQUIRE(single.size() == 1);
  CHECK((single[0].projector - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);

  const auto two = spectral_projectors(diag3(0, 0, 5));
  REQUIRE(two.size() == 2);
  CHECK(two[0].multiplicity == 2);
  CHECK(two[1].multiplicity == 1);

  Rng rng(7);
  const Eigen::MatrixXcd h = random_hermitian(rng, 8);
  const auto ps = spectral_projectors(h);
  REQUIRE(ps.size() == 8);  // distinct eigenvalues almost surely
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(8, 8);
  for (const auto& p : ps) {
    CHECK((p.projector * p.projector - p.projector).norm() < 1e-9);
    CHECK((p.projector - p.projector.adjoint()).norm() < 1e-9);
    sum += p.projector;
  }
  CHECK((sum - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-9);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      CHECK((ps[i].projector * ps[j].projector).norm() < 1e-9);
}

TEST_CASE("spectral commutation check") {
  const TolerancePolicy tol;
  // block-diagonal normal matrix
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(4, 4);
  n.topLeftCorner(2, 2) << Complex(1, 1), Complex(0, 0), Complex(0, 0), Complex(1, 1);
  n.bottomRightCorner(2, 2) << Complex(3, 0), Complex(0, 0), Complex(0, 0), Complex(-2, 0);
  const Verdict v1 = spectral_commutation_check(FiniteMatrixOp(n), tol);
  CHECK(v1.holds());
  CHECK(v1.status == quasinormal_test(FiniteMatrixOp(n), tol).status);  // oracle agreement

  const Verdict v2 = spectral_commutation_check(FiniteMatrixOp(jordan2()), tol);
  CHECK(v2.fails());
  CHECK(v2.discrepancy == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(spectral_commutation_check(FiniteMatrixOp(Eigen::MatrixXcd::Zero(3, 3)), tol).holds());
}

TEST_CASE("resolvent commutation check") {
  const TolerancePolicy tol;
  Rng rng(1000);
  CHECK(resolvent_commutation_check(FiniteMatrixOp(random_unitary(rng, 4)), tol).holds());

  const Verdict j = resolvent_commutation_check(FiniteMatrixOp(jordan2()), tol);
  CHECK(j.fails());
  CHECK(j.discrepancy == doctest::Approx(0.5).epsilon(1e-12));  // hand computation

  const Eigen::MatrixXcd n = random_normal_matrix(rng, 6).matrix;
  const Verdict vn = resolvent_commutation_check(FiniteMatrixOp(n), tol);
  CHECK(vn.holds());
  CHECK(vn.discrepancy < 1e-9);
  CHECK(vn.status == spectral_commutation_check(FiniteMatrixOp(n), tol).status);
}

TEST_CASE("function calculus commutation") {
  const TolerancePolicy tol;
  Rng rng(17);
  const Eigen::MatrixXcd r = random_psd(rng, 4);
  const Eigen::MatrixXcd a = 2.0 * r * r - 0.5 * r + Eigen::MatrixXcd::Identity(4, 4);
  CHECK(function_calculus_commutation(a, r, tol).holds());

  const Verdict v = function_calculus_commutation(jordan2(), diag3(1, 2, 0).topLeftCorner(2, 2),
                                                  tol);
  CHECK(v.fails());  // the indicator of {1} does not commute

  const Eigen::MatrixXcd any = random_complex_matrix(rng, 3);
  CHECK(function_calculus_commutation(any, Eigen::MatrixXcd::Identity(3, 3), tol).holds());

  CHECK_THROWS_AS(function_calculus_commutation(any, -Eigen::MatrixXcd::Identity(3, 3), tol),
                  std::invalid_argument);
}

TEST_CASE("indicator, resolvent and whole-family commutation are equivalent") {
  // three finite-dimensional readings of the same commutation property must
  // agree on 200 seeded instances, commuting pairs included
  const TolerancePolicy tol;
  Rng rng(8888);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(7));
    const Eigen::MatrixXcd r = random_psd(rng, n);
    Eigen::MatrixXcd a;
    if (t % 3 == 0) {
      // commuting by construction: a polynomial in r
      a = 0.3 * r * r + 1.5 * r - 2.0 * Eigen::MatrixXcd::Identity(n, n);
    } else {
      a = random_complex_matrix(rng, n);
    }

    const double anorm = std::max(1.0, max_column_norm(a));
    const double bound = tol.bound(anorm);

    // (i) indicator commutation over all clusters
    bool ind_ok = true;
    for (const auto& p : spectral_projectors(r))
      ind_ok = ind_ok && (p.projector * a - a * p.projector).norm() <= bound;

    // (ii) resolvent commutation
    const HermEigen eig = herm_eig(r);
    const Eigen::VectorXd inv = (eig.values.array().cwiseMax(0.0) + 1.0).inverse().matrix();
    const Eigen::MatrixXcd res = eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
    const bool res_ok = (res * a - a * res).norm() <= bound;

    // (iii) whole test family
    const bool fam_ok = function_calculus_commutation(a, r, tol).holds();

    CHECK(ind_ok == res_ok);
    CHECK(res_ok == fam_ok);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("projector commutation implies polynomial commutation for known-basis normals") {
  Rng rng(246);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(5));
    const NormalWithBasis nb = random_normal_matrix(rng, n);
    const auto projs = complex_spectral_projectors(nb.eigenbasis, nb.eigenvalues);

    // compress a random matrix blockwise so it commutes with every projector
    const Eigen::MatrixXcd b = random_complex_matrix(rng, n);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& p : projs) a += p.projector * b * p.projector;
    for (const auto& p : projs)
      CHECK((p.projector * a - a * p.projector).norm() < 1e-10 * std::max(1.0, a.norm()));

    // random polynomial p(N, N*) of degree <= 3
    const Eigen::MatrixXcd& m = nb.matrix;
    Eigen::MatrixXcd poly = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(n, n);
    for (int d = 0; d <= 3; ++d) {
      poly += rng.complex_gaussian() * pw;
      poly += rng.complex_gaussian() * pw.adjoint();
      pw = pw * m;
    }
    const double scale = std::max(1.0, a.norm() * poly.norm());
    CHECK((a * poly - poly * a).norm() <= 1e-9 * scale);
  }
}

TEST_CASE("polar and modulus stay consistent") {
  Rng rng(4444);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(6));
    const Eigen::MatrixXcd c = random_complex_matrix(rng, n);
    const PolarDecomp p = polar_decompose(c);
    CHECK((p.modulus - modulus_of(c)).norm() < 1e-10 * std::max(1.0, c.norm()));
    CHECK((p.partial_isometry * modulus_of(c) - c).norm() <= 1e-9 * std::max(1.0, c.norm()));
  }
}

TEST_CASE("the adjoint-commutation random search comes back empty") {
  const Verdict v = fuglede_counterexample_search(99, 200, 4, {});
  CHECK(v.inconclusive());
}
