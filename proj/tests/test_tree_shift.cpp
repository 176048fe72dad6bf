#include <doctest.h>

#include <cmath>

#include "opcheck/corpus.hpp"
#include "opcheck/predicates.hpp"
#include "opcheck/tree_shift.hpp"

using namespace opcheck;

namespace {

const double kIs2 = 0.70710678118654752440;

TreeShiftOp prz2_like(double b1, double b2, std::int64_t kappa = 0) {
  return {DirectedTree::t2_kappa(kappa, 8),
          WeightSystem::t2_family(Complex(kIs2, 0), Complex(kIs2, 0), Complex(b1, 0),
                                  Complex(b2, 0))};
}

SparseVec ev(std::int32_t branch, std::int32_t index) {
  return SparseVec::basis(Label::vertex(VertexKey{branch, index}));
}

}  // namespace

TEST_CASE("t2 family structure") {
  const DirectedTree t0 = DirectedTree::t2_kappa(0, 3);
  CHECK(t0.root() == VertexKey{0, 0});
  const auto w = t0.vertex_window();
  CHECK(w.size() == 7);  // {0} + two rays of depth 3
  CHECK(t0.children(VertexKey{0, 0}) ==
        std::vector<VertexKey>{VertexKey{1, 1}, VertexKey{2, 1}});
  CHECK(t0.children(VertexKey{1, 3}) == std::vector<VertexKey>{VertexKey{1, 4}});

  const DirectedTree t2 = DirectedTree::t2_kappa(2, 1);
  CHECK(t2.root() == VertexKey{0, -2});
  CHECK(t2.parent(VertexKey{0, -1}) == VertexKey{0, -2});
  CHECK(t2.parent(VertexKey{0, 0}) == VertexKey{0, -1});
  CHECK_FALSE(t2.parent(VertexKey{0, -2}).has_value());
  CHECK(t2.parent(VertexKey{1, 1}) == VertexKey{0, 0});

  CHECK_THROWS_AS(DirectedTree::t2_kappa(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(DirectedTree::t2_kappa(std::nullopt, 3), std::invalid_argument);
  const DirectedTree tinf = DirectedTree::t2_kappa(std::nullopt, 3, 5);
  CHECK_FALSE(tinf.root().has_value());
  CHECK(tinf.parent(VertexKey{0, -5}) == VertexKey{0, -6});  // past the cap, still closed form
}

TEST_CASE("finite tree validation") {
  using VK = VertexKey;
  CHECK_THROWS_AS(DirectedTree::finite({VK{0, 0}, VK{0, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      DirectedTree::finite({VK{0, 0}, VK{0, 1}, VK{0, 2}},
                           {{VK{0, 0}, VK{0, 2}}, {VK{0, 1}, VK{0, 2}}}),
      std::invalid_argument);  // two parents
  CHECK_THROWS_AS(
      DirectedTree::finite({VK{0, 0}, VK{0, 1}}, {{VK{0, 0}, VK{0, 1}}, {VK{0, 1}, VK{0, 0}}}),
      std::invalid_argument);  // cycle / no root
  const DirectedTree ok =
      DirectedTree::finite({VK{0, 0}, VK{0, 1}, VK{0, 2}},
                           {{VK{0, 0}, VK{0, 1}}, {VK{0, 0}, VK{0, 2}}});
  CHECK(ok.root() == VK{0, 0});
  CHECK(ok.children(VK{0, 0}).size() == 2);
}

TEST_CASE("tree shift actions") {
  const TreeShiftOp s = prz2_like(kIs2, std::sqrt(1.5));
  CHECK(approx_eq(s.apply(ev(0, 0)),
                  Complex(kIs2, 0) * ev(1, 1) + Complex(kIs2, 0) * ev(2, 1), {}));
  CHECK(approx_eq(s.adjoint_apply(ev(1, 1)), Complex(kIs2, 0) * ev(0, 0), {}));

  const TreeShiftOp s2 = prz2_like(kIs2, std::sqrt(1.5), 2);
  CHECK(s2.adjoint_apply(ev(0, -2)).empty());  // the root is killed

  // missing weight on an explicit finite tree
  using VK = VertexKey;
  const DirectedTree t =
      DirectedTree::finite({VK{0, 0}, VK{0, 1}}, {{VK{0, 0}, VK{0, 1}}});
  CHECK_THROWS_WITH_AS(TreeShiftOp(t, WeightSystem::from_map({})),
                       "WeightSystem: missing weight at vertex 1", std::invalid_argument);
}

TEST_CASE("branch weight sums") {
  const TreeShiftOp s = prz2_like(kIs2, std::sqrt(1.5));
  CHECK(s.branch_weight_sum(VertexKey{0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.branch_weight_sum(VertexKey{1, 1}) == doctest::Approx(0.5).epsilon(1e-15));

  using VK = VertexKey;
  const DirectedTree t = DirectedTree::finite({VK{0, 0}, VK{0, 1}}, {{VK{0, 0}, VK{0, 1}}});
  const TreeShiftOp leafy(t, WeightSystem::from_map({{VK{0, 1}, Complex(2.0, 0)}}));
  CHECK(leafy.branch_weight_sum(VK{0, 1}) == 0.0);  // leaf
}

TEST_CASE("norm of shift powers on basis vectors") {
  const TreeShiftOp s = prz2_like(kIs2, std::sqrt(1.5));
  CHECK(s.norm_power_on_basis(VertexKey{0, 0}, 0) == 1.0);
  CHECK(s.norm_power_on_basis(VertexKey{0, 0}, 2) == doctest::Approx(1.0).epsilon(1e-14));

  // oracle: norm of the triple application
  const TreeShiftOp s3 = prz2_like(0.9, 1.2);
  const LocalOperator c = s3.to_local();
  const double direct = norm(c.apply(c.apply(c.apply(ev(0, 0)))));
  CHECK(s3.norm_power_on_basis(VertexKey{0, 0}, 3) ==
        doctest::Approx(direct).epsilon(1e-12));
  const double formula =
      std::sqrt(0.5 * std::pow(0.9, 4) + 0.5 * std::pow(1.2, 4));
  CHECK(direct == doctest::Approx(formula).epsilon(1e-12));
}

TEST_CASE("S*S acts diagonally with d(u) on the diagonal") {
  const TreeShiftOp s = prz2_like(0.8, 1.1, 2);
  for (const auto& u : orbit_window(s.tree(), 3)) {
    const SparseVec got = s.adjoint_apply(s.apply(SparseVec::basis(Label::vertex(u))));
    SparseVec want;
    want.set(Label::vertex(u), Complex(s.branch_weight_sum(u), 0.0));
    CHECK(approx_eq(got, want, {1e-14, 1e-14}));
  }
}

TEST_CASE("norm_power_on_basis matches the operator powers") {
  const TreeShiftOp s = prz2_like(0.7, 1.3, 1);
  const LocalOperator c = s.to_local();
  for (const auto& u : orbit_window(s.tree(), 4)) {
    for (int n = 1; n <= 4; ++n) {
      const double via_apply = norm(power(c, n).apply(SparseVec::basis(Label::vertex(u))));
      const double closed = s.norm_power_on_basis(u, n);
      CHECK(closed == doctest::Approx(via_apply).epsilon(1e-12));
    }
  }
}

TEST_CASE("prop_ws_test examples") {
  const TolerancePolicy tol;
  const TreeShiftOp p2 = prz2_like(kIs2, std::sqrt(1.5));
  const auto w2 = orbit_window(p2.tree(), 4);
  CHECK(prop_ws_test(p2, 2, w2, tol).holds());
  CHECK(prop_ws_test(p2, 1, w2, tol).holds());  // both sides are ||S e_u||

  // the n = 3 separating family fails at the branching vertex for k = 2
  const double g3 = 0.5;  // gamma for n = 3 lands at 1/2
  const TreeShiftOp p3 = prz2_like(std::pow(g3, 0.25), std::pow(2.0 - g3, 0.25));
  const auto w3 = orbit_window(p3.tree(), 4);
  CHECK(prop_ws_test(p3, 3, w3, tol).holds());
  const Verdict k2 = prop_ws_test(p3, 2, w3, tol);
  CHECK(k2.fails());
  CHECK(std::get<VertexKey>(k2.witness) == VertexKey{0, 0});

  CHECK_THROWS_AS(prop_ws_test(p2, 2, std::vector<VertexKey>{}, tol), std::invalid_argument);
}

TEST_CASE("quasinormal tree reduction") {
  const TolerancePolicy tol;
  // unimodular betas make the family quasinormal
  const TreeShiftOp qn = prz2_like(1.0, 1.0);
  CHECK(quasinormal_tree_test(qn, orbit_window(qn.tree(), 4), tol).holds());

  const TreeShiftOp bad = prz2_like(kIs2, std::sqrt(1.5));
  const Verdict v = quasinormal_tree_test(bad, orbit_window(bad.tree(), 4), tol);
  CHECK(v.fails());
  CHECK(std::get<VertexKey>(v.witness) == VertexKey{0, 0});
  CHECK(v.discrepancy == doctest::Approx(0.5).epsilon(1e-12));

  // zero weights impose no constraint
  using VK = VertexKey;
  const DirectedTree t =
      DirectedTree::finite({VK{0, 0}, VK{0, 1}, VK{0, 2}},
                           {{VK{0, 0}, VK{0, 1}}, {VK{0, 1}, VK{0, 2}}});
  const TreeShiftOp zero(
      t, WeightSystem::from_map({{VK{0, 1}, Complex(0, 0)}, {VK{0, 2}, Complex(0, 0)}}));
  CHECK(quasinormal_tree_test(zero, t.vertex_window(), tol).holds());
}

TEST_CASE("tree test agrees with the matrix oracle on random finite trees") {
  const TolerancePolicy tol{1e-12, 1e-8};
  Rng rng(515151);
  for (int t = 0; t < 40; ++t) {
    const RandomTreeShift rt = random_tree_shift(rng, 40, t % 5 == 0 ? 1.0 : 0.15);
    const TreeShiftOp s(rt.tree, WeightSystem::from_map(rt.weights));
    const auto window = rt.tree.vertex_window();
    std::vector<Label> labels;
    for (const auto& v : window) labels.push_back(Label::vertex(v));
    const FiniteMatrixOp m = matrix_of(s.to_local(), labels);

    // the compression reproduces the action on every basis vector
    for (const auto& l : labels)
      CHECK(approx_eq(m.apply(SparseVec::basis(l)), s.apply(SparseVec::basis(l)),
                      {1e-14, 1e-14}));

    for (int n = 2; n <= 4; ++n) {
      const bool tree_says = prop_ws_test(s, n, window, tol).holds();
      const bool matrix_says = power_identity_test(m, n, tol).holds();
      CHECK(tree_says == matrix_says);
    }
    const bool tree_qn = quasinormal_tree_test(s, window, tol).holds();
    const bool matrix_qn = quasinormal_test(m, tol).holds();
    CHECK(tree_qn == matrix_qn);
  }
}

TEST_CASE("norm bound is reported, not enforced") {
  const TreeShiftOp s = prz2_like(kIs2, std::sqrt(1.5));
  const auto w = orbit_window(s.tree(), 3);
  CHECK(s.sup_branch_weight(w) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

namespace {

// the full subtree of T_{2,0} to branch depth d, with the family weights
// copied onto an explicit finite tree
TreeShiftOp truncated_family(const TreeShiftOp& family, std::int64_t depth) {
  std::vector<VertexKey> vertices{VertexKey{0, 0}};
  std::vector<std::pair<VertexKey, VertexKey>> edges;
  std::map<VertexKey, Complex> weights;
  for (std::int32_t i = 1; i <= 2; ++i) {
    for (std::int32_t j = 1; j <= depth; ++j) {
      const VertexKey v{i, j};
      vertices.push_back(v);
      const VertexKey p = j == 1 ? VertexKey{0, 0} : VertexKey{i, j - 1};
      edges.emplace_back(p, v);
      weights[v] = family.weights().at(v);
    }
  }
  return {DirectedTree::finite(vertices, edges), WeightSystem::from_map(std::move(weights))};
}

}  // namespace

TEST_CASE("family operators restricted to full subtrees reproduce the matrix oracle") {
  const TolerancePolicy tol{1e-12, 1e-8};
  const std::vector<TreeShiftOp> families = {
      prz2_like(kIs2, std::sqrt(1.5)),              // power identity at 2, not quasinormal
      prz2_like(std::pow(0.5, 0.25), std::pow(1.5, 0.25)),  // separating family, n = 3
  };
  for (const auto& family : families) {
    for (const std::int64_t depth : {4, 6}) {
      const TreeShiftOp s = truncated_family(family, depth);
      const auto window = s.tree().vertex_window();
      std::vector<Label> labels;
      for (const auto& v : window) labels.push_back(Label::vertex(v));
      const FiniteMatrixOp m = matrix_of(s.to_local(), labels);

      for (int n = 2; n <= 4; ++n)
        CHECK(prop_ws_test(s, n, window, tol).holds() == power_identity_test(m, n, tol).holds());
      CHECK(quasinormal_tree_test(s, window, tol).holds() == quasinormal_test(m, tol).holds());

      // hyponormality decisions coincide: the exact compressed form equals
      // the matrix form on the same span
      ProbeConfig cfg;
      cfg.seed = 5;
      cfg.num_probes = 50;
      cfg.support_size = 6;
      cfg.window = labels;
      const Verdict via_tree = hyponormal_falsify(s.to_local(), cfg, tol);
      const Verdict via_matrix = hyponormal_falsify(m, tol);
      CHECK(via_tree.fails() == via_matrix.fails());

      // compression is multiplicative because the span is invariant
      const FiniteMatrixOp sq = matrix_of(compose(s.to_local(), s.to_local()), labels);
      CHECK((sq.matrix() - m.matrix() * m.matrix()).norm() < 1e-13);
    }
  }
}
