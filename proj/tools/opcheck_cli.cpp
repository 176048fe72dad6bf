// Command-line front end: build operators from inline JSON or the exhibit
// catalog, run predicates and suites, emit machine-readable reports.
//
// Exit codes: 0 all expected outcomes met (or nothing unexpected),
//             1 unexpected verdict, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "opcheck/corpus.hpp"
#include "opcheck/exhibits.hpp"

namespace {

using Json = nlohmann::json;
using namespace opcheck;

struct CommonOpts {
  std::uint64_t seed = 42;
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  std::string out;
  bool no_timestamp = false;

  TolerancePolicy tol() const { return {tol_abs, tol_rel}; }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "probe seed");
  cmd->add_option("--tol-abs", c.tol_abs, "absolute tolerance");
  cmd->add_option("--tol-rel", c.tol_rel, "relative tolerance");
  cmd->add_option("--out", c.out, "report output path (default: stdout)");
  cmd->add_flag("--no-timestamp", c.no_timestamp, "suppress the report timestamp");
}

void emit(const Report& r, const CommonOpts& c) {
  const std::string text = to_json(r, {.with_timestamp = !c.no_timestamp, .indent = 2});
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path '" + c.out + "'");
    f << text;
  }
  std::cerr << summary_lines(r);
}

Complex parse_complex(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument(std::string(what) + ": expected a number or [re, im]");
}

FiniteMatrixOp parse_matrix(const std::string& text) {
  const Json j = Json::parse(text);
  if (!j.is_array() || j.empty()) throw std::invalid_argument("--matrix: expected a row array");
  const auto n = j.size();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw std::invalid_argument("--matrix: matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], "--matrix entry");
  }
  return FiniteMatrixOp(std::move(m));
}

VertexKey parse_vertex(const Json& j) {
  if (j.is_number_integer()) return VertexKey{0, j.get<std::int32_t>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return VertexKey{j[0].get<std::int32_t>(), j[1].get<std::int32_t>()};
  throw std::invalid_argument("--tree: vertex must be an integer or [branch, index]");
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> known,
                         const char* what) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* kn : known) ok = ok || k == kn;
    if (!ok) throw std::invalid_argument(std::string(what) + ": unknown key '" + k + "'");
  }
}

struct BuiltOperator {
  std::string descriptor;
  LocalOperator op;
  std::vector<Label> window;
  std::optional<FiniteMatrixOp> finite;
};

BuiltOperator from_tree_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("--tree: expected an object");
  BuiltOperator b;
  if (j.contains("family")) {
    reject_unknown_keys(j, {"family", "kappa", "alpha", "beta", "trunk", "branch_depth_cap",
                            "trunk_depth_cap"},
                        "--tree");
    if (j["family"] != "t2") throw std::invalid_argument("--tree: unknown family");
    std::optional<std::int64_t> kappa;
    if (!j.contains("kappa") || (j["kappa"].is_string() && j["kappa"] == "inf"))
      kappa = std::nullopt;
    else if (j["kappa"].is_number_integer())
      kappa = j["kappa"].get<std::int64_t>();
    else
      throw std::invalid_argument("--tree: kappa must be an integer or \"inf\"");
    const auto& alpha = j.at("alpha");
    const auto& beta = j.at("beta");
    if (!alpha.is_array() || alpha.size() != 2 || !beta.is_array() || beta.size() != 2)
      throw std::invalid_argument("--tree: alpha and beta must be pairs");
    const Complex trunk =
        j.contains("trunk") ? parse_complex(j["trunk"], "--tree trunk") : Complex(1.0, 0.0);
    const std::int64_t cap =
        j.contains("branch_depth_cap") ? j["branch_depth_cap"].get<std::int64_t>() : 8;
    std::optional<std::int64_t> trunk_cap;
    if (j.contains("trunk_depth_cap")) trunk_cap = j["trunk_depth_cap"].get<std::int64_t>();
    DirectedTree tree = DirectedTree::t2_kappa(kappa, cap, trunk_cap);
    TreeShiftOp s(tree, WeightSystem::t2_family(parse_complex(alpha[0], "alpha"),
                                                parse_complex(alpha[1], "alpha"),
                                                parse_complex(beta[0], "beta"),
                                                parse_complex(beta[1], "beta"), trunk));
    b.descriptor = "tree(t2,kappa=" + (kappa ? std::to_string(*kappa) : "inf") + ")";
    b.op = s.to_local();
    // representatives deep enough for every power the CLI can request
    for (const auto& v : orbit_window(tree, 8)) b.window.push_back(Label::vertex(v));
    return b;
  }
  reject_unknown_keys(j, {"vertices", "edges", "weights"}, "--tree");
  std::vector<VertexKey> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(parse_vertex(v));
  std::vector<std::pair<VertexKey, VertexKey>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("--tree: edge must be [parent, child]");
    edges.emplace_back(parse_vertex(e[0]), parse_vertex(e[1]));
  }
  std::map<VertexKey, Complex> weights;
  for (const auto& w : j.at("weights")) {
    if (!w.is_array() || w.size() != 2)
      throw std::invalid_argument("--tree: weight must be [vertex, value]");
    weights[parse_vertex(w[0])] = parse_complex(w[1], "--tree weight");
  }
  DirectedTree tree = DirectedTree::finite(vertices, edges);
  TreeShiftOp s(tree, WeightSystem::from_map(std::move(weights)));
  b.descriptor = "tree(explicit," + std::to_string(vertices.size()) + " vertices)";
  b.op = s.to_local();
  for (const auto& v : tree.vertex_window()) b.window.push_back(Label::vertex(v));
  return b;
}

int name_param(const std::string& name, const std::string& key, int dflt) {
  const auto pos = name.find(key + "=");
  if (pos == std::string::npos) return dflt;
  return std::stoi(name.substr(pos + key.size() + 1));
}

BuiltOperator from_exhibit_name(const std::string& name, const ExhibitRunOptions& opts) {
  BuiltOperator b;
  b.descriptor = name;
  const double is2 = 0.70710678118654752440;
  if (name.rfind("prz2", 0) == 0) {
    const Prz2Exhibit e = build_prz2(Complex(is2, 0), Complex(is2, 0), Complex(is2, 0),
                                     Complex(std::sqrt(1.5), 0), name_param(name, "kappa", 0));
    b.op = e.op.to_local();
    for (const auto& v : orbit_window(e.op.tree(), 8)) b.window.push_back(Label::vertex(v));
    return b;
  }
  if (name.rfind("prz3", 0) == 0) {
    const int n = name_param(name, "n", 2);
    const Prz3Exhibit e = build_prz3(n);
    b.op = e.op.to_local();
    for (const auto& v : orbit_window(e.op.tree(), std::max(8, n + 4)))
      b.window.push_back(Label::vertex(v));
    return b;
  }
  if (name.rfind("prz4", 0) == 0) {
    const int n = name_param(name, "n", 2);
    const ScaleRule rule = name.find("r=pow2") != std::string::npos
                               ? ScaleRule::geometric(1.0, 2.0)
                               : ScaleRule::affine(1.0, 1.0);
    const Prz4Exhibit e = build_prz4(rule, n);
    b.op = e.op.to_local();
    for (std::int64_t j = 0; j <= 4; ++j)
      for (std::int64_t i = 0; i <= n + 4; ++i)
        b.window.push_back(Label::block(j, Label::nat(i)));
    return b;
  }
  if (name.rfind("prz1", 0) == 0) {
    const Prz1Exhibit e = build_prz1(opts.toeplitz_dims);
    const Prz1Section sec = build_prz1_section(e.dims.back(), e.coeffs);
    b.finite = FiniteMatrixOp(sec.c);
    b.op = b.finite->to_local();
    b.window = b.finite->basis();
    return b;
  }
  throw std::invalid_argument("check: exhibit '" + name + "' has no single check operator");
}

int run_check(const CommonOpts& common, const std::string& exhibit, const std::string& matrix,
              const std::string& tree, const std::vector<std::string>& predicates,
              const std::string& suite, int nmax, int probes, int support_size,
              const std::vector<std::string>& expects) {
  const int sources = (exhibit.empty() ? 0 : 1) + (matrix.empty() ? 0 : 1) + (tree.empty() ? 0 : 1);
  if (sources != 1)
    throw std::invalid_argument("check: exactly one of --exhibit, --matrix, --tree required");
  if (!suite.empty() && suite != "embry")
    throw std::invalid_argument("check: unknown suite '" + suite + "'");
  if (predicates.empty() && suite.empty())
    throw std::invalid_argument("check: nothing to run (use --predicate or --suite)");

  ExhibitRunOptions opts;
  opts.seed = common.seed;
  opts.tol = common.tol();
  BuiltOperator b;
  if (!matrix.empty()) {
    b.finite = parse_matrix(matrix);
    b.descriptor = "matrix(" + std::to_string(b.finite->dim()) + "x" +
                   std::to_string(b.finite->dim()) + ")";
    b.op = b.finite->to_local();
    b.window = b.finite->basis();
  } else if (!tree.empty()) {
    b = from_tree_json(tree);
  } else {
    b = from_exhibit_name(exhibit, opts);
  }

  std::map<std::string, Status> expected;
  for (const auto& e : expects) {
    const auto eq = e.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--expect: use predicate=holds|fails|inconclusive");
    const auto st = status_from_string(e.substr(eq + 1));
    if (!st) throw std::invalid_argument("--expect: unknown status in '" + e + "'");
    expected[e.substr(0, eq)] = *st;
  }

  ProbeConfig cfg;
  cfg.seed = common.seed;
  cfg.num_probes = probes;
  cfg.support_size = support_size;
  cfg.window = b.window;

  Report r;
  r.descriptor = b.descriptor;
  r.seed = common.seed;
  r.tol = common.tol();

  auto expect_of = [&expected](const std::string& name) -> std::optional<Status> {
    const auto it = expected.find(name);
    return it == expected.end() ? std::nullopt : std::optional<Status>(it->second);
  };

  for (const std::string& p : predicates) {
    if (p == "quasinormal") {
      Verdict v = b.finite ? quasinormal_test(*b.finite, common.tol())
                           : quasinormal_test(b.op, cfg, common.tol());
      r.add(p, anchors::quasinormal, std::move(v), expect_of(p));
    } else if (p == "normality") {
      Verdict v = b.finite ? normality_test(*b.finite, common.tol())
                           : normality_test(b.op, cfg, common.tol());
      r.add(p, anchors::normality, std::move(v), expect_of(p));
    } else if (p == "paranormal") {
      Verdict v = b.finite ? paranormal_falsify(*b.finite, common.tol())
                           : paranormal_falsify(b.op, cfg, common.tol());
      r.add(p, anchors::paranormal, std::move(v), expect_of(p));
    } else if (p == "hyponormal") {
      Verdict v = b.finite ? hyponormal_falsify(*b.finite, common.tol())
                           : hyponormal_falsify(b.op, cfg, common.tol());
      r.add(p, anchors::hyponormal, std::move(v), expect_of(p));
    } else if (p.rfind("power:", 0) == 0) {
      const int n = std::stoi(p.substr(6));
      Verdict v = b.finite ? power_identity_test(*b.finite, n, common.tol())
                           : power_identity_test(b.op, n, cfg, common.tol());
      r.add(p, anchors::power_identity(n), std::move(v), expect_of(p));
    } else if (p == "paran2") {
      if (!b.finite) throw std::invalid_argument("paran2 is decisive for matrices only");
      r.add(p, anchors::paran2, paran2_check(*b.finite, common.tol()), expect_of(p));
    } else if (p == "agreement") {
      if (!b.finite) throw std::invalid_argument("agreement runs on matrices only");
      Report a = quasinormal_agreement(*b.finite, common.tol());
      for (auto& e : a.entries) r.add(e.predicate, e.anchor, e.verdict, expect_of(e.predicate));
    } else if (p == "moment") {
      if (!b.finite) throw std::invalid_argument("moment runs on matrices only");
      const Eigen::MatrixXcd& m = b.finite->matrix();
      const Eigen::MatrixXcd c2 = m * m, c3 = m * m * m;
      r.add(p, anchors::moment,
            moment_solvability_test(m.adjoint() * m, c2.adjoint() * c2, c3.adjoint() * c3,
                                    common.tol()),
            expect_of(p));
    } else {
      throw std::invalid_argument("check: unknown predicate '" + p + "'");
    }
  }
  if (suite == "embry") {
    Report e = b.finite ? embry_suite(*b.finite, nmax, common.tol())
                        : embry_suite(b.op, nmax, cfg, common.tol());
    for (auto& en : e.entries) r.add(en.predicate, en.anchor, en.verdict, expect_of(en.predicate));
    for (auto& [k, v] : e.metadata) r.note(k, v);
  }
  r.normalize();
  emit(r, common);
  if (r.any_expectation()) return r.all_expected_met() ? 0 : 1;
  return r.any_inconclusive() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suite for quasinormality and related operator identities"};
  app.require_subcommand(1);

  CommonOpts check_common, exhibit_common, corpus_common;

  auto* check = app.add_subcommand("check", "run predicates against one operator");
  std::string exhibit_name, matrix_text, tree_text, suite;
  std::vector<std::string> predicates, expects;
  int nmax = 6, probes = 200, support_size = 6;
  check->add_option("--exhibit", exhibit_name, "exhibit catalog name, e.g. prz3:n=3");
  check->add_option("--matrix", matrix_text, "inline matrix JSON, entries number or [re,im]");
  check->add_option("--tree", tree_text, "tree + weights JSON (family or explicit)");
  check->add_option("--predicate", predicates,
                    "quasinormal|normality|paranormal|hyponormal|power:<n>|paran2|agreement|moment");
  check->add_option("--suite", suite, "suite name (embry)");
  check->add_option("--nmax", nmax, "largest power identity in the suite");
  check->add_option("--probes", probes, "random probe budget");
  check->add_option("--support-size", support_size, "probe support size");
  check->add_option("--expect", expects, "expected outcome, predicate=status");
  add_common(check, check_common);

  auto* exh = app.add_subcommand("exhibit", "build a catalog exhibit and run its bundled checks");
  std::string name;
  std::vector<int> toeplitz_dims;
  exh->add_option("name", name, "prz1|prz2|prz3:n=<k>|prz4:r=poly1|achtenZ")->required();
  exh->add_option("--N", toeplitz_dims, "Toeplitz compression dimensions")->delimiter(',');
  add_common(exh, exhibit_common);

  auto* corpus = app.add_subcommand("corpus", "seeded random-matrix invariant suite");
  int count = 500;
  std::string dims = "2..6";
  corpus->add_option("--count", count, "number of random matrices");
  corpus->add_option("--dims", dims, "dimension range lo..hi");
  add_common(corpus, corpus_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(check_common, exhibit_name, matrix_text, tree_text, predicates, suite,
                       nmax, probes, support_size, expects);
    if (exh->parsed()) {
      ExhibitRunOptions opts;
      opts.seed = exhibit_common.seed;
      opts.tol = exhibit_common.tol();
      if (!toeplitz_dims.empty()) opts.toeplitz_dims = toeplitz_dims;
      const Report r = run_exhibit(name, opts);
      emit(r, exhibit_common);
      return r.all_expected_met() ? 0 : 1;
    }
    // corpus
    const auto dots = dims.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("corpus: --dims must be lo..hi");
    const int lo = std::stoi(dims.substr(0, dots));
    const int hi = std::stoi(dims.substr(dots + 2));
    const Report r = corpus_run(corpus_common.seed, count, lo, hi, corpus_common.tol());
    emit(r, corpus_common);
    return std::all_of(r.entries.begin(), r.entries.end(),
                       [](const ReportEntry& e) { return e.verdict.holds(); })
               ? 0
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
