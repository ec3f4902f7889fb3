// Command-line front end: graph construction and info, bound computations,
// capacity lower bounds, preorder checks, certificate verification and the
// spectrum-axiom harness. All results go to stdout as JSON.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 budget exhaustion.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "graphcap/json_io.hpp"

namespace {

using namespace graphcap;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  return read_graph_auto(read_file(path));
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

struct Options {
  // graph make
  std::string make_kind;
  std::vector<int> make_params;
  // shared graph file arguments
  std::string file_a, file_b;
  std::string product_op = "strong";
  // bounds
  long long haemers_shift = 1;
  std::string haemers_rep_file;
  bool include_matrices = false;
  // capacity
  int power = 1;
  // verify
  std::string cert_file;
  double tol = kUserTol;
  // spectra-test
  std::string functional = "theta";
  int trials = 100;
  int max_n = 5;
  std::uint64_t seed = 1;
  // budget
  SearchBudget budget;
};

int run_verify(const Options& opt) {
  Certificate cert = certificate_from_json(Json::parse(read_file(opt.cert_file)));
  Json out;
  bool ok = false;
  if (std::holds_alternative<QHomCert>(cert)) {
    auto report = verify_qhom(std::get<QHomCert>(cert), opt.tol);
    ok = report.ok;
    out = verify_report_to_json(report);
    out["kind"] = "qhom";
  } else if (std::holds_alternative<EaHomCert>(cert)) {
    auto report = verify_eahom(std::get<EaHomCert>(cert), opt.tol);
    ok = report.ok;
    out = verify_report_to_json(report);
    out["kind"] = "eahom";
  } else if (std::holds_alternative<DRep>(cert)) {
    const auto& rep = std::get<DRep>(cert);
    ok = verify_drep(rep, opt.tol);
    out = Json{{"ok", ok}, {"failure", ok ? "" : "pattern"}, {"worst", 0.0},
               {"where", Json::array({-1, -1, -1, -1})}};
    out["kind"] = "drep";
    if (ok) out["bound"] = to_fraction_string(haemers_upper_from_rep(rep, opt.tol));
  } else if (std::holds_alternative<ProjRep>(cert)) {
    auto result = verify_projrank(std::get<ProjRep>(cert), opt.tol);
    ok = result.report.ok;
    out = verify_report_to_json(result.report);
    out["kind"] = "projrep";
    out["bound"] = to_fraction_string(result.bound);
  } else {
    auto report = verify_nc_cohom(std::get<NcCohomCert>(cert), opt.tol);
    ok = report.ok;
    out = verify_report_to_json(report);
    out["kind"] = "nccohom";
  }
  emit(out);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity bounds and homomorphism certificates for graphs and nc-graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* graph_cmd = app.add_subcommand("graph", "graph construction and info");
  graph_cmd->require_subcommand(1);
  auto* graph_make = graph_cmd->add_subcommand("make", "build a named graph");
  graph_make->add_option("kind", opt.make_kind,
                         "cycle | complete | empty | petersen | schlafli-complement")
      ->required();
  graph_make->add_option("params", opt.make_params, "size parameter when needed");
  auto* graph_info = graph_cmd->add_subcommand("info", "vertex/edge summary");
  graph_info->add_option("file", opt.file_a, "graph file (json or edge list)")
      ->required();
  auto* graph_product = graph_cmd->add_subcommand("product", "binary graph operations");
  graph_product->add_option("--op", opt.product_op, "strong | union")
      ->check(CLI::IsMember({"strong", "union"}));
  graph_product->add_option("a", opt.file_a)->required();
  graph_product->add_option("b", opt.file_b)->required();

  auto* bound_cmd = app.add_subcommand("bound", "upper-bound functionals");
  bound_cmd->require_subcommand(1);
  auto* bound_theta = bound_cmd->add_subcommand("theta", "Lovasz theta SDP");
  bound_theta->add_option("file", opt.file_a)->required();
  bound_theta->add_flag("--matrices", opt.include_matrices,
                        "include primal/dual matrices in the output");
  auto* bound_fcc = bound_cmd->add_subcommand("fcc", "fractional clique cover (exact)");
  bound_fcc->add_option("file", opt.file_a)->required();
  auto* bound_haemers =
      bound_cmd->add_subcommand("haemers", "rank bound from a representation");
  bound_haemers->add_option("file", opt.file_a)->required();
  bound_haemers->add_option("--shift", opt.haemers_shift,
                            "eigenvalue shift t for the built-in d=1 representation");
  bound_haemers->add_option("--rep", opt.haemers_rep_file,
                            "use a representation from a JSON file instead");

  auto* capacity_cmd =
      app.add_subcommand("capacity-lb", "alpha(G^k)^(1/k) lower bound");
  capacity_cmd->add_option("file", opt.file_a)->required();
  capacity_cmd->add_option("--power", opt.power, "strong-product power k")
      ->check(CLI::PositiveNumber);

  auto* preorder_cmd = app.add_subcommand("preorder", "preorder decisions");
  preorder_cmd->require_subcommand(1);
  auto* preorder_cohom =
      preorder_cmd->add_subcommand("cohom", "classical cohomomorphism preorder");
  preorder_cohom->add_option("a", opt.file_a)->required();
  preorder_cohom->add_option("b", opt.file_b)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
  verify_cmd->add_option("cert", opt.cert_file)->required();
  verify_cmd->add_option("--tol", opt.tol, "verification tolerance");

  auto* spectra_cmd =
      app.add_subcommand("spectra-test", "spectrum-axiom property harness");
  spectra_cmd->add_option("--functional", opt.functional,
                          "theta | frac-clique-cover | haemers-Q-upper | "
                          "indep-number | clique-cover");
  spectra_cmd->add_option("--trials", opt.trials);
  spectra_cmd->add_option("--max-n", opt.max_n);
  spectra_cmd->add_option("--seed", opt.seed);

  for (auto* cmd : {capacity_cmd, preorder_cohom, spectra_cmd}) {
    cmd->add_option("--node-limit", opt.budget.node_limit);
    cmd->add_option("--time-limit-ms", opt.budget.time_limit_ms);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (graph_make->parsed()) {
      emit(graph_to_json(make_named(opt.make_kind, opt.make_params)));
    } else if (graph_info->parsed()) {
      Graph g = load_graph(opt.file_a);
      std::vector<int> degrees(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
      emit(Json{{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"degrees", degrees}});
    } else if (graph_product->parsed()) {
      Graph a = load_graph(opt.file_a), b = load_graph(opt.file_b);
      emit(graph_to_json(opt.product_op == "strong" ? strong_product(a, b)
                                                    : disjoint_union(a, b)));
    } else if (bound_theta->parsed()) {
      emit(sdp_solution_to_json(lovasz_theta(load_graph(opt.file_a)),
                                opt.include_matrices));
    } else if (bound_fcc->parsed()) {
      emit(lp_result_to_json(fractional_clique_cover(load_graph(opt.file_a))));
    } else if (bound_haemers->parsed()) {
      Graph g = load_graph(opt.file_a);
      DRep rep = opt.haemers_rep_file.empty()
                     ? eigen_shift_rep(g, opt.haemers_shift)
                     : drep_from_json(Json::parse(read_file(opt.haemers_rep_file)));
      if (!(rep.graph == g))
        throw std::invalid_argument("haemers: representation is for another graph");
      Rational bound = haemers_upper_from_rep(rep);
      emit(Json{{"bound", to_fraction_string(bound)},
                {"value", to_double(bound)},
                {"d", rep.d}});
    } else if (capacity_cmd->parsed()) {
      CapacityEstimate est =
          capacity_lower_bound(load_graph(opt.file_a), opt.power, opt.budget);
      emit(capacity_to_json(est));
      if (!est.exact) return kExitBudget;
    } else if (preorder_cohom->parsed()) {
      HomSearchResult res =
          cohom_leq(load_graph(opt.file_a), load_graph(opt.file_b), opt.budget);
      Json j{{"result", res.found == TriState::yes      ? "yes"
                        : res.found == TriState::no     ? "no"
                                                        : "unknown"},
             {"nodes", res.nodes}};
      j["witness"] = res.found == TriState::yes ? Json(res.witness) : Json();
      emit(j);
      if (res.found == TriState::unknown) return kExitBudget;
    } else if (verify_cmd->parsed()) {
      return run_verify(opt);
    } else if (spectra_cmd->parsed()) {
      AxiomReport report =
          spectrum_axiom_test(functional_from_name(opt.functional), opt.trials,
                              opt.max_n, opt.seed, opt.budget);
      emit(axiom_report_to_json(report));
    }
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << " (best bounds " << e.best_lower
              << ".." << e.best_upper << ")\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
