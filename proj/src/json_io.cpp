#include "graphcap/json_io.hpp"

#include <nlohmann/json.hpp>

namespace graphcap {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: missing n or edges");
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: malformed edge");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

Graph read_graph_auto(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(Json::parse(text));
  return parse_edge_list(text);
}

Json cmatrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix json: expected array");
  Eigen::Index rows = j.size();
  Eigen::Index cols = rows == 0 ? 0 : j[0].size();
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw std::invalid_argument("matrix json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& cell = j[i][k];
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("matrix json: entries must be [re, im]");
      m(i, k) = {cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return m;
}

namespace {

Json rmatrix_to_json(const RMatrix& m) {
  return cmatrix_to_json(m.cast<std::complex<double>>());
}

Json exact_matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      if (m.field().is_rationals())
        row.push_back(to_fraction_string(m.rat_at(i, j)));
      else
        row.push_back(m.mod_at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix exact_matrix_from_json(const Json& j, FieldTag field) {
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  ExactMatrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const auto& cell = j[i][k];
      if (field.is_rationals())
        m.set(i, k, cell.is_string()
                        ? rational_from_string(cell.get<std::string>())
                        : Rational(cell.get<long long>()));
      else
        m.set_mod(i, k, cell.get<long long>());
    }
  return m;
}

}  // namespace

Json sdp_solution_to_json(const SdpSolution& s, bool include_matrices) {
  Json j{{"value", s.value}, {"gap", s.gap}, {"iterations", s.iterations}};
  if (include_matrices) {
    j["primal"] = rmatrix_to_json(s.primal);
    j["dual"] = rmatrix_to_json(s.dual);
  }
  return j;
}

Json lp_result_to_json(const LpResult& r) {
  Json cliques = Json::array();
  for (const auto& c : r.cliques) {
    Json verts = Json::array();
    for (std::size_t v = c.find_first(); v != Bitset::npos; v = c.find_next(v))
      verts.push_back(static_cast<int>(v));
    cliques.push_back(std::move(verts));
  }
  Json primal = Json::array(), dual = Json::array();
  for (const auto& w : r.primal_weights) primal.push_back(to_fraction_string(w));
  for (const auto& w : r.dual_weights) dual.push_back(to_fraction_string(w));
  return Json{{"optimum", to_fraction_string(r.optimum)},
              {"value", to_double(r.optimum)},
              {"cliques", cliques},
              {"primal_weights", primal},
              {"dual_weights", dual}};
}

Json capacity_to_json(const CapacityEstimate& e) {
  return Json{{"power", e.power},
              {"alpha", e.alpha_value},
              {"root", e.root},
              {"exact", e.exact}};
}

Json verify_report_to_json(const VerifyReport& r) {
  return Json{{"ok", r.ok},
              {"failure", r.failure},
              {"worst", r.worst},
              {"where", r.where}};
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.monotonicity_violations)
    violations.push_back(
        Json{{"trial", v.trial}, {"kind", v.kind}, {"amount", v.amount}});
  return Json{{"functional", functional_name(r.functional)},
              {"trials", r.trials},
              {"max_n", r.max_n},
              {"seed", r.seed},
              {"worst_additive", r.worst_additive},
              {"worst_multiplicative", r.worst_multiplicative},
              {"normalization_ok", r.normalization_ok},
              {"monotonicity_checked", r.monotonicity_checked},
              {"monotonicity_undecided", r.monotonicity_undecided},
              {"violations", violations}};
}

Json sandwich_report_to_json(const SandwichReport& r) {
  Json j{{"alpha", r.alpha},
         {"theta", r.theta},
         {"fcc", r.fcc},
         {"chain_ok", r.chain_ok},
         {"broken_link", r.broken_link},
         {"haemers_separation", r.haemers_separation}};
  if (r.haemers_upper) j["haemers_upper"] = *r.haemers_upper;
  if (r.xi_complement_upper) j["xi_complement_upper"] = *r.xi_complement_upper;
  return j;
}

namespace {

Json ops_to_json(const std::vector<CMatrix>& ops) {
  Json out = Json::array();
  for (const auto& m : ops) out.push_back(cmatrix_to_json(m));
  return out;
}

std::vector<CMatrix> ops_from_json(const Json& j) {
  std::vector<CMatrix> out;
  for (const auto& m : j) out.push_back(cmatrix_from_json(m));
  return out;
}

}  // namespace

Json qhom_to_json(const QHomCert& c) {
  return Json{{"kind", "qhom"},
              {"source", graph_to_json(c.source)},
              {"target", graph_to_json(c.target)},
              {"d", c.d},
              {"data", Json{{"ops", ops_to_json(c.ops)}}}};
}

QHomCert qhom_from_json(const Json& j) {
  QHomCert c;
  c.source = graph_from_json(j.at("source"));
  c.target = graph_from_json(j.at("target"));
  c.d = j.at("d").get<int>();
  c.ops = ops_from_json(j.at("data").at("ops"));
  return c;
}

Json eahom_to_json(const EaHomCert& c) {
  return Json{{"kind", "eahom"},
              {"source", graph_to_json(c.source)},
              {"target", graph_to_json(c.target)},
              {"d", c.d},
              {"data", Json{{"rho", cmatrix_to_json(c.rho)},
                            {"rhos", ops_to_json(c.ops)}}}};
}

EaHomCert eahom_from_json(const Json& j) {
  EaHomCert c;
  c.source = graph_from_json(j.at("source"));
  c.target = graph_from_json(j.at("target"));
  c.d = j.at("d").get<int>();
  c.rho = cmatrix_from_json(j.at("data").at("rho"));
  c.ops = ops_from_json(j.at("data").at("rhos"));
  return c;
}

Json drep_to_json(const DRep& r) {
  Json blocks = Json::array();
  std::string field;
  if (r.complex_entries) {
    field = "C";
    for (const auto& b : r.complex_blocks) blocks.push_back(cmatrix_to_json(b));
  } else if (r.field.is_rationals()) {
    field = "Q";
    for (const auto& b : r.exact_blocks) blocks.push_back(exact_matrix_to_json(b));
  } else {
    field = "F_" + std::to_string(r.field.prime());
    for (const auto& b : r.exact_blocks) blocks.push_back(exact_matrix_to_json(b));
  }
  return Json{{"kind", "drep"},
              {"graph", graph_to_json(r.graph)},
              {"field", field},
              {"d", r.d},
              {"blocks", blocks}};
}

DRep drep_from_json(const Json& j) {
  DRep r;
  r.graph = graph_from_json(j.at("graph"));
  r.d = j.at("d").get<int>();
  std::string field = j.at("field").get<std::string>();
  const Json& blocks = j.at("blocks");
  if (field == "C") {
    r.complex_entries = true;
    for (const auto& b : blocks) r.complex_blocks.push_back(cmatrix_from_json(b));
  } else {
    r.complex_entries = false;
    if (field == "Q")
      r.field = FieldTag::rationals();
    else if (field.rfind("F_", 0) == 0)
      r.field = FieldTag::prime_field(std::stoll(field.substr(2)));
    else
      throw std::invalid_argument("drep json: unknown field " + field);
    for (const auto& b : blocks)
      r.exact_blocks.push_back(exact_matrix_from_json(b, r.field));
  }
  return r;
}

Json projrep_to_json(const ProjRep& r) {
  return Json{{"kind", "projrep"},
              {"graph", graph_to_json(r.graph)},
              {"d", r.d},
              {"r", r.r},
              {"projectors", ops_to_json(r.projectors)}};
}

ProjRep projrep_from_json(const Json& j) {
  ProjRep r;
  r.graph = graph_from_json(j.at("graph"));
  r.d = j.at("d").get<int>();
  r.r = j.at("r").get<int>();
  r.projectors = ops_from_json(j.at("projectors"));
  return r;
}

Json ncgraph_to_json(const NcGraph& s) {
  Json j{{"dim", s.dim}, {"basis", ops_to_json(s.basis)}};
  j["provenance"] = s.provenance ? graph_to_json(*s.provenance) : Json();
  return j;
}

NcGraph ncgraph_from_json(const Json& j) {
  NcGraph s;
  s.dim = j.at("dim").get<int>();
  s.basis = ops_from_json(j.at("basis"));
  if (j.contains("provenance") && !j.at("provenance").is_null())
    s.provenance = graph_from_json(j.at("provenance"));
  if (!check_nc_invariants(s))
    throw std::invalid_argument("ncgraph json: invariants violated");
  return s;
}

Json nccohom_to_json(const NcCohomCert& c) {
  Json j{{"kind", "nccohom"},
         {"source", ncgraph_to_json(c.source)},
         {"target", ncgraph_to_json(c.target)},
         {"kraus", ops_to_json(c.kraus)}};
  j["rho"] = c.rho ? cmatrix_to_json(*c.rho) : Json();
  return j;
}

NcCohomCert nccohom_from_json(const Json& j) {
  NcCohomCert c;
  c.source = ncgraph_from_json(j.at("source"));
  c.target = ncgraph_from_json(j.at("target"));
  c.kraus = ops_from_json(j.at("kraus"));
  if (j.contains("rho") && !j.at("rho").is_null())
    c.rho = cmatrix_from_json(j.at("rho"));
  return c;
}

Certificate certificate_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "qhom") return qhom_from_json(j);
  if (kind == "eahom") return eahom_from_json(j);
  if (kind == "drep") return drep_from_json(j);
  if (kind == "projrep") return projrep_from_json(j);
  if (kind == "nccohom") return nccohom_from_json(j);
  throw std::invalid_argument("certificate json: unknown kind " + kind);
}

Json certificate_to_json(const Certificate& c) {
  return std::visit(
      [](const auto& cert) -> Json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, QHomCert>) return qhom_to_json(cert);
        else if constexpr (std::is_same_v<T, EaHomCert>) return eahom_to_json(cert);
        else if constexpr (std::is_same_v<T, DRep>) return drep_to_json(cert);
        else if constexpr (std::is_same_v<T, ProjRep>) return projrep_to_json(cert);
        else return nccohom_to_json(cert);
      },
      c);
}

}  // namespace graphcap
