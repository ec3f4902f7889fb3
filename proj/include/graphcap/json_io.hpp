#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <variant>

#include "graphcap/certs.hpp"
#include "graphcap/combinatorics.hpp"
#include "graphcap/haemers.hpp"
#include "graphcap/harness.hpp"
#include "graphcap/lp.hpp"
#include "graphcap/nc_graph.hpp"
#include "graphcap/theta.hpp"

namespace graphcap {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; exact rationals as "p/q" strings;
// GF(p) entries as integers 0..p-1. Graphs as {"n": int, "edges": [[u,v],..]}
// with u < v, sorted lexicographically — bit-exact on round trip.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Accepts both the edge-list text format and the JSON format.
Graph read_graph_auto(const std::string& text);

Json cmatrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);

Json sdp_solution_to_json(const SdpSolution& s, bool include_matrices = false);
Json lp_result_to_json(const LpResult& r);
Json capacity_to_json(const CapacityEstimate& e);
Json verify_report_to_json(const VerifyReport& r);
Json axiom_report_to_json(const AxiomReport& r);
Json sandwich_report_to_json(const SandwichReport& r);

// Certificate envelopes carry a "kind" discriminator:
// "qhom" | "eahom" | "drep" | "projrep" | "nccohom".
Json qhom_to_json(const QHomCert& c);
QHomCert qhom_from_json(const Json& j);
Json eahom_to_json(const EaHomCert& c);
EaHomCert eahom_from_json(const Json& j);
Json drep_to_json(const DRep& r);
DRep drep_from_json(const Json& j);
Json projrep_to_json(const ProjRep& r);
ProjRep projrep_from_json(const Json& j);
Json ncgraph_to_json(const NcGraph& s);
NcGraph ncgraph_from_json(const Json& j);
Json nccohom_to_json(const NcCohomCert& c);
NcCohomCert nccohom_from_json(const Json& j);

using Certificate = std::variant<QHomCert, EaHomCert, DRep, ProjRep, NcCohomCert>;
Certificate certificate_from_json(const Json& j);
Json certificate_to_json(const Certificate& c);

}  // namespace graphcap
