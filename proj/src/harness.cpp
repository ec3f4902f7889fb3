#include "graphcap/harness.hpp"

#include <cmath>
#include <stdexcept>

#include "graphcap/lp.hpp"
#include "graphcap/theta.hpp"

namespace graphcap {

Graph random_graph_gnp_half(int n, SplitMix64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) g.add_edge(u, v);
  return g;
}

std::string functional_name(FunctionalId f) {
  switch (f) {
    case FunctionalId::theta: return "theta";
    case FunctionalId::frac_clique_cover: return "frac-clique-cover";
    case FunctionalId::haemers_q_upper: return "haemers-Q-upper";
    case FunctionalId::indep_number: return "indep-number";
    case FunctionalId::clique_cover: return "clique-cover";
  }
  throw std::logic_error("functional_name: unreachable");
}

FunctionalId functional_from_name(const std::string& name) {
  if (name == "theta") return FunctionalId::theta;
  if (name == "frac-clique-cover") return FunctionalId::frac_clique_cover;
  if (name == "haemers-Q-upper") return FunctionalId::haemers_q_upper;
  if (name == "indep-number") return FunctionalId::indep_number;
  if (name == "clique-cover") return FunctionalId::clique_cover;
  throw std::invalid_argument("unknown functional: " + name);
}

namespace {

// Exact rational value where the functional has one; empty otherwise.
std::optional<Rational> evaluate_exact(FunctionalId f, const Graph& g,
                                       const SearchBudget& budget) {
  switch (f) {
    case FunctionalId::frac_clique_cover:
      return fractional_clique_cover(g).optimum;
    case FunctionalId::haemers_q_upper:
      return haemers_upper_from_rep(eigen_shift_rep(g, 1));
    case FunctionalId::indep_number:
      return Rational(independence_number(g, budget));
    case FunctionalId::clique_cover:
      return Rational(clique_cover_number(g, budget));
    case FunctionalId::theta:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

double evaluate_functional(FunctionalId f, const Graph& g,
                           const SearchBudget& budget) {
  if (f == FunctionalId::theta) return lovasz_theta(g).value;
  return to_double(*evaluate_exact(f, g, budget));
}

AxiomReport spectrum_axiom_test(FunctionalId f, int trials, int max_n,
                                std::uint64_t seed, const SearchBudget& budget) {
  if (max_n < 1) throw std::invalid_argument("spectrum_axiom_test: max_n >= 1");
  AxiomReport report;
  report.functional = f;
  report.trials = trials;
  report.max_n = max_n;
  report.seed = seed;

  // Normalization phi(K1bar) = 1.
  Graph k1(1);
  if (f == FunctionalId::theta) {
    report.normalization_ok = std::abs(lovasz_theta(k1).value - 1.0) <= 1e-9;
  } else {
    report.normalization_ok = (*evaluate_exact(f, k1, budget) == 1);
  }
  if (!report.normalization_ok)
    report.monotonicity_violations.push_back({-1, "normalization", 1.0});

  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    int ng = rng.uniform_int(1, max_n);
    int nh = rng.uniform_int(1, max_n);
    Graph g = random_graph_gnp_half(ng, rng);
    Graph h = random_graph_gnp_half(nh, rng);

    if (f == FunctionalId::theta) {
      double fg = lovasz_theta(g).value;
      double fh = lovasz_theta(h).value;
      double f_union = lovasz_theta(disjoint_union(g, h)).value;
      double f_product = lovasz_theta(strong_product(g, h)).value;
      report.worst_additive =
          std::max(report.worst_additive, std::abs(f_union - fg - fh));
      report.worst_multiplicative =
          std::max(report.worst_multiplicative, std::abs(f_product - fg * fh));
    } else {
      Rational fg = *evaluate_exact(f, g, budget);
      Rational fh = *evaluate_exact(f, h, budget);
      Rational f_union = *evaluate_exact(f, disjoint_union(g, h), budget);
      Rational f_product = *evaluate_exact(f, strong_product(g, h), budget);
      report.worst_additive = std::max(
          report.worst_additive, std::abs(to_double(f_union - fg - fh)));
      report.worst_multiplicative = std::max(
          report.worst_multiplicative, std::abs(to_double(f_product - fg * fh)));
    }

    // Monotonicity only on pairs where the classical preorder is decided
    // true; an undecided search never counts as a violation.
    HomSearchResult rel = cohom_leq(g, h, budget);
    if (rel.found == TriState::unknown) {
      ++report.monotonicity_undecided;
    } else if (rel.found == TriState::yes) {
      ++report.monotonicity_checked;
      double fg = evaluate_functional(f, g, budget);
      double fh = evaluate_functional(f, h, budget);
      double slack = (f == FunctionalId::theta) ? 1e-6 : 0.0;
      if (fg > fh + slack)
        report.monotonicity_violations.push_back(
            {trial, "monotonicity", fg - fh});
    }
  }
  return report;
}

SandwichReport sandwich_test(const Graph& g,
                             const std::optional<DRep>& haemers_rep,
                             const std::optional<ProjRep>& xi_complement_rep) {
  if (g.vertex_count() > 10)
    throw std::invalid_argument("sandwich_test: limited to n <= 10");
  if (g.vertex_count() < 1)
    throw std::invalid_argument("sandwich_test: need n >= 1");
  constexpr double kSlack = 1e-6;

  SandwichReport report;
  report.alpha = independence_number(g);
  report.theta = lovasz_theta(g).value;
  report.fcc = to_double(fractional_clique_cover(g).optimum);

  if (haemers_rep) {
    if (!(haemers_rep->graph == g))
      throw std::invalid_argument("sandwich_test: representation is for another graph");
    report.haemers_upper = to_double(haemers_upper_from_rep(*haemers_rep));
  }
  if (xi_complement_rep) {
    if (!(xi_complement_rep->graph == complement(g)))
      throw std::invalid_argument(
          "sandwich_test: projective representation must be declared for the complement");
    auto pr = verify_projrank(*xi_complement_rep);
    if (!pr.report.ok)
      throw std::invalid_argument("sandwich_test: invalid projective representation: " +
                                  pr.report.failure);
    report.xi_complement_upper = to_double(pr.bound);
  }

  auto fail = [&](const std::string& link) {
    report.chain_ok = false;
    if (report.broken_link.empty()) report.broken_link = link;
  };
  if (report.alpha > report.theta + kSlack) fail("alpha<=theta");
  if (report.theta > report.fcc + kSlack) fail("theta<=fcc");
  if (report.xi_complement_upper &&
      report.theta > *report.xi_complement_upper + kSlack)
    fail("theta<=xi-bound");
  if (report.haemers_upper && report.alpha > *report.haemers_upper + kSlack)
    fail("alpha<=haemers-bound");
  if (report.haemers_upper)
    report.haemers_separation = *report.haemers_upper < report.theta - kSlack;
  return report;
}

}  // namespace graphcap
