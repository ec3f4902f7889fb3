#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcap/certs.hpp"
#include "graphcap/combinatorics.hpp"
#include "graphcap/graph.hpp"
#include "graphcap/haemers.hpp"
#include "graphcap/rational.hpp"

namespace graphcap {

/// splitmix64 stream; the random-graph model of the harness is G(n,1/2)
/// driven by one bit per vertex pair from this generator.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1ull) != 0; }

  double unit() { return (next() >> 11) * 0x1.0p-53; }
};

Graph random_graph_gnp_half(int n, SplitMix64& rng);

enum class FunctionalId {
  theta,
  frac_clique_cover,
  haemers_q_upper,  // eigen-shift representation source, t = 1
  indep_number,
  clique_cover,
};

std::string functional_name(FunctionalId f);
FunctionalId functional_from_name(const std::string& name);

/// Evaluates the functional as a double (exact functionals are converted).
double evaluate_functional(FunctionalId f, const Graph& g,
                           const SearchBudget& budget = {});

struct AxiomViolation {
  int trial;
  std::string kind;  // "additive" | "multiplicative" | "monotonicity" | "normalization"
  double amount;
};

struct AxiomReport {
  FunctionalId functional;
  int trials = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  double worst_additive = 0.0;
  double worst_multiplicative = 0.0;
  bool normalization_ok = true;
  int monotonicity_checked = 0;
  int monotonicity_undecided = 0;
  std::vector<AxiomViolation> monotonicity_violations;

  bool passing(double tol) const {
    return normalization_ok && worst_additive <= tol &&
           worst_multiplicative <= tol && monotonicity_violations.empty();
  }
};

/// Samples seeded G(n,1/2) pairs and checks additivity under disjoint union,
/// multiplicativity under the strong product, normalization phi(K1bar) = 1,
/// and monotonicity on every pair the cohomomorphism search decides true
/// within budget. Deterministic given the seed. Exact functionals report
/// exactly zero residuals when the axiom holds.
AxiomReport spectrum_axiom_test(FunctionalId f, int trials, int max_n,
                                std::uint64_t seed,
                                const SearchBudget& budget = {});

struct SandwichReport {
  double alpha = 0.0;
  double theta = 0.0;
  double fcc = 0.0;
  std::optional<double> haemers_upper;
  std::optional<double> xi_complement_upper;
  bool chain_ok = true;
  std::string broken_link;
  bool haemers_separation = false;  // certified bound strictly under theta
};

/// Evaluates alpha <= theta <= [projective-rank bound] <= fcc plus the
/// representation-based bounds, asserting exactly the links that hold for
/// every valid certificate: alpha<=theta, theta<=fcc, theta<=xi-bound and
/// alpha<=haemers-bound, all within 1e-6 slack. Requires n <= 10.
SandwichReport sandwich_test(const Graph& g,
                             const std::optional<DRep>& haemers_rep = {},
                             const std::optional<ProjRep>& xi_complement_rep = {});

}  // namespace graphcap
