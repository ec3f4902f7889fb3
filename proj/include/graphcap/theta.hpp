#pragma once

#include <stdexcept>
#include <string>

#include "graphcap/cmatrix.hpp"
#include "graphcap/graph.hpp"

namespace graphcap {

struct NcGraph;  // nc_graph.hpp

/// Solution of the theta SDP: max <J,X> s.t. tr X = 1, X zero on edges,
/// X psd. `value` is the dual objective, certified by the psd dual slack.
struct SdpSolution {
  double value = 0.0;
  RMatrix primal;  // feasible X
  RMatrix dual;    // dual slack Z = A^T(y) - J, psd
  double gap = 0.0;
  int iterations = 0;
};

class SdpNoConvergence : public std::runtime_error {
 public:
  SdpNoConvergence(const std::string& what, double gap, int iterations)
      : std::runtime_error(what), gap(gap), iterations(iterations) {}
  double gap;
  int iterations;
};

/// Dense primal-dual path following with a predictor-corrector step.
/// Stops at gap <= 1e-9 * (1 + |value|) or 200 iterations.
SdpSolution lovasz_theta(const Graph& g);

/// Only defined for nc-graphs carrying graph provenance, where it equals
/// the theta of the marked graph. Anything else is unsupported.
SdpSolution theta_tilde_graph(const NcGraph& s);

}  // namespace graphcap
