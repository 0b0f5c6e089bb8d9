#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "graphscan/graph.hpp"
#include "graphscan/scenario.hpp"

namespace graphscan {

/// Thrown when the pre- and post-change probabilities coincide: every
/// log-likelihood ratio would be identically zero and no detector can move.
struct DegenerateContrastError : std::invalid_argument {
  DegenerateContrastError()
      : std::invalid_argument("degenerate contrast: p0 == p1") {}
};

/// Per-edge log-likelihood-ratio weights. A present edge contributes
/// log(p1/p0), an absent one log((1-p1)/(1-p0)). Under the null,
/// p0*exp(w_present) + (1-p0)*exp(w_absent) == 1.
struct LlrWeights {
  double w_present;
  double w_absent;
  ErParams p0;
  ErParams p1;
};

inline LlrWeights make_weights(ErParams p0, ErParams p1) {
  if (p0.p == p1.p) throw DegenerateContrastError();
  return LlrWeights{std::log(p1.p / p0.p),
                    std::log((1.0 - p1.p) / (1.0 - p0.p)), p0, p1};
}

/// Log-likelihood ratio of one snapshot restricted to `subgraph`:
/// e * w_present + (C(n,2) - e) * w_absent with e the within-subgraph
/// edge count.
inline double snapshot_llr(const GraphSnapshot& graph,
                           std::span<const std::uint32_t> subgraph,
                           const LlrWeights& weights) {
  const std::uint64_t e = edge_count_within(graph, subgraph);
  const std::uint64_t pairs =
      pair_count(static_cast<std::uint32_t>(subgraph.size()));
  return static_cast<double>(e) * weights.w_present +
         static_cast<double>(pairs - e) * weights.w_absent;
}

/// KL divergence between Bernoulli(q) and Bernoulli(p), in nats, with the
/// convention 0*log 0 = 0. q may sit on the boundary; p may not.
inline double bernoulli_kl(double q, double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("reference probability must lie in (0, 1)");
  }
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
  double kl = 0.0;
  if (q > 0.0) kl += q * std::log(q / p);
  if (q < 1.0) kl += (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
  return kl;
}

/// Information rate of the change: C(n,2) * KL(p1 || p0). The per-step mean
/// of the within-subgraph LLR once the change is active, and the rate
/// constant relating detection delay to log(ARL).
inline double change_information(std::uint32_t community_size, ErParams p0,
                                 ErParams p1) {
  if (community_size < 2) {
    throw std::invalid_argument("community size must be at least 2");
  }
  if (p0.p == p1.p) throw DegenerateContrastError();
  return static_cast<double>(pair_count(community_size)) *
         bernoulli_kl(p1.p, p0.p);
}

/// Pre-change mean of the within-subgraph LLR: -C(n,2) * KL(p0 || p1) < 0.
/// The negative drift that keeps the CUSUM statistic pinned near zero under
/// the null.
inline double null_drift(std::uint32_t community_size, ErParams p0,
                         ErParams p1) {
  if (community_size < 2) {
    throw std::invalid_argument("community size must be at least 2");
  }
  if (p0.p == p1.p) throw DegenerateContrastError();
  return -static_cast<double>(pair_count(community_size)) *
         bernoulli_kl(p0.p, p1.p);
}

}  // namespace graphscan
