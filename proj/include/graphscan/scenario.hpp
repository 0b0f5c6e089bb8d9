#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// Edge-forming probability of an Erdos-Renyi model. Boundary values are
/// rejected: log-likelihood ratios are undefined at 0 and 1.
struct ErParams {
  double p;

  explicit ErParams(double prob) : p(prob) {
    if (!(p > 0.0) || !(p < 1.0)) {
      throw std::invalid_argument("edge probability must lie in (0, 1)");
    }
  }
};

/// Change-point value encoding "no change ever" (pre-change regime only).
inline constexpr std::uint64_t kTauInfinity =
    std::numeric_limits<std::uint64_t>::max();

/// Full generative description of a stream: before time tau every pair draws
/// with probability p0; from tau on, pairs inside the planted subgraph draw
/// with p1 and all other pairs keep p0. tau = kTauInfinity is a first-class
/// value (the null regime), not a separate code path.
struct ChangeScenario {
  std::uint32_t num_nodes;
  std::uint32_t community_size;
  std::vector<std::uint32_t> planted_subgraph;  // sorted, size community_size
  ErParams p0;
  ErParams p1;
  std::uint64_t change_point;  // 1-based; kTauInfinity = never

  ChangeScenario(std::uint32_t n_nodes, std::vector<std::uint32_t> planted,
                 ErParams pre, ErParams post, std::uint64_t tau)
      : num_nodes(n_nodes),
        community_size(static_cast<std::uint32_t>(planted.size())),
        planted_subgraph(std::move(planted)),
        p0(pre),
        p1(post),
        change_point(tau) {
    if (community_size < 2 || community_size >= num_nodes) {
      throw std::invalid_argument("community size must satisfy 2 <= n < N");
    }
    validate_subgraph(planted_subgraph, num_nodes);
    std::sort(planted_subgraph.begin(), planted_subgraph.end());
    if (change_point == 0) {
      throw std::invalid_argument("change point is 1-based");
    }
    if (change_point != kTauInfinity && p0.p == p1.p) {
      throw std::invalid_argument(
          "p0 == p1 with a finite change point describes no change");
    }
  }

  bool is_null() const { return change_point == kTauInfinity; }

  /// Same scenario with the change removed (used for ARL runs).
  ChangeScenario as_null() const {
    ChangeScenario copy = *this;
    copy.change_point = kTauInfinity;
    return copy;
  }

  /// Same scenario with the change active from the first sample
  /// (the detection-delay surrogate regime).
  ChangeScenario with_immediate_change() const {
    ChangeScenario copy = *this;
    copy.change_point = 1;
    return copy;
  }
};

}  // namespace graphscan
