#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/random.hpp"
#include "graphscan/scenario.hpp"

namespace graphscan {

/// One Erdos-Renyi draw: each of the N(N-1)/2 pairs is present independently
/// with probability p. Exactly one RNG draw is consumed per pair, in
/// canonical row-major order over i < j.
inline GraphSnapshot sample_er(std::uint32_t num_nodes, ErParams params,
                               RandomSource& rng) {
  if (num_nodes < 2) {
    throw std::invalid_argument("sample_er requires at least 2 nodes");
  }
  GraphSnapshot snapshot(num_nodes);
  std::uint64_t idx = 0;
  for (std::uint32_t i = 0; i + 1 < num_nodes; ++i) {
    for (std::uint32_t j = i + 1; j < num_nodes; ++j, ++idx) {
      if (rng.bernoulli(params.p)) snapshot.set(idx);
    }
  }
  return snapshot;
}

/// Streaming sampler for a scenario: next() yields the snapshot at times
/// 1, 2, ... in order. Pure function of (scenario, seed): a given source
/// always yields the same sequence.
class SequenceSampler {
 public:
  SequenceSampler(ChangeScenario scenario, RandomSource rng)
      : scenario_(std::move(scenario)),
        rng_(std::move(rng)),
        inside_(pair_count(scenario_.num_nodes), false),
        time_(0) {
    const auto& members = scenario_.planted_subgraph;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        inside_[pair_index(members[a], members[b], scenario_.num_nodes)] =
            true;
      }
    }
  }

  std::uint64_t time() const { return time_; }

  GraphSnapshot next() {
    ++time_;
    const bool changed =
        !scenario_.is_null() && time_ >= scenario_.change_point;
    GraphSnapshot snapshot(scenario_.num_nodes);
    const double p0 = scenario_.p0.p;
    const double p1 = scenario_.p1.p;
    const std::uint64_t pairs = snapshot.num_pairs();
    for (std::uint64_t idx = 0; idx < pairs; ++idx) {
      const double p = (changed && inside_[idx]) ? p1 : p0;
      if (rng_.bernoulli(p)) snapshot.set(idx);
    }
    return snapshot;
  }

 private:
  ChangeScenario scenario_;
  RandomSource rng_;
  std::vector<bool> inside_;  // pair lies within the planted subgraph
  std::uint64_t time_;
};

/// Materialized sequence for times 1..horizon.
inline std::vector<GraphSnapshot> sample_sequence(
    const ChangeScenario& scenario, std::uint64_t horizon, RandomSource rng) {
  if (horizon < 1) {
    throw std::invalid_argument("horizon must be at least 1");
  }
  SequenceSampler sampler(scenario, std::move(rng));
  std::vector<GraphSnapshot> sequence;
  sequence.reserve(horizon);
  for (std::uint64_t t = 0; t < horizon; ++t) {
    sequence.push_back(sampler.next());
  }
  return sequence;
}

}  // namespace graphscan
