#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/likelihood.hpp"

namespace graphscan {

/// Time-prefix sums of edge indicators: C_t(i,j) = sum_{m<=t} G_ij^(m).
/// Windowed counts C_t - C_{k-1} come out in O(1) per pair, so any
/// (window, subgraph) statistic costs O(n^2) regardless of window length.
///
/// With a finite `max_lookback` only the prefixes needed for windows of up
/// to that many trailing samples are retained; older ones are discarded.
/// The window-limited detectors never look back further.
class EdgeCountMatrix {
 public:
  static constexpr std::uint64_t kUnbounded =
      std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kMaxWindow = 0x7fffffffull;  // 2^31 - 1

  explicit EdgeCountMatrix(std::uint32_t num_nodes,
                           std::uint64_t max_lookback = kUnbounded)
      : num_nodes_(num_nodes),
        max_lookback_(max_lookback),
        horizon_(0),
        first_retained_(0) {
    if (num_nodes < 2) {
      throw std::invalid_argument("EdgeCountMatrix requires at least 2 nodes");
    }
    if (max_lookback_ != kUnbounded && max_lookback_ < 1) {
      throw std::invalid_argument("max lookback must be at least 1");
    }
    // C_0 = all zeros.
    prefixes_.emplace_back(pair_count(num_nodes_), 0u);
  }

  std::uint32_t num_nodes() const { return num_nodes_; }
  std::uint64_t num_pairs() const { return pair_count(num_nodes_); }
  std::uint64_t horizon() const { return horizon_; }

  /// Earliest start time k such that the window [k, horizon] is still
  /// backed by a retained prefix.
  std::uint64_t earliest_start() const { return first_retained_ + 1; }

  void append(const GraphSnapshot& snapshot) {
    if (snapshot.num_nodes() != num_nodes_) {
      throw std::invalid_argument("snapshot node count mismatch");
    }
    if (horizon_ == std::numeric_limits<std::uint32_t>::max()) {
      throw std::overflow_error("prefix counters saturated");
    }
    prefixes_.push_back(prefixes_.back());
    std::vector<std::uint32_t>& current = prefixes_.back();
    snapshot.for_each_edge_index([&](std::uint64_t idx) { ++current[idx]; });
    ++horizon_;
    if (max_lookback_ != kUnbounded) {
      // Keep C_s for s in [horizon - max_lookback, horizon].
      while (horizon_ - first_retained_ > max_lookback_) {
        prefixes_.pop_front();
        ++first_retained_;
      }
    }
  }

  /// Windowed count over [k, t] for the pair (i, j), 1 <= k <= t <= horizon.
  std::uint32_t window_count(std::uint64_t k, std::uint64_t t,
                             std::uint32_t i, std::uint32_t j) const {
    if (i > j) std::swap(i, j);
    if (i == j || j >= num_nodes_) {
      throw std::invalid_argument("invalid pair");
    }
    const std::uint64_t idx = pair_index(i, j, num_nodes_);
    check_window(k, t);
    return at(t)[idx] - at(k - 1)[idx];
  }

  /// Windowed counts over [k, t] for every pair, written to `out`
  /// (size num_pairs). The hot path for scan statistics.
  void window_counts_into(std::uint64_t k, std::uint64_t t,
                          std::span<std::uint32_t> out) const {
    check_window(k, t);
    if (out.size() != num_pairs()) {
      throw std::invalid_argument("output span size mismatch");
    }
    const std::vector<std::uint32_t>& hi = at(t);
    const std::vector<std::uint32_t>& lo = at(k - 1);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      out[idx] = hi[idx] - lo[idx];
    }
  }

  std::vector<std::uint32_t> window_counts(std::uint64_t k,
                                           std::uint64_t t) const {
    std::vector<std::uint32_t> out(num_pairs());
    window_counts_into(k, t, out);
    return out;
  }

 private:
  void check_window(std::uint64_t k, std::uint64_t t) const {
    if (k < 1 || k > t) {
      throw std::invalid_argument("window start must satisfy 1 <= k <= t");
    }
    if (t > horizon_) {
      throw std::out_of_range("window end beyond horizon");
    }
    if (t - k + 1 > kMaxWindow) {
      throw std::invalid_argument("window longer than 2^31 - 1 steps");
    }
    if (k - 1 < first_retained_) {
      throw std::out_of_range("window start older than retained lookback");
    }
  }

  const std::vector<std::uint32_t>& at(std::uint64_t s) const {
    return prefixes_[s - first_retained_];
  }

  std::uint32_t num_nodes_;
  std::uint64_t max_lookback_;
  std::uint64_t horizon_;
  std::uint64_t first_retained_;  // oldest retained prefix time s
  std::deque<std::vector<std::uint32_t>> prefixes_;
};

/// Sum of per-snapshot LLRs over the window [k, t] restricted to `subgraph`,
/// computed from prefix counts in O(C(n,2)).
inline double window_llr(const EdgeCountMatrix& counts, std::uint64_t k,
                         std::uint64_t t,
                         std::span<const std::uint32_t> subgraph,
                         const LlrWeights& weights) {
  validate_subgraph(subgraph, counts.num_nodes());
  std::uint64_t within = 0;
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      within += counts.window_count(k, t, subgraph[a], subgraph[b]);
    }
  }
  const std::uint64_t pairs =
      pair_count(static_cast<std::uint32_t>(subgraph.size()));
  const std::uint64_t slots = (t - k + 1) * pairs;
  return static_cast<double>(within) * weights.w_present +
         static_cast<double>(slots - within) * weights.w_absent;
}

}  // namespace graphscan
