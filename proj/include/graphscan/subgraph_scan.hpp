#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphscan/edge_counts.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/likelihood.hpp"

namespace graphscan {

/// C(N, n) with saturation at 2^62 (far above any sensible enumeration cap).
inline std::uint64_t binomial_capped(std::uint32_t N, std::uint32_t n) {
  if (n > N) return 0;
  if (n > N - n) n = N - n;
  constexpr std::uint64_t kSaturated = 1ull << 62;
  unsigned __int128 c = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    c = c * (N - n + k) / k;  // exact: C(N-n+k, k) is integral
    if (c >= kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 200000;

/// Aggregated pair weights on N nodes (the windowed edge counts feeding the
/// scan). Weights from windows are nonnegative and bounded by the window
/// length; the densest-subgraph routines below accept arbitrary signed
/// weights so the sparse direction can reuse them via negation.
struct WeightedPairGraph {
  std::uint32_t num_nodes;
  std::vector<std::int64_t> weights;  // canonical pair order

  explicit WeightedPairGraph(std::uint32_t n_nodes)
      : num_nodes(n_nodes), weights(pair_count(n_nodes), 0) {
    if (n_nodes < 2) {
      throw std::invalid_argument("WeightedPairGraph requires >= 2 nodes");
    }
  }

  std::int64_t weight(std::uint32_t i, std::uint32_t j) const {
    if (i > j) std::swap(i, j);
    if (i == j || j >= num_nodes) throw std::invalid_argument("invalid pair");
    return weights[pair_index(i, j, num_nodes)];
  }

  void set_weight(std::uint32_t i, std::uint32_t j, std::int64_t w) {
    if (i > j) std::swap(i, j);
    if (i == j || j >= num_nodes) throw std::invalid_argument("invalid pair");
    weights[pair_index(i, j, num_nodes)] = w;
  }

  WeightedPairGraph negated() const {
    WeightedPairGraph out(num_nodes);
    for (std::size_t idx = 0; idx < weights.size(); ++idx) {
      out.weights[idx] = -weights[idx];
    }
    return out;
  }

  static WeightedPairGraph from_window(const EdgeCountMatrix& counts,
                                       std::uint64_t k, std::uint64_t t) {
    WeightedPairGraph out(counts.num_nodes());
    std::vector<std::uint32_t> buf = counts.window_counts(k, t);
    for (std::size_t idx = 0; idx < buf.size(); ++idx) {
      out.weights[idx] = buf[idx];
    }
    return out;
  }
};

/// Total weight of pairs internal to `subgraph`.
inline std::int64_t internal_weight(const WeightedPairGraph& graph,
                                    std::span<const std::uint32_t> subgraph) {
  validate_subgraph(subgraph, graph.num_nodes);
  std::int64_t total = 0;
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      total += graph.weights[pair_index(
          std::min(subgraph[a], subgraph[b]),
          std::max(subgraph[a], subgraph[b]), graph.num_nodes)];
    }
  }
  return total;
}

enum class CandidateMode { kExhaustive, kGreedyOnly };

/// The candidate family for the scan: either every sorted n-subset of the
/// N nodes (when C(N,n) fits under the cap) or greedy-only (no materialized
/// family; the scan falls back to the greedy approximation).
class CandidateSet {
 public:
  CandidateSet(std::uint32_t num_nodes, std::uint32_t community_size,
               CandidateMode mode, std::uint64_t cap)
      : num_nodes_(num_nodes),
        community_size_(community_size),
        mode_(mode),
        cap_(cap),
        count_(binomial_capped(num_nodes, community_size)) {}

  std::uint32_t num_nodes() const { return num_nodes_; }
  std::uint32_t community_size() const { return community_size_; }
  CandidateMode mode() const { return mode_; }
  std::uint64_t cap() const { return cap_; }

  /// C(N, n), saturated; in exhaustive mode this is the exact family size.
  std::uint64_t count() const { return count_; }

  /// Visit every candidate in lexicographic order (exhaustive mode only).
  /// The visitor receives a span that is only valid during the call.
  template <class Fn>
  void for_each(Fn&& fn) const {
    if (mode_ != CandidateMode::kExhaustive) {
      throw std::logic_error("candidate family not materializable");
    }
    std::vector<std::uint32_t> comb(community_size_);
    std::iota(comb.begin(), comb.end(), 0u);
    const std::uint32_t n = community_size_;
    const std::uint32_t N = num_nodes_;
    while (true) {
      fn(std::span<const std::uint32_t>(comb));
      std::int64_t i = static_cast<std::int64_t>(n) - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == N - n + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
        comb[j] = comb[j - 1] + 1;
      }
    }
  }

 private:
  std::uint32_t num_nodes_;
  std::uint32_t community_size_;
  CandidateMode mode_;
  std::uint64_t cap_;
  std::uint64_t count_;
};

/// Exhaustive iff C(N,n) <= cap, otherwise greedy-only.
inline CandidateSet enumerate_candidates(
    std::uint32_t num_nodes, std::uint32_t community_size,
    std::uint64_t cap = kDefaultEnumerationCap) {
  if (community_size < 2 || community_size >= num_nodes) {
    throw std::invalid_argument("community size must satisfy 2 <= n < N");
  }
  const std::uint64_t count = binomial_capped(num_nodes, community_size);
  return CandidateSet(num_nodes, community_size,
                      count <= cap ? CandidateMode::kExhaustive
                                   : CandidateMode::kGreedyOnly,
                      cap);
}

/// Two-phase greedy for the heaviest n-subset, the weighted generalization
/// of the classic degree-based procedure: H = the ceil(n/2) nodes of largest
/// weighted degree, C = the floor(n/2) remaining nodes with the largest
/// total weight into H. All ties break toward the smaller node index.
inline std::vector<std::uint32_t> greedy_densest(
    const WeightedPairGraph& graph, std::uint32_t community_size) {
  const std::uint32_t N = graph.num_nodes;
  if (community_size < 1 || community_size > N) {
    throw std::invalid_argument("community size must satisfy 1 <= n <= N");
  }
  std::vector<std::int64_t> degree(N, 0);
  std::uint64_t idx = 0;
  for (std::uint32_t i = 0; i + 1 < N; ++i) {
    for (std::uint32_t j = i + 1; j < N; ++j, ++idx) {
      degree[i] += graph.weights[idx];
      degree[j] += graph.weights[idx];
    }
  }

  std::vector<std::uint32_t> order(N);
  std::iota(order.begin(), order.end(), 0u);
  const std::uint32_t head_size = (community_size + 1) / 2;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     if (degree[a] != degree[b]) return degree[a] > degree[b];
                     return a < b;
                   });
  std::vector<std::uint32_t> result(order.begin(), order.begin() + head_size);

  std::vector<bool> in_head(N, false);
  for (std::uint32_t v : result) in_head[v] = true;
  std::vector<std::int64_t> into_head(N, 0);
  for (std::uint32_t v = 0; v < N; ++v) {
    if (in_head[v]) continue;
    for (std::uint32_t h : result) {
      into_head[v] += graph.weights[pair_index(std::min(v, h), std::max(v, h),
                                               N)];
    }
  }
  std::vector<std::uint32_t> rest;
  rest.reserve(N - head_size);
  for (std::uint32_t v = 0; v < N; ++v) {
    if (!in_head[v]) rest.push_back(v);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     if (into_head[a] != into_head[b]) {
                       return into_head[a] > into_head[b];
                     }
                     return a < b;
                   });
  const std::uint32_t tail_size = community_size / 2;
  result.insert(result.end(), rest.begin(), rest.begin() + tail_size);
  std::sort(result.begin(), result.end());
  return result;
}

/// Exact heaviest n-subset by full enumeration; ties break to the
/// lexicographically smallest sorted index list. The reference the greedy is
/// judged against.
inline std::vector<std::uint32_t> brute_force_densest(
    const WeightedPairGraph& graph, std::uint32_t community_size,
    std::uint64_t cap = kDefaultEnumerationCap) {
  if (community_size < 1 || community_size > graph.num_nodes) {
    throw std::invalid_argument("community size must satisfy 1 <= n <= N");
  }
  if (binomial_capped(graph.num_nodes, community_size) > cap) {
    throw std::invalid_argument("instance above the enumeration cap");
  }
  std::vector<std::uint32_t> best;
  std::int64_t best_weight = 0;
  bool first = true;
  CandidateSet all(graph.num_nodes, community_size, CandidateMode::kExhaustive,
                   cap);
  all.for_each([&](std::span<const std::uint32_t> candidate) {
    const std::int64_t w = internal_weight(graph, candidate);
    if (first || w > best_weight) {
      first = false;
      best_weight = w;
      best.assign(candidate.begin(), candidate.end());
    }
  });
  return best;
}

/// Is the subgraph induced by `subgraph` connected when only positive-weight
/// pairs count as edges?
inline bool connected_in_positive_weights(
    const WeightedPairGraph& graph, std::span<const std::uint32_t> subgraph) {
  if (subgraph.empty()) return false;
  std::vector<std::uint32_t> stack{subgraph[0]};
  std::vector<bool> seen(subgraph.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < subgraph.size(); ++b) {
      if (seen[b] || subgraph[b] == v) continue;
      if (graph.weights[pair_index(std::min(v, subgraph[b]),
                                   std::max(v, subgraph[b]),
                                   graph.num_nodes)] > 0) {
        seen[b] = true;
        ++reached;
        stack.push_back(subgraph[b]);
      }
    }
  }
  return reached == subgraph.size();
}

struct ScanResult {
  std::vector<std::uint32_t> subgraph;
  double statistic;
};

/// The scan's inner maximization for one window: returns the candidate
/// maximizing R = w_present * W(V) + w_absent * (window_len * C(n,2) - W(V)).
/// R is affine and increasing in W(V) when p1 > p0, so the argmax is the
/// heaviest candidate; when p1 < p0 the weights are negated and the same
/// machinery finds the sparsest. Greedy-only mode substitutes the greedy set
/// and reports its R.
///
/// `connected_only` restricts exhaustive candidates to those inducing a
/// connected positive-weight subgraph; if none qualifies the filter is
/// dropped for that window.
inline ScanResult best_subgraph(const WeightedPairGraph& weights,
                                const CandidateSet& candidates,
                                const LlrWeights& llr_weights,
                                std::uint64_t window_len,
                                bool connected_only = false) {
  if (window_len < 1) {
    throw std::invalid_argument("window length must be at least 1");
  }
  if (weights.num_nodes != candidates.num_nodes()) {
    throw std::invalid_argument("candidate set node count mismatch");
  }
  const std::uint32_t n = candidates.community_size();
  const double slots =
      static_cast<double>(window_len) * static_cast<double>(pair_count(n));
  const auto statistic_of = [&](std::int64_t internal) {
    return static_cast<double>(internal) * llr_weights.w_present +
           (slots - static_cast<double>(internal)) * llr_weights.w_absent;
  };
  const bool dense_direction = llr_weights.w_present > llr_weights.w_absent;

  if (candidates.mode() == CandidateMode::kGreedyOnly) {
    std::vector<std::uint32_t> pick =
        dense_direction ? greedy_densest(weights, n)
                        : greedy_densest(weights.negated(), n);
    const std::int64_t w = internal_weight(weights, pick);
    return ScanResult{std::move(pick), statistic_of(w)};
  }

  std::vector<std::uint32_t> best;
  std::int64_t best_signed = 0;
  bool found = false;
  const std::int64_t sign = dense_direction ? 1 : -1;
  candidates.for_each([&](std::span<const std::uint32_t> candidate) {
    if (connected_only && !connected_in_positive_weights(weights, candidate)) {
      return;
    }
    const std::int64_t w = sign * internal_weight(weights, candidate);
    if (!found || w > best_signed) {
      found = true;
      best_signed = w;
      best.assign(candidate.begin(), candidate.end());
    }
  });
  if (!found) {
    // Connectivity filter rejected everything; fall back to the full family.
    return best_subgraph(weights, candidates, llr_weights, window_len, false);
  }
  const double stat = statistic_of(sign * best_signed);
  return ScanResult{std::move(best), stat};
}

}  // namespace graphscan
