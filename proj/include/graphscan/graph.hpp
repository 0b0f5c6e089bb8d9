#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphscan {

/// Number of unordered pairs on `num_nodes` labeled nodes.
inline constexpr std::uint64_t pair_count(std::uint32_t num_nodes) {
  return static_cast<std::uint64_t>(num_nodes) * (num_nodes - 1) / 2;
}

/// Canonical index of the unordered pair (i, j), i < j, in row-major order
/// over the strict upper triangle: (0,1), (0,2), ..., (0,N-1), (1,2), ...
/// This order is load-bearing: samplers consume one RNG draw per pair in
/// exactly this order, and snapshot files list edges in it.
inline constexpr std::uint64_t pair_index(std::uint32_t i, std::uint32_t j,
                                          std::uint32_t num_nodes) {
  return static_cast<std::uint64_t>(i) * (2ull * num_nodes - i - 1) / 2 +
         (j - i - 1);
}

/// One time step's observation: an undirected simple graph on N labeled
/// nodes, stored as a packed bitset over the canonical pair order.
class GraphSnapshot {
 public:
  explicit GraphSnapshot(std::uint32_t num_nodes)
      : num_nodes_(num_nodes), bits_((pair_count(num_nodes) + 63) / 64, 0) {
    if (num_nodes < 2) {
      throw std::invalid_argument("GraphSnapshot requires at least 2 nodes");
    }
  }

  std::uint32_t num_nodes() const { return num_nodes_; }
  std::uint64_t num_pairs() const { return pair_count(num_nodes_); }

  bool has_edge(std::uint32_t i, std::uint32_t j) const {
    check_pair(i, j);
    if (i > j) std::swap(i, j);
    return test(pair_index(i, j, num_nodes_));
  }

  void set_edge(std::uint32_t i, std::uint32_t j, bool present = true) {
    check_pair(i, j);
    if (i > j) std::swap(i, j);
    const std::uint64_t idx = pair_index(i, j, num_nodes_);
    if (present) {
      bits_[idx >> 6] |= (1ull << (idx & 63));
    } else {
      bits_[idx >> 6] &= ~(1ull << (idx & 63));
    }
  }

  /// Presence bit by canonical pair index (no bounds check beyond the bitset).
  bool test(std::uint64_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }

  void set(std::uint64_t idx) { bits_[idx >> 6] |= (1ull << (idx & 63)); }

  std::uint64_t edge_count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
  }

  /// Visit canonical indices of present edges in increasing order.
  template <class Fn>
  void for_each_edge_index(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(static_cast<std::uint64_t>(w) * 64 + bit);
        word &= word - 1;
      }
    }
  }

  bool operator==(const GraphSnapshot&) const = default;

 private:
  void check_pair(std::uint32_t i, std::uint32_t j) const {
    if (i == j) throw std::invalid_argument("self-loops are not representable");
    if (i >= num_nodes_ || j >= num_nodes_) {
      throw std::out_of_range("node index out of range");
    }
  }

  std::uint32_t num_nodes_;
  std::vector<std::uint64_t> bits_;
};

/// Recover (i, j) from a canonical pair index. O(N) scan; used by IO and
/// error reporting, not by hot loops.
inline std::pair<std::uint32_t, std::uint32_t> pair_from_index(
    std::uint64_t idx, std::uint32_t num_nodes) {
  std::uint64_t offset = idx;
  for (std::uint32_t i = 0; i + 1 < num_nodes; ++i) {
    const std::uint64_t row = num_nodes - i - 1;
    if (offset < row) {
      return {i, static_cast<std::uint32_t>(i + 1 + offset)};
    }
    offset -= row;
  }
  throw std::out_of_range("pair index out of range");
}

/// Validates that `subgraph` holds distinct in-range node indices.
inline void validate_subgraph(std::span<const std::uint32_t> subgraph,
                              std::uint32_t num_nodes) {
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    if (subgraph[a] >= num_nodes) {
      throw std::out_of_range("subgraph index out of range");
    }
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      if (subgraph[a] == subgraph[b]) {
        throw std::invalid_argument("subgraph indices must be distinct");
      }
    }
  }
}

/// Number of present edges with both endpoints in `subgraph`.
inline std::uint64_t edge_count_within(
    const GraphSnapshot& graph, std::span<const std::uint32_t> subgraph) {
  validate_subgraph(subgraph, graph.num_nodes());
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      if (graph.has_edge(subgraph[a], subgraph[b])) ++count;
    }
  }
  return count;
}

}  // namespace graphscan
