#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// Parse error carrying the 1-based line number of the offending input.
struct SnapshotParseError : std::runtime_error {
  std::uint64_t line;
  SnapshotParseError(std::uint64_t line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
};

/// Snapshot block format: a header line `t N`, one line `i j` per present
/// edge with i < j, then one blank line. Sequence files concatenate blocks
/// for t = 1, 2, ... with no gaps. Edges are written in canonical order so
/// serialization is byte-reproducible.
inline void write_snapshot(std::ostream& out, std::uint64_t t,
                           const GraphSnapshot& snapshot) {
  out << t << ' ' << snapshot.num_nodes() << '\n';
  const std::uint32_t N = snapshot.num_nodes();
  snapshot.for_each_edge_index([&](std::uint64_t idx) {
    const auto [i, j] = pair_from_index(idx, N);
    out << i << ' ' << j << '\n';
  });
  out << '\n';
}

inline void write_sequence(std::ostream& out,
                           const std::vector<GraphSnapshot>& sequence) {
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    write_snapshot(out, s + 1, sequence[s]);
  }
}

/// Streaming reader: yields one snapshot per block, validating header
/// monotonicity, index ranges and edge orientation as it goes.
class SnapshotReader {
 public:
  explicit SnapshotReader(std::istream& in) : in_(in) {}

  std::uint64_t last_time() const { return last_time_; }

  /// Reads the next block. Returns false at a clean end of file.
  bool next(GraphSnapshot& out) {
    std::string line;
    // Skip blank separators before a header (tolerates a trailing newline).
    while (true) {
      if (!std::getline(in_, line)) return false;
      ++line_number_;
      if (!is_blank(line)) break;
    }
    std::istringstream header(line);
    std::uint64_t t = 0;
    std::uint64_t n_nodes = 0;
    if (!(header >> t >> n_nodes) || !trailing_ok(header)) {
      throw SnapshotParseError(line_number_, "malformed header, expected `t N`");
    }
    if (t != last_time_ + 1) {
      throw SnapshotParseError(
          line_number_, "block time " + std::to_string(t) +
                            " does not follow " + std::to_string(last_time_));
    }
    if (n_nodes < 2 || n_nodes > 0xffffffffull) {
      throw SnapshotParseError(line_number_, "invalid node count");
    }
    if (last_time_ > 0 && n_nodes != num_nodes_) {
      throw SnapshotParseError(line_number_,
                               "node count changed between blocks");
    }
    num_nodes_ = static_cast<std::uint32_t>(n_nodes);
    GraphSnapshot snapshot(num_nodes_);
    while (std::getline(in_, line)) {
      ++line_number_;
      if (is_blank(line)) {
        last_time_ = t;
        out = std::move(snapshot);
        return true;
      }
      std::istringstream edge(line);
      std::uint64_t i = 0;
      std::uint64_t j = 0;
      if (!(edge >> i >> j) || !trailing_ok(edge)) {
        throw SnapshotParseError(line_number_,
                                 "malformed edge line, expected `i j`");
      }
      if (i >= j) {
        throw SnapshotParseError(line_number_,
                                 "edge endpoints must satisfy i < j");
      }
      if (j >= num_nodes_) {
        throw SnapshotParseError(line_number_, "node index out of range");
      }
      snapshot.set_edge(static_cast<std::uint32_t>(i),
                        static_cast<std::uint32_t>(j));
    }
    // EOF inside a block: accept it as the block terminator.
    last_time_ = t;
    out = std::move(snapshot);
    return true;
  }

 private:
  static bool is_blank(const std::string& line) {
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
  }

  static bool trailing_ok(std::istringstream& in) {
    std::string rest;
    in >> rest;
    return rest.empty();
  }

  std::istream& in_;
  std::uint64_t line_number_ = 0;
  std::uint64_t last_time_ = 0;
  std::uint32_t num_nodes_ = 0;
};

inline std::vector<GraphSnapshot> read_sequence(std::istream& in) {
  SnapshotReader reader(in);
  std::vector<GraphSnapshot> sequence;
  GraphSnapshot snapshot(2);
  while (reader.next(snapshot)) {
    sequence.push_back(snapshot);
  }
  return sequence;
}

}  // namespace graphscan
