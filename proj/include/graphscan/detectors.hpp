#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphscan/edge_counts.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/likelihood.hpp"
#include "graphscan/scenario.hpp"
#include "graphscan/subgraph_scan.hpp"

namespace graphscan {

enum class ScanMode { kExhaustive, kGreedy };
enum class P1Mode { kKnown, kMle };

/// Window-limited scan configuration. A window [k, t] is admissible when its
/// length t-k+1 lies in [min_lookback, max_lookback]; the first admissible
/// time is therefore t = min_lookback.
struct GlrWindowConfig {
  std::uint32_t min_lookback = 1;  // shortest window the scan may trust
  std::uint32_t max_lookback = 0;  // longest window kept in memory
  double threshold = 0.0;
  ScanMode scan_mode = ScanMode::kExhaustive;
  P1Mode p1_mode = P1Mode::kKnown;
  double mle_clamp = 0.0;  // 0 = adaptive half-count clamp per window
  bool connected_candidates_only = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  void validate() const {
    if (min_lookback < 1) {
      throw std::invalid_argument("min lookback must be at least 1");
    }
    if (max_lookback <= min_lookback) {
      throw std::invalid_argument("max lookback must exceed min lookback");
    }
    if (!(threshold > 0.0)) {
      throw std::invalid_argument("threshold must be positive");
    }
    if (p1_mode == P1Mode::kMle && mle_clamp != 0.0 &&
        !(mle_clamp > 0.0 && mle_clamp < 0.5)) {
      throw std::invalid_argument("mle clamp must lie in (0, 0.5)");
    }
  }
};

/// What a detector reports at the moment it stops.
struct Alarm {
  std::uint64_t stop_time = 0;
  std::uint64_t estimated_change_point = 0;
  std::vector<std::uint32_t> estimated_subgraph;
  double statistic_at_stop = 0.0;
  std::optional<double> estimated_p1;
};

struct CusumStep {
  std::uint64_t time;
  double statistic;
  bool alarm;
  std::uint64_t run_start;  // earliest time the current excursion covers
};

/// Reflected log-likelihood-ratio random walk on a known target subgraph:
/// S_t = (S_{t-1})^+ + llr(G_t), alarm when S_t > b. Note the reflection
/// applies to S_{t-1}, so S_t itself may be negative.
class CusumDetector {
 public:
  CusumDetector(std::uint32_t num_nodes,
                std::vector<std::uint32_t> target_subgraph, LlrWeights weights,
                double threshold)
      : num_nodes_(num_nodes),
        target_(std::move(target_subgraph)),
        weights_(weights),
        threshold_(threshold),
        statistic_(0.0),
        time_(0),
        run_start_(1) {
    if (!(threshold_ > 0.0)) {
      throw std::invalid_argument("threshold must be positive");
    }
    if (target_.size() < 2) {
      throw std::invalid_argument("target subgraph needs at least 2 nodes");
    }
    validate_subgraph(target_, num_nodes_);
  }

  CusumStep step(const GraphSnapshot& snapshot) {
    if (statistic_ <= 0.0) run_start_ = time_ + 1;
    statistic_ = std::max(statistic_, 0.0) +
                 snapshot_llr(snapshot, target_, weights_);
    ++time_;
    return CusumStep{time_, statistic_, statistic_ > threshold_, run_start_};
  }

  bool advance(const GraphSnapshot& snapshot) { return step(snapshot).alarm; }

  double statistic() const { return statistic_; }
  std::uint64_t time() const { return time_; }
  std::uint64_t run_start() const { return run_start_; }
  double threshold() const { return threshold_; }
  const std::vector<std::uint32_t>& target() const { return target_; }

  Alarm make_alarm() const {
    return Alarm{time_, run_start_, target_, statistic_, std::nullopt};
  }

 private:
  std::uint32_t num_nodes_;
  std::vector<std::uint32_t> target_;
  LlrWeights weights_;
  double threshold_;
  double statistic_;
  std::uint64_t time_;
  std::uint64_t run_start_;
};

/// MLE of the post-change probability on one window and subgraph: the sample
/// mean of the within-subgraph edge indicators, clamped to [eps, 1-eps].
/// eps = 0 selects the adaptive half-count clamp 1/(2 * slots).
inline double mle_p1(const EdgeCountMatrix& counts, std::uint64_t k,
                     std::uint64_t t, std::span<const std::uint32_t> subgraph,
                     double eps = 0.0) {
  validate_subgraph(subgraph, counts.num_nodes());
  std::uint64_t within = 0;
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      within += counts.window_count(k, t, subgraph[a], subgraph[b]);
    }
  }
  const double slots =
      static_cast<double>(t - k + 1) *
      static_cast<double>(pair_count(
          static_cast<std::uint32_t>(subgraph.size())));
  if (eps == 0.0) eps = 1.0 / (2.0 * slots);
  const double p_hat = static_cast<double>(within) / slots;
  return std::min(std::max(p_hat, eps), 1.0 - eps);
}

/// Plug-in statistic with an explicit edge total: slots Bernoulli slots of
/// which `within` are filled, success probability estimated then clamped.
inline double plugin_llr_from_counts(std::uint64_t within, std::uint64_t slots,
                                     double p0, double eps = 0.0) {
  const double m = static_cast<double>(slots);
  if (eps == 0.0) eps = 1.0 / (2.0 * m);
  const double p_hat =
      std::min(std::max(static_cast<double>(within) / m, eps), 1.0 - eps);
  return static_cast<double>(within) * std::log(p_hat / p0) +
         static_cast<double>(slots - within) *
             std::log((1.0 - p_hat) / (1.0 - p0));
}

/// Window LLR with the post-change probability replaced by its windowed MLE.
inline double plugin_window_llr(const EdgeCountMatrix& counts, std::uint64_t k,
                                std::uint64_t t,
                                std::span<const std::uint32_t> subgraph,
                                double p0, double eps = 0.0) {
  validate_subgraph(subgraph, counts.num_nodes());
  std::uint64_t within = 0;
  for (std::size_t a = 0; a < subgraph.size(); ++a) {
    for (std::size_t b = a + 1; b < subgraph.size(); ++b) {
      within += counts.window_count(k, t, subgraph[a], subgraph[b]);
    }
  }
  const std::uint64_t slots =
      (t - k + 1) *
      pair_count(static_cast<std::uint32_t>(subgraph.size()));
  return plugin_llr_from_counts(within, slots, p0, eps);
}

struct GlrStepResult {
  std::uint64_t time = 0;
  bool evaluated = false;  // some admissible window existed
  double statistic = -std::numeric_limits<double>::infinity();
  bool alarm = false;
  std::uint64_t change_point_estimate = 0;
  std::vector<std::uint32_t> subgraph_estimate;
  double p1_estimate = std::numeric_limits<double>::quiet_NaN();
};

/// Window-limited GLR scan detector. Each step appends the snapshot to the
/// prefix-count ring and maximizes the window statistic over admissible
/// change times k and candidate subgraphs V. Ties break to the smallest k,
/// then the lexicographically smallest candidate.
///
/// step() always evaluates the scan and reports the argmax; advance() makes
/// the identical alarm decision but is allowed to skip the scan on steps
/// where a cheap upper bound (one reflected LLR walk per candidate; the
/// unrestricted-k maximum dominates every windowed statistic) already rules
/// an alarm out. Evaluation loops use advance(); streaming output uses
/// step().
class GlrDetector {
 public:
  GlrDetector(std::uint32_t num_nodes, std::uint32_t community_size,
              ErParams p0, std::optional<ErParams> p1, GlrWindowConfig config)
      : config_(validated(config)),
        num_nodes_(num_nodes),
        community_size_(community_size),
        num_cand_pairs_(pair_count(community_size)),
        p0_(p0),
        counts_(num_nodes, config.max_lookback),
        window_buf_(pair_count(num_nodes)) {
    if (community_size < 2 || community_size >= num_nodes) {
      throw std::invalid_argument("community size must satisfy 2 <= n < N");
    }
    if (config_.p1_mode == P1Mode::kKnown) {
      if (!p1.has_value()) {
        throw std::invalid_argument("known-p1 mode requires p1");
      }
      weights_ = make_weights(p0, *p1);
    }
    if (config_.scan_mode == ScanMode::kExhaustive) {
      CandidateSet family = enumerate_candidates(num_nodes, community_size,
                                                 config_.enumeration_cap);
      if (family.mode() != CandidateMode::kExhaustive) {
        throw std::invalid_argument(
            "exhaustive scan requested but C(N,n) exceeds the enumeration "
            "cap");
      }
      materialize_candidates(family);
      if (config_.p1_mode == P1Mode::kKnown &&
          !config_.connected_candidates_only && num_cand_pairs_ <= 255) {
        screen_stats_.assign(candidate_count_, 0.0f);
        screen_edges_.assign(candidate_count_, 0);
        screen_edges_f_.assign(candidate_count_, 0.0f);
      }
    }
  }

  std::uint64_t time() const { return counts_.horizon(); }
  const EdgeCountMatrix& counts() const { return counts_; }
  const GlrWindowConfig& config() const { return config_; }
  std::uint32_t community_size() const { return community_size_; }

  /// Exact step: full scan, argmax bookkeeping.
  GlrStepResult step(const GraphSnapshot& snapshot) {
    ingest(snapshot);
    return scan_windows(/*decision_only=*/false);
  }

  /// Exact alarm decision, scan skipped when provably below threshold.
  bool advance(const GraphSnapshot& snapshot) {
    const bool screened_out = ingest(snapshot);
    if (screened_out) return false;
    return scan_windows(/*decision_only=*/true).alarm;
  }

  Alarm make_alarm(const GlrStepResult& result) const {
    Alarm alarm;
    alarm.stop_time = result.time;
    alarm.estimated_change_point = result.change_point_estimate;
    alarm.estimated_subgraph = result.subgraph_estimate;
    alarm.statistic_at_stop = result.statistic;
    if (config_.p1_mode == P1Mode::kMle && !std::isnan(result.p1_estimate)) {
      alarm.estimated_p1 = result.p1_estimate;
    }
    return alarm;
  }

 private:
  static GlrWindowConfig validated(GlrWindowConfig config) {
    config.validate();
    return config;
  }

  // Appends the snapshot and advances the screening walks: one reflected LLR
  // walk per candidate, held at zero from below, so each walk dominates every
  // windowed statistic of its candidate regardless of the window bounds.
  // Returns true when even the largest walk sits below the threshold by a
  // clear margin, in which case no admissible window can cross it this step.
  bool ingest(const GraphSnapshot& snapshot) {
    counts_.append(snapshot);
    if (screen_stats_.empty()) return false;
    const float base = static_cast<float>(
        static_cast<double>(num_cand_pairs_) * weights_->w_absent);
    const float delta =
        static_cast<float>(weights_->w_present - weights_->w_absent);
    std::memset(screen_edges_.data(), 0, screen_edges_.size());
    snapshot.for_each_edge_index([&](std::uint64_t pair_idx) {
      for (std::uint32_t c : pair_members_[pair_idx]) ++screen_edges_[c];
    });
    const std::uint8_t* edges = screen_edges_.data();
    float* increment = screen_edges_f_.data();
    float* stats = screen_stats_.data();
    const std::size_t count = screen_stats_.size();
    // Simple one-purpose passes: each vectorizes.
    for (std::size_t c = 0; c < count; ++c) {
      increment[c] = static_cast<float>(edges[c]) * delta + base;
    }
    for (std::size_t c = 0; c < count; ++c) {
      stats[c] = std::max(stats[c] + increment[c], 0.0f);
    }
    float m0 = 0.0f, m1 = 0.0f, m2 = 0.0f, m3 = 0.0f;
    std::size_t c = 0;
    for (; c + 4 <= count; c += 4) {
      m0 = std::max(m0, stats[c]);
      m1 = std::max(m1, stats[c + 1]);
      m2 = std::max(m2, stats[c + 2]);
      m3 = std::max(m3, stats[c + 3]);
    }
    for (; c < count; ++c) m0 = std::max(m0, stats[c]);
    const float max_stat = std::max(std::max(m0, m1), std::max(m2, m3));
    // Walks reset at zero under the negative null drift, so a positive
    // excursion cannot run long enough for float rounding to erode this
    // margin.
    return max_stat <= config_.threshold - 1e-2;
  }

  void materialize_candidates(const CandidateSet& family) {
    candidate_count_ = family.count();
    candidate_nodes_.reserve(candidate_count_ * community_size_);
    candidate_pairs_.reserve(candidate_count_ * num_cand_pairs_);
    pair_members_.assign(pair_count(num_nodes_), {});
    std::uint32_t ordinal = 0;
    family.for_each([&](std::span<const std::uint32_t> cand) {
      candidate_nodes_.insert(candidate_nodes_.end(), cand.begin(),
                              cand.end());
      for (std::size_t a = 0; a < cand.size(); ++a) {
        for (std::size_t b = a + 1; b < cand.size(); ++b) {
          const std::uint64_t idx =
              pair_index(cand[a], cand[b], num_nodes_);
          candidate_pairs_.push_back(static_cast<std::uint32_t>(idx));
          pair_members_[idx].push_back(ordinal);
        }
      }
      ++ordinal;
    });
    internal_weight_buf_.assign(candidate_count_, 0);
  }

  std::pair<std::uint64_t, std::uint64_t> admissible_starts(
      std::uint64_t t) const {
    if (t < config_.min_lookback) return {1, 0};  // empty
    const std::uint64_t k_high = t - config_.min_lookback + 1;
    const std::uint64_t k_low =
        t >= config_.max_lookback ? t - config_.max_lookback + 1 : 1;
    return {k_low, k_high};
  }

  GlrStepResult scan_windows(bool decision_only) {
    const std::uint64_t t = counts_.horizon();
    GlrStepResult result;
    result.time = t;
    const auto [k_low, k_high] = admissible_starts(t);
    if (k_low > k_high) return result;
    result.evaluated = true;

    for (std::uint64_t k = k_low; k <= k_high; ++k) {
      counts_.window_counts_into(k, t, window_buf_);
      const std::uint64_t window_len = t - k + 1;
      WindowBest best = config_.scan_mode == ScanMode::kExhaustive
                            ? scan_exhaustive(window_len)
                            : scan_greedy(window_len);
      if (best.statistic > result.statistic) {
        result.statistic = best.statistic;
        result.change_point_estimate = k;
        result.subgraph_estimate = std::move(best.subgraph);
        result.p1_estimate = best.p1_estimate;
        if (decision_only && result.statistic > config_.threshold) break;
      }
    }
    result.alarm = result.statistic > config_.threshold;
    return result;
  }

  struct WindowBest {
    double statistic = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> subgraph;
    double p1_estimate = std::numeric_limits<double>::quiet_NaN();
  };

  WindowBest scan_exhaustive(std::uint64_t window_len) {
    accumulate_internal_weights();
    const std::uint64_t slots = window_len * num_cand_pairs_;
    WindowBest best;
    std::uint32_t best_ord = 0;
    if (config_.p1_mode == P1Mode::kKnown) {
      const bool dense = weights_->w_present > weights_->w_absent;
      std::int64_t best_signed = 0;
      bool found = false;
      for (std::uint32_t c = 0; c < candidate_count_; ++c) {
        if (config_.connected_candidates_only && !candidate_connected(c)) {
          continue;
        }
        const std::int64_t w = dense ? internal_weight_buf_[c]
                                     : -internal_weight_buf_[c];
        if (!found || w > best_signed) {
          found = true;
          best_signed = w;
          best_ord = c;
        }
      }
      if (!found) {
        // Connectivity filter rejected every candidate in this window;
        // fall back to the unrestricted family.
        std::int64_t w0 = internal_weight_buf_[0];
        best_signed = dense ? w0 : -w0;
        best_ord = 0;
        for (std::uint32_t c = 1; c < candidate_count_; ++c) {
          const std::int64_t w = dense ? internal_weight_buf_[c]
                                       : -internal_weight_buf_[c];
          if (w > best_signed) {
            best_signed = w;
            best_ord = c;
          }
        }
      }
      const std::int64_t w_best = internal_weight_buf_[best_ord];
      best.statistic =
          static_cast<double>(w_best) * weights_->w_present +
          static_cast<double>(slots - static_cast<std::uint64_t>(w_best)) *
              weights_->w_absent;
    } else {
      build_plugin_table(slots);
      double best_u = -std::numeric_limits<double>::infinity();
      for (std::uint32_t c = 0; c < candidate_count_; ++c) {
        if (config_.connected_candidates_only && !candidate_connected(c)) {
          continue;
        }
        const double u = plugin_table_[static_cast<std::size_t>(
            internal_weight_buf_[c])];
        if (u > best_u) {
          best_u = u;
          best_ord = c;
        }
      }
      if (best_u == -std::numeric_limits<double>::infinity()) {
        for (std::uint32_t c = 0; c < candidate_count_; ++c) {
          const double u = plugin_table_[static_cast<std::size_t>(
              internal_weight_buf_[c])];
          if (u > best_u) {
            best_u = u;
            best_ord = c;
          }
        }
      }
      best.statistic = best_u;
      best.p1_estimate = clamped_rate(
          static_cast<std::uint64_t>(internal_weight_buf_[best_ord]), slots);
    }
    const std::uint32_t* nodes =
        candidate_nodes_.data() +
        static_cast<std::size_t>(best_ord) * community_size_;
    best.subgraph.assign(nodes, nodes + community_size_);
    return best;
  }

  WindowBest scan_greedy(std::uint64_t window_len) {
    WeightedPairGraph window(num_nodes_);
    for (std::size_t idx = 0; idx < window_buf_.size(); ++idx) {
      window.weights[idx] = window_buf_[idx];
    }
    const std::uint64_t slots = window_len * num_cand_pairs_;
    WindowBest best;
    if (config_.p1_mode == P1Mode::kKnown) {
      const bool dense = weights_->w_present > weights_->w_absent;
      std::vector<std::uint32_t> pick =
          dense ? greedy_densest(window, community_size_)
                : greedy_densest(window.negated(), community_size_);
      const std::int64_t w = internal_weight(window, pick);
      best.statistic =
          static_cast<double>(w) * weights_->w_present +
          static_cast<double>(slots - static_cast<std::uint64_t>(w)) *
              weights_->w_absent;
      best.subgraph = std::move(pick);
    } else {
      // With an estimated p1 the change may thin edges as well as thicken
      // them, so try the greedy pick in both directions and keep the larger
      // plug-in statistic.
      std::vector<std::uint32_t> dense_pick =
          greedy_densest(window, community_size_);
      std::vector<std::uint32_t> sparse_pick =
          greedy_densest(window.negated(), community_size_);
      const std::uint64_t w_dense =
          static_cast<std::uint64_t>(internal_weight(window, dense_pick));
      const std::uint64_t w_sparse =
          static_cast<std::uint64_t>(internal_weight(window, sparse_pick));
      const double u_dense = plugin_llr_from_counts(w_dense, slots, p0_.p,
                                                    config_.mle_clamp);
      const double u_sparse = plugin_llr_from_counts(w_sparse, slots, p0_.p,
                                                     config_.mle_clamp);
      if (u_dense >= u_sparse) {
        best.statistic = u_dense;
        best.subgraph = std::move(dense_pick);
        best.p1_estimate = clamped_rate(w_dense, slots);
      } else {
        best.statistic = u_sparse;
        best.subgraph = std::move(sparse_pick);
        best.p1_estimate = clamped_rate(w_sparse, slots);
      }
    }
    return best;
  }

  void accumulate_internal_weights() {
    std::memset(internal_weight_buf_.data(), 0,
                internal_weight_buf_.size() * sizeof(std::int32_t));
    for (std::size_t idx = 0; idx < window_buf_.size(); ++idx) {
      const std::uint32_t count = window_buf_[idx];
      if (count == 0) continue;
      for (std::uint32_t c : pair_members_[idx]) {
        internal_weight_buf_[c] += static_cast<std::int32_t>(count);
      }
    }
  }

  bool candidate_connected(std::uint32_t ordinal) const {
    const std::uint32_t* nodes =
        candidate_nodes_.data() +
        static_cast<std::size_t>(ordinal) * community_size_;
    // BFS over positive windowed counts within the candidate.
    std::uint32_t seen_mask_size = community_size_;
    std::vector<bool> seen(seen_mask_size, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
      const std::uint32_t a = stack.back();
      stack.pop_back();
      for (std::uint32_t b = 0; b < community_size_; ++b) {
        if (seen[b]) continue;
        const std::uint32_t lo = std::min(nodes[a], nodes[b]);
        const std::uint32_t hi = std::max(nodes[a], nodes[b]);
        if (window_buf_[pair_index(lo, hi, num_nodes_)] > 0) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    return reached == community_size_;
  }

  void build_plugin_table(std::uint64_t slots) {
    plugin_table_.resize(slots + 1);
    for (std::uint64_t within = 0; within <= slots; ++within) {
      plugin_table_[within] =
          plugin_llr_from_counts(within, slots, p0_.p, config_.mle_clamp);
    }
  }

  double clamped_rate(std::uint64_t within, std::uint64_t slots) const {
    double eps = config_.mle_clamp;
    if (eps == 0.0) eps = 1.0 / (2.0 * static_cast<double>(slots));
    const double rate =
        static_cast<double>(within) / static_cast<double>(slots);
    return std::min(std::max(rate, eps), 1.0 - eps);
  }

  GlrWindowConfig config_;
  std::uint32_t num_nodes_;
  std::uint32_t community_size_;
  std::uint64_t num_cand_pairs_;
  ErParams p0_;
  std::optional<LlrWeights> weights_;
  EdgeCountMatrix counts_;

  // Exhaustive-mode candidate tables.
  std::uint64_t candidate_count_ = 0;
  std::vector<std::uint32_t> candidate_nodes_;   // count x n
  std::vector<std::uint32_t> candidate_pairs_;   // count x C(n,2)
  std::vector<std::vector<std::uint32_t>> pair_members_;

  // Screening walks (known-p1 exhaustive mode only).
  std::vector<float> screen_stats_;
  std::vector<std::uint8_t> screen_edges_;
  std::vector<float> screen_edges_f_;

  // Per-step scratch.
  std::vector<std::uint32_t> window_buf_;
  std::vector<std::int32_t> internal_weight_buf_;
  std::vector<double> plugin_table_;
};

/// Exhaustive or greedy maximization of the window statistic on [k, t]:
/// the subgraph estimate once an alarm has fixed the change-point guess.
inline ScanResult localize(const EdgeCountMatrix& counts, std::uint64_t k,
                           std::uint64_t t, ScanMode scan_mode,
                           const LlrWeights& weights,
                           std::uint32_t community_size,
                           std::uint64_t cap = kDefaultEnumerationCap) {
  WeightedPairGraph window = WeightedPairGraph::from_window(counts, k, t);
  CandidateSet family =
      scan_mode == ScanMode::kExhaustive
          ? enumerate_candidates(counts.num_nodes(), community_size, cap)
          : CandidateSet(counts.num_nodes(), community_size,
                         CandidateMode::kGreedyOnly, cap);
  if (scan_mode == ScanMode::kExhaustive &&
      family.mode() != CandidateMode::kExhaustive) {
    throw std::invalid_argument(
        "exhaustive localization requested but C(N,n) exceeds the cap");
  }
  return best_subgraph(window, family, weights, t - k + 1);
}

struct StoppingOutcome {
  std::uint64_t stop_time = 0;  // alarm time, or the horizon when censored
  bool alarmed = false;
};

/// Feed a materialized stream to a detector until it alarms.
/// Returns a censored outcome at the end of the stream otherwise.
template <class Detector>
StoppingOutcome run_to_alarm(Detector& detector,
                             std::span<const GraphSnapshot> stream) {
  if (stream.empty()) {
    throw std::invalid_argument("empty stream");
  }
  std::uint64_t t = 0;
  for (const GraphSnapshot& snapshot : stream) {
    ++t;
    if (detector.advance(snapshot)) {
      return StoppingOutcome{t, true};
    }
  }
  return StoppingOutcome{t, false};
}

/// CUSUM stopping time over a materialized stream.
inline StoppingOutcome run_cusum(std::span<const GraphSnapshot> stream,
                                 CusumDetector detector) {
  return run_to_alarm(detector, stream);
}

}  // namespace graphscan
