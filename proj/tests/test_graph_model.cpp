#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"

#include "graphscan/graph.hpp"
#include "graphscan/random.hpp"
#include "graphscan/sampling.hpp"
#include "graphscan/scenario.hpp"
#include "graphscan/snapshot_io.hpp"

namespace {

using namespace graphscan;

TEST(PairIndex, RowMajorOrderRoundTrips) {
  const std::uint32_t N = 9;
  std::uint64_t expected = 0;
  for (std::uint32_t i = 0; i + 1 < N; ++i) {
    for (std::uint32_t j = i + 1; j < N; ++j, ++expected) {
      EXPECT_EQ(pair_index(i, j, N), expected);
      const auto [a, b] = pair_from_index(expected, N);
      EXPECT_EQ(a, i);
      EXPECT_EQ(b, j);
    }
  }
  EXPECT_EQ(expected, pair_count(N));
}

TEST(GraphSnapshot, SymmetricQueriesAndValidation) {
  GraphSnapshot g(5);
  EXPECT_FALSE(g.has_edge(1, 3));
  g.set_edge(3, 1);  // reversed order accepted
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_EQ(g.edge_count(), 1u);
  g.set_edge(1, 3, false);
  EXPECT_EQ(g.edge_count(), 0u);

  EXPECT_THROW(g.has_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.set_edge(0, 5), std::out_of_range);
  EXPECT_THROW(GraphSnapshot(1), std::invalid_argument);
}

TEST(EdgeCountWithin, KnownValues) {
  GraphSnapshot empty(8);
  const std::vector<std::uint32_t> v123{1, 2, 3};
  EXPECT_EQ(edge_count_within(empty, v123), 0u);

  GraphSnapshot complete(6);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = i + 1; j < 6; ++j) complete.set_edge(i, j);
  }
  const std::vector<std::uint32_t> four{0, 2, 3, 5};
  EXPECT_EQ(edge_count_within(complete, four), 6u);

  GraphSnapshot g(5);
  g.set_edge(0, 1);
  g.set_edge(1, 2);
  g.set_edge(3, 4);
  const std::vector<std::uint32_t> v012{0, 1, 2};
  EXPECT_EQ(edge_count_within(g, v012), 2u);

  const std::vector<std::uint32_t> dup{0, 0, 1};
  EXPECT_THROW(edge_count_within(g, dup), std::invalid_argument);
  const std::vector<std::uint32_t> oob{0, 9};
  EXPECT_THROW(edge_count_within(g, oob), std::out_of_range);
}

TEST(SampleEr, RejectsDegenerateSizes) {
  RandomSource rng(1);
  EXPECT_THROW(sample_er(1, ErParams(0.5), rng), std::invalid_argument);
  EXPECT_THROW(ErParams(0.0), std::invalid_argument);
  EXPECT_THROW(ErParams(1.0), std::invalid_argument);
}

TEST(SampleEr, VanishingProbabilityYieldsEmptyGraph) {
  RandomSource rng(42);
  const GraphSnapshot g = sample_er(2, ErParams(1e-12), rng);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(SampleEr, SameSeedSameGraph) {
  RandomSource a(123456);
  RandomSource b(123456);
  const GraphSnapshot ga = sample_er(5, ErParams(0.5), a);
  const GraphSnapshot gb = sample_er(5, ErParams(0.5), b);
  EXPECT_EQ(ga, gb);
}

TEST(SampleEr, MeanEdgeCountMatchesBinomial) {
  // N=20, p=0.2: per-sample mean 38, sd sqrt(190*0.16); the mean over 1e5
  // samples must land in the 3-sigma band.
  const std::uint64_t reps = 100000;
  RandomSource rng(2024);
  double total = 0.0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    total += static_cast<double>(sample_er(20, ErParams(0.2), rng).edge_count());
  }
  const double mean = total / static_cast<double>(reps);
  const double sd_single = std::sqrt(190.0 * 0.2 * 0.8);
  const double band = 3.0 * sd_single / std::sqrt(static_cast<double>(reps));
  EXPECT_NEAR(mean, 38.0, band);
}

TEST(SampleEr, FixedPairFrequencyPassesChiSquare) {
  // Chi-square test with one degree of freedom at significance 1e-3.
  const std::uint64_t reps = 100000;
  const double p = 0.2;
  RandomSource rng(7);
  std::uint64_t hits_03 = 0;
  std::uint64_t hits_57 = 0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    const GraphSnapshot g = sample_er(8, ErParams(p), rng);
    if (g.has_edge(0, 3)) ++hits_03;
    if (g.has_edge(5, 7)) ++hits_57;
  }
  const double crit = 10.828;  // chi2_1 quantile at 1 - 1e-3
  for (const std::uint64_t hits : {hits_03, hits_57}) {
    const double expected = p * static_cast<double>(reps);
    const double diff = static_cast<double>(hits) - expected;
    const double chi2 = diff * diff / (expected * (1.0 - p));
    EXPECT_LT(chi2, crit);
  }
}

TEST(ChangeScenario, ValidatesFields) {
  EXPECT_THROW(ChangeScenario(5, {0, 1, 2, 3, 4}, ErParams(0.2), ErParams(0.5),
                              1),
               std::invalid_argument);  // n == N
  EXPECT_THROW(ChangeScenario(5, {0}, ErParams(0.2), ErParams(0.5), 1),
               std::invalid_argument);  // n < 2
  EXPECT_THROW(ChangeScenario(5, {0, 7}, ErParams(0.2), ErParams(0.5), 1),
               std::out_of_range);
  EXPECT_THROW(ChangeScenario(5, {0, 0}, ErParams(0.2), ErParams(0.5), 1),
               std::invalid_argument);
  EXPECT_THROW(ChangeScenario(5, {0, 1}, ErParams(0.2), ErParams(0.5), 0),
               std::invalid_argument);  // tau is 1-based
  // A finite change point with p1 == p0 describes no change: rejected.
  EXPECT_THROW(ChangeScenario(5, {0, 1}, ErParams(0.5), ErParams(0.5), 1),
               std::invalid_argument);
  // Under tau = infinity equal probabilities are fine.
  EXPECT_NO_THROW(ChangeScenario(5, {0, 1}, ErParams(0.5), ErParams(0.5),
                                 kTauInfinity));
  // Planted list is sorted on construction.
  const ChangeScenario s(6, {4, 1, 2}, ErParams(0.2), ErParams(0.5), 3);
  EXPECT_EQ(s.planted_subgraph, (std::vector<std::uint32_t>{1, 2, 4}));
}

TEST(SampleSequence, NullRegimeMatchesPlainErDraws) {
  const ChangeScenario null_scn(12, {2, 5, 9}, ErParams(0.3), ErParams(0.6),
                                kTauInfinity);
  const std::uint64_t seed = 99;
  const auto sequence = sample_sequence(null_scn, 10, RandomSource(seed));
  RandomSource rng(seed);
  for (const GraphSnapshot& snapshot : sequence) {
    EXPECT_EQ(snapshot, sample_er(12, ErParams(0.3), rng));
  }
}

TEST(SampleSequence, PureFunctionOfScenarioHorizonSeed) {
  const ChangeScenario scn(10, {0, 3, 7}, ErParams(0.2), ErParams(0.7), 4);
  const auto a = sample_sequence(scn, 20, RandomSource(5));
  const auto b = sample_sequence(scn, 20, RandomSource(5));
  EXPECT_EQ(a, b);
}

TEST(SampleSequence, PlantedEdgesIntensifyAfterChange) {
  // tau=1, n=5, p1=0.5: mean within-community edge count per snapshot is
  // C(5,2) * 0.5 = 5.
  const ChangeScenario scn(20, {0, 1, 2, 3, 4}, ErParams(0.2), ErParams(0.5),
                           1);
  const std::uint64_t reps = 100000;
  SequenceSampler sampler(scn, RandomSource(31));
  double total = 0.0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    total += static_cast<double>(
        edge_count_within(sampler.next(), scn.planted_subgraph));
  }
  const double mean = total / static_cast<double>(reps);
  const double band =
      3.0 * std::sqrt(10.0 * 0.25) / std::sqrt(static_cast<double>(reps));
  EXPECT_NEAR(mean, 5.0, band);
}

TEST(SampleSequence, OutsidePairsUnaffectedByChange) {
  // Two-sample proportion test (|z| < 3.29, significance ~1e-3) for pairs
  // with an endpoint outside the planted set; the inside pair must shift.
  const std::uint64_t half = 4000;
  const ChangeScenario scn(10, {0, 1, 2}, ErParams(0.3), ErParams(0.8),
                           half + 1);
  SequenceSampler sampler(scn, RandomSource(77));
  std::uint64_t outside_pre = 0, outside_post = 0;
  std::uint64_t boundary_pre = 0, boundary_post = 0;
  std::uint64_t inside_pre = 0, inside_post = 0;
  for (std::uint64_t t = 1; t <= 2 * half; ++t) {
    const GraphSnapshot g = sampler.next();
    const bool pre = t <= half;
    (pre ? outside_pre : outside_post) += g.has_edge(5, 8) ? 1 : 0;
    (pre ? boundary_pre : boundary_post) += g.has_edge(2, 9) ? 1 : 0;
    (pre ? inside_pre : inside_post) += g.has_edge(0, 2) ? 1 : 0;
  }
  const auto z_stat = [&](std::uint64_t a, std::uint64_t b) {
    const double pa = static_cast<double>(a) / static_cast<double>(half);
    const double pb = static_cast<double>(b) / static_cast<double>(half);
    const double pool = 0.5 * (pa + pb);
    return (pa - pb) /
           std::sqrt(pool * (1.0 - pool) * 2.0 / static_cast<double>(half));
  };
  EXPECT_LT(std::abs(z_stat(outside_pre, outside_post)), 3.29);
  EXPECT_LT(std::abs(z_stat(boundary_pre, boundary_post)), 3.29);
  EXPECT_GT(std::abs(z_stat(inside_pre, inside_post)), 10.0);
}

TEST(SnapshotIo, WriteReadRoundTrip) {
  const ChangeScenario scn(7, {1, 2, 6}, ErParams(0.4), ErParams(0.7), 2);
  const auto sequence = sample_sequence(scn, 6, RandomSource(3));
  std::ostringstream out;
  write_sequence(out, sequence);

  std::istringstream in(out.str());
  const auto parsed = read_sequence(in);
  ASSERT_EQ(parsed.size(), sequence.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i], sequence[i]);
  }

  // Re-serialization reproduces the bytes exactly.
  std::ostringstream again;
  write_sequence(again, parsed);
  EXPECT_EQ(again.str(), out.str());
}

TEST(SnapshotIo, RejectsMalformedBlocksWithLineNumbers) {
  const auto expect_error_at = [](const std::string& text,
                                  std::uint64_t line) {
    std::istringstream in(text);
    SnapshotReader reader(in);
    GraphSnapshot g(2);
    try {
      while (reader.next(g)) {
      }
      FAIL() << "expected a parse error";
    } catch (const SnapshotParseError& e) {
      EXPECT_EQ(e.line, line);
    }
  };

  expect_error_at("1 4\n2 1\n\n", 2);          // i >= j
  expect_error_at("1 4\n0 9\n\n", 2);          // index out of range
  expect_error_at("1 4\n0 1\n\n3 4\n\n", 4);   // non-monotone block time
  expect_error_at("zero 4\n", 1);              // malformed header
  expect_error_at("1 4\n0 1 7\n\n", 2);        // trailing tokens
  expect_error_at("1 4\n\n1 4\n\n", 3);        // duplicate time
}

TEST(SnapshotIo, ToleratesMissingTrailingBlankLine) {
  std::istringstream in("1 4\n0 2\n\n2 4\n1 3");
  const auto parsed = read_sequence(in);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_TRUE(parsed[0].has_edge(0, 2));
  EXPECT_TRUE(parsed[1].has_edge(1, 3));
}

TEST(RandomSource, DerivedStreamsAreStable) {
  RandomSource a = RandomSource::derived(10, 0);
  RandomSource b = RandomSource::derived(10, 1);
  RandomSource a_again = RandomSource::derived(10, 0);
  EXPECT_NE(a.next_u64(), b.next_u64());
  RandomSource a2 = RandomSource::derived(10, 0);
  EXPECT_EQ(a_again.next_u64(), a2.next_u64());
}

}  // namespace
