#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "freqspec/sampler.hpp"
#include "oracles.hpp"
#include "path_walk.hpp"

namespace freqspec {
namespace {

using Branching = std::vector<std::uint32_t>;

TEST(PathEstimateTree, Examples) {
  EXPECT_EQ(path_estimate_tree(Branching{}), 1.0);
  EXPECT_EQ(path_estimate_tree(Branching{3, 2}), 10.0);
}

// Builds a regular tree node by node and counts the nodes.
std::size_t regular_tree_size(std::uint32_t b, std::size_t h) {
  struct Node {
    std::vector<Node> children;
  };
  std::function<void(Node&, std::size_t)> grow = [&](Node& n, std::size_t depth) {
    if (depth == h) return;
    n.children.resize(b);
    for (auto& c : n.children) grow(c, depth + 1);
  };
  std::function<std::size_t(const Node&)> count = [&](const Node& n) {
    std::size_t total = 1;
    for (const auto& c : n.children) total += count(c);
    return total;
  };
  Node root;
  grow(root, 0);
  return count(root);
}

TEST(PathEstimateTree, RegularTreeEstimateIsItsSize) {
  for (std::uint32_t b = 1; b <= 3; ++b) {
    for (std::size_t h = 0; h <= 4; ++h) {
      const Branching d(h, b);
      EXPECT_EQ(path_estimate_tree(d), static_cast<double>(regular_tree_size(b, h)))
          << "b=" << b << " h=" << h;
    }
  }
}

TEST(PathEstimateLattice, Examples) {
  EXPECT_EQ(path_estimate_lattice(Branching{}), 1.0);
  EXPECT_EQ(path_estimate_lattice(Branching{3}), 4.0);
  EXPECT_EQ(path_estimate_lattice(Branching{2, 1}), 4.0);
}

TEST(PathEstimateLattice, FullLatticeWalkCountsEverySubset) {
  // n items, all frequent together: d = (n, n-1, ..., 1), estimate 2^n.
  for (std::uint32_t n = 0; n <= 20; ++n) {
    Branching d;
    for (std::uint32_t k = n; k >= 1; --k) d.push_back(k);
    EXPECT_NEAR(path_estimate_lattice(d), std::ldexp(1.0, static_cast<int>(n)), 1e-9 * std::ldexp(1.0, static_cast<int>(n)));
  }
}

TEST(PathEstimateLattice, NeverExceedsTreeEstimate) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 2000; ++trial) {
    Branching d(1 + gen() % 8);
    for (auto& x : d) x = 1 + static_cast<std::uint32_t>(gen() % 6);
    const double lat = path_estimate_lattice(d);
    const double tree = path_estimate_tree(d);
    if (d.size() == 1) {
      EXPECT_EQ(lat, tree);
    } else {
      EXPECT_LT(lat, tree);
    }
  }
}

TEST(SamplePath, SingleColumn) {
  const auto db = parse_fimi_text("1\n1\n1\n1\n1\n");
  for (std::uint64_t s = 0; s < 20; ++s) {
    PathRng rng(s);
    const auto p = sample_path(db, 3, rng);
    EXPECT_EQ(p.branching, Branching{1});
    EXPECT_EQ(p.estimate, 2.0);
  }
}

TEST(SamplePath, CorrelatedPairIsZeroVariance) {
  const auto db = testing::correlated_pair_db();
  for (std::uint64_t s = 0; s < 50; ++s) {
    PathRng rng(s);
    const auto p = sample_path(db, 2, rng);
    EXPECT_EQ(p.branching, (Branching{2, 1}));
    EXPECT_EQ(p.estimate, 4.0);
  }
}

TEST(SamplePath, NothingFrequentGivesRootOnly) {
  const auto db = parse_fimi_text("1\n2\n3\n");
  PathRng rng(1);
  const auto p = sample_path(db, 2, rng);
  EXPECT_TRUE(p.branching.empty());
  EXPECT_EQ(p.depth(), 0u);
  EXPECT_EQ(p.estimate, 1.0);
}

TEST(SamplePath, RejectsThresholdOutsideRows) {
  const auto db = parse_fimi_text("1\n2\n3\n");
  PathRng rng(1);
  EXPECT_THROW((void)sample_path(db, 0, rng), std::invalid_argument);
  EXPECT_THROW((void)sample_path(db, 4, rng), std::invalid_argument);
  EXPECT_NO_THROW((void)sample_path(db, 3, rng));
}

TEST(SamplePath, PathsAreReplayableAndEndOnTheBorder) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = testing::random_rows(gen, 2 + gen() % 30, 2 + gen() % 10, 0.5);
    const auto db = parse_fimi_text(testing::rows_to_fimi(rows));
    const std::size_t sigma = 1 + gen() % db.n_rows();
    PathRng rng(gen());
    const auto p = sample_path(db, sigma, rng);
    ASSERT_EQ(p.items.size(), p.branching.size());
    for (auto d : p.branching) EXPECT_GE(d, 1u);
    EXPECT_EQ(p.estimate, path_estimate_lattice(p.branching));
    EXPECT_GE(p.estimate, 1.0);
    EXPECT_EQ(replay_branching(db, sigma, p.items), p.branching);

    // The final itemset is frequent and has no frequent extension.
    BitVector mask = db.all_rows();
    for (auto j : p.items) mask &= db.column(j);
    EXPECT_GE(mask.count(), sigma);
    std::vector<ColumnIndex> rest;
    for (ColumnIndex j = 0; j < db.n_attrs(); ++j) {
      if (std::find(p.items.begin(), p.items.end(), j) == p.items.end()) rest.push_back(j);
    }
    EXPECT_TRUE(frequent_extensions(db, mask, rest, sigma).empty());
  }
}

TEST(SamplePath, MaximumDepthIsNonIncreasingInSigma) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rows = testing::random_rows(gen, 4 + gen() % 12, 5, 0.5);
    std::size_t prev = SIZE_MAX;
    for (std::size_t sigma = 1; sigma <= rows.size(); ++sigma) {
      const std::size_t depth = testing::exhaustive_max_depth(rows, sigma);
      EXPECT_LE(depth, prev);
      prev = depth;
    }
  }
}

TEST(SamplePath, ExpectationEqualsExactCountOnSmallDatabases) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rows = testing::random_rows(gen, 1 + gen() % 16, 1 + gen() % 5, 0.5);
    for (std::size_t sigma = 1; sigma <= rows.size(); ++sigma) {
      const double truth = static_cast<double>(testing::brute_count(rows, sigma));
      EXPECT_NEAR(testing::exhaustive_path_expectation(rows, sigma), truth, 1e-9);
      const auto db = parse_fimi_text(testing::rows_to_fimi(rows));
      EXPECT_NEAR(testing::sampler_expectation(db, sigma), truth, 1e-9);
    }
  }
}

TEST(SamplePath, EmpiricalFrequenciesOfFirstStepAreUniform) {
  // Four always-present items: the first step picks each with p = 1/4.
  const auto db = parse_fimi_text("1 2 3 4\n1 2 3 4\n");
  std::array<int, 4> hits{};
  constexpr int kPaths = 40'000;
  for (int k = 0; k < kPaths; ++k) {
    PathRng rng = derive_path_rng(3, static_cast<std::uint64_t>(k));
    const auto p = sample_path(db, 1, rng);
    ASSERT_EQ(p.branching, (Branching{4, 3, 2, 1}));
    ++hits[p.items.front()];
  }
  // sd = sqrt(40000 * 1/4 * 3/4) ~ 86.6; allow 5 sd.
  for (int h : hits) EXPECT_NEAR(h, kPaths / 4, 433);
}

}  // namespace
}  // namespace freqspec
