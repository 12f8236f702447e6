#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stegedge/capacity.hpp"
#include "test_support.hpp"

namespace stegedge {
namespace {

EdgeMap zero_map(std::size_t w, std::size_t h) { return EdgeMap{w, h, std::vector<std::uint16_t>(w * h, 0)}; }

// Random map with a long-tailed value distribution and zero borders.
EdgeMap random_map(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeMap m = zero_map(w, h);
  for (std::size_t i = 1; i < h; ++i) {
    for (std::size_t j = 1; j < w; ++j) {
      const auto r = rng();
      m.values[i * w + j] = static_cast<std::uint16_t>((r % 4 == 0) ? (r >> 8) % 511 : (r >> 8) % 70);
    }
  }
  return m;
}

std::size_t brute_m_set(const EdgeMap& m, int p, int k) {
  const int bound = 1 << (3 + k);
  std::size_t n = 0;
  for (std::size_t idx = 0; idx < m.values.size(); ++idx) {
    const std::size_t i = idx / m.width;
    const std::size_t j = idx % m.width;
    if (i == 0 || j == 0) continue;
    if (m.values[idx] >= p && m.values[idx] < bound) ++n;
  }
  return n;
}

// Exhaustive argmax over the parameter range using the counting oracle.
int brute_threshold(const EdgeMap& m, int k, std::size_t need, bool& shortfall) {
  const int lo = k == 1 ? 0 : (k == 2 ? 16 : 32);
  const int hi = k == 1 ? 15 : (k == 2 ? 31 : 63);
  int best = -1;
  for (int p = lo; p <= hi; ++p) {
    if (brute_m_set(m, p, k) >= need) best = p;
  }
  shortfall = best < 0;
  return best < 0 ? lo : best;
}

TEST(SplitPayload, Examples) {
  EXPECT_EQ(split_payload(100), (PayloadSplit{60, 30, 10}));
  EXPECT_EQ(split_payload(10), (PayloadSplit{6, 3, 1}));
  EXPECT_EQ(split_payload(7), (PayloadSplit{4, 2, 1}));
  EXPECT_EQ(split_payload(1), (PayloadSplit{0, 0, 1}));
  EXPECT_THROW(split_payload(0), Error);
}

TEST(SplitPayload, SumAndFloors) {
  for (std::size_t n = 1; n < 5000; ++n) {
    const PayloadSplit s = split_payload(n);
    ASSERT_EQ(s.total(), n);
    ASSERT_EQ(s.len1, static_cast<std::size_t>(std::floor(0.6 * static_cast<double>(n) + 1e-9)));
    ASSERT_EQ(s.len2, static_cast<std::size_t>(std::floor(0.3 * static_cast<double>(n) + 1e-9)));
  }
}

TEST(MSetSize, Examples) {
  const EdgeMap zeros = zero_map(10, 6);
  EXPECT_EQ(m_set_size(zeros, 0, 1), 9u * 5u);
  EXPECT_EQ(m_set_size(zeros, 1, 1), 0u);
  EXPECT_THROW(m_set_size(zeros, 16, 1), Error);
  EXPECT_THROW(m_set_size(zeros, 15, 2), Error);
  EXPECT_THROW(m_set_size(zeros, 64, 3), Error);
  EXPECT_THROW(m_set_size(zeros, 0, 4), Error);
}

TEST(MSetSize, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EdgeMap m = random_map(13 + seed % 5, 11 + seed % 3, seed);
    for (int k = 1; k <= 3; ++k) {
      const int lo = k == 1 ? 0 : (k == 2 ? 16 : 32);
      const int hi = k == 1 ? 15 : (k == 2 ? 31 : 63);
      for (int p = lo; p <= hi; ++p) ASSERT_EQ(m_set_size(m, p, k), brute_m_set(m, p, k));
    }
  }
}

TEST(SelectThresholds, LargestQualifyingParameter) {
  EdgeMap m = zero_map(33, 33);
  std::size_t placed = 0;
  for (std::size_t i = 1; i < 33; ++i) {
    for (std::size_t j = 1; j < 33; ++j) {
      if (placed++ < 1000) m.values[i * 33 + j] = 8;
    }
  }
  const ThresholdSelection sel = select_thresholds(m, PayloadSplit{500, 0, 0});
  EXPECT_EQ(sel.thresholds.t1, 8);
  EXPECT_FALSE(sel.shortfall[0]);
  bool shortfall = false;
  EXPECT_EQ(brute_threshold(m, 1, 500, shortfall), 8);
}

TEST(SelectThresholds, EmptyDemandPicksRangeTops) {
  const ThresholdSelection sel = select_thresholds(zero_map(5, 5), PayloadSplit{0, 0, 0});
  EXPECT_EQ(sel.thresholds, (Thresholds{15, 31, 63}));
  EXPECT_FALSE(sel.any_shortfall());
}

TEST(SelectThresholds, ShortfallFallsBackToRangeMinimum) {
  const ThresholdSelection sel = select_thresholds(zero_map(5, 5), PayloadSplit{0, 0, 1});
  EXPECT_EQ(sel.thresholds.t3, 32);
  EXPECT_TRUE(sel.shortfall[2]);
  EXPECT_FALSE(sel.shortfall[0]);
}

TEST(SelectThresholds, MatchesExhaustiveScan) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const EdgeMap m = random_map(24, 20, seed);
    std::mt19937_64 rng(seed + 100);
    const PayloadSplit split{rng() % 400, rng() % 120, rng() % 60};
    const ThresholdSelection sel = select_thresholds(m, split);
    bool s1 = false, s2 = false, s3 = false;
    EXPECT_EQ(sel.thresholds.t1, brute_threshold(m, 1, split.len1, s1));
    EXPECT_EQ(sel.thresholds.t2, brute_threshold(m, 2, split.len2, s2));
    EXPECT_EQ(sel.thresholds.t3, brute_threshold(m, 3, split.len3, s3));
    EXPECT_EQ(sel.shortfall, (std::array<bool, 3>{s1, s2, s3}));
  }
}

TEST(SelectThresholds, MonotoneInDemand) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EdgeMap m = random_map(30, 30, seed);
    Thresholds prev{15, 31, 63};
    for (std::size_t need = 0; need < 900; need += 7) {
      const Thresholds th = select_thresholds(m, PayloadSplit{need, need, need}).thresholds;
      ASSERT_LE(th.t1, prev.t1);
      ASSERT_LE(th.t2, prev.t2);
      ASSERT_LE(th.t3, prev.t3);
      prev = th;
    }
  }
}

TEST(BlockCapacity, Examples) {
  EXPECT_EQ(block_capacity(zero_map(16, 16), 0, 0, 8, Thresholds{1, 16, 32}), 0u);

  EdgeMap m = zero_map(4, 4);
  const Thresholds th{3, 20, 40};
  m.values[1 * 4 + 1] = 3;
  m.values[1 * 4 + 2] = 20;
  m.values[2 * 4 + 1] = 40;
  m.values[2 * 4 + 2] = 140;
  m.values[0 * 4 + 1] = 500;  // border, ignored
  EXPECT_EQ(block_capacity(m, 0, 0, 4, th), 1u + 2u + 3u + 3u);
}

TEST(BlockCapacity, TruncatedEdgeBlock) {
  // 10 wide, z = 8: the right-hand block holds only columns 8..9.
  EdgeMap m = zero_map(10, 3);
  for (std::size_t i = 1; i < 3; ++i) {
    for (std::size_t j = 1; j < 10; ++j) m.values[i * 10 + j] = 5;
  }
  const Thresholds th{5, 16, 32};
  EXPECT_EQ(block_capacity(m, 0, 8, 8, th), 2u * 2u);
  EXPECT_EQ(block_capacity(m, 0, 0, 8, th), 2u * 7u);
  EXPECT_EQ(total_capacity(m, th).total(), 2u * 9u);
}

TEST(RegionPlan, EmptyDemandIsEmptyPlan) {
  const RegionPlan plan = build_region_plan(zero_map(8, 8), 4, Thresholds{}, PayloadSplit{0, 0, 0});
  EXPECT_TRUE(plan.ordered_pixels.empty());
}

TEST(RegionPlan, StopsAtBlockWhereDemandIsMet) {
  EdgeMap m = zero_map(8, 8);
  const std::vector<std::pair<int, int>> spots{{1, 1}, {2, 2}, {3, 3}, {1, 5}, {2, 6},
                                               {4, 1}, {5, 2}, {6, 3}, {5, 5}, {6, 6}};
  for (auto [r, c] : spots) m.values[static_cast<std::size_t>(r * 8 + c)] = 8;
  const Thresholds th{5, 16, 32};

  const RegionPlan plan = build_region_plan(m, 4, th, PayloadSplit{6, 0, 0});
  std::vector<PlanPixel> expected;
  for (std::size_t n = 0; n < 8; ++n) {
    expected.push_back(PlanPixel{static_cast<std::uint32_t>(spots[n].first),
                                 static_cast<std::uint32_t>(spots[n].second), 1});
  }
  EXPECT_EQ(plan.ordered_pixels, expected);
  EXPECT_EQ(plan.per_case_counts, (std::array<std::size_t, 3>{8, 0, 0}));
  EXPECT_EQ(build_region_plan(m, 4, th, PayloadSplit{6, 0, 0}), plan);
}

TEST(RegionPlan, InsufficientCapacityCarriesAvailable) {
  EdgeMap m = zero_map(8, 8);
  m.values[9] = 8;
  try {
    build_region_plan(m, 4, Thresholds{5, 16, 32}, PayloadSplit{0, 0, 1});
    FAIL() << "expected InsufficientCapacity";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientCapacity);
    EXPECT_EQ(e.available().case1_bits, 1u);
    EXPECT_EQ(e.available().case3_bits, 0u);
  }
  EXPECT_THROW(build_region_plan(m, 0, Thresholds{}, PayloadSplit{1, 0, 0}), Error);
}

TEST(RegionPlan, PropertiesOnRandomMaps) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const EdgeMap m = random_map(40, 36, seed);
    std::mt19937_64 rng(seed);
    const PayloadSplit split = split_payload(1 + rng() % 1500);
    const ThresholdSelection sel = select_thresholds(m, split);
    const std::size_t z = 1 + rng() % 12;
    RegionPlan plan;
    try {
      plan = build_region_plan(m, z, sel.thresholds, split);
    } catch (const CapacityError&) {
      // No shortfall means every class fits on its own.
      ASSERT_TRUE(sel.any_shortfall()) << "seed " << seed;
      continue;
    }
    ASSERT_EQ(build_region_plan(m, z, sel.thresholds, split), plan);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::array<std::size_t, 3> counts{};
    for (const PlanPixel& px : plan.ordered_pixels) {
      ASSERT_GE(px.row, 1u);
      ASSERT_GE(px.col, 1u);
      ASSERT_TRUE(seen.insert({px.row, px.col}).second);
      ASSERT_EQ(px.case_label, classify(m.at(px.row, px.col), sel.thresholds));
      ++counts[px.case_label - 1u];
    }
    EXPECT_EQ(counts, plan.per_case_counts);
    EXPECT_GE(counts[0], split.len1);
    EXPECT_GE(counts[1] * 2, split.len2);
    EXPECT_GE(counts[2] * 3, split.len3);
  }
}

TEST(RegionPlan, OrderIsBlockRasterThenPixelRaster) {
  // t1 = 0 makes every interior pixel eligible; demanding all of them as
  // case-1 bits forces a full scan.
  const EdgeMap m = zero_map(20, 20);
  const std::size_t z = 6;
  const RegionPlan plan = build_region_plan(m, z, Thresholds{0, 16, 32}, PayloadSplit{19 * 19, 0, 0});
  ASSERT_EQ(plan.ordered_pixels.size(), 19u * 19u);
  auto key = [z](const PlanPixel& p) { return std::tuple(p.row / z, p.col / z, p.row, p.col); };
  for (std::size_t n = 1; n < plan.ordered_pixels.size(); ++n) {
    ASSERT_LT(key(plan.ordered_pixels[n - 1]), key(plan.ordered_pixels[n]));
  }
  EXPECT_THROW(build_region_plan(m, z, Thresholds{0, 16, 32}, PayloadSplit{19 * 19 + 1, 0, 0}), CapacityError);
}

}  // namespace
}  // namespace stegedge
