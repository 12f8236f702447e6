#include <gtest/gtest.h>

#include <cmath>

#include "stegedge/codec.hpp"
#include "stegedge/metrics.hpp"
#include "test_support.hpp"

namespace stegedge {
namespace {

GrayImage row_of(std::vector<std::uint8_t> px) {
  const std::size_t n = px.size();
  return GrayImage(n, 1, std::move(px));
}

TEST(Mse, Examples) {
  const GrayImage a = testing::uniform_random_image(9, 9, 1);
  EXPECT_EQ(mse(a, a), 0.0);
  EXPECT_DOUBLE_EQ(mse(row_of({100}), row_of({101})), 1.0);
  EXPECT_DOUBLE_EQ(mse(row_of({0, 0}), row_of({3, 4})), 12.5);
  EXPECT_THROW(mse(row_of({1}), row_of({1, 2})), Error);
}

TEST(Psnr, Examples) {
  const GrayImage a = testing::uniform_random_image(9, 9, 2);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  EXPECT_NEAR(psnr(row_of({100}), row_of({101})), 48.1308, 1e-4);
  EXPECT_NEAR(psnr_from_mse(65025.0), 0.0, 1e-12);
  EXPECT_NEAR(psnr(row_of({0}), row_of({255})), 0.0, 1e-12);
}

TEST(Psnr, StrictlyDecreasingInMse) {
  double prev = psnr_from_mse(1e-6);
  for (double m = 1e-3; m < 70000.0; m *= 1.37) {
    const double p = psnr_from_mse(m);
    ASSERT_LT(p, prev);
    prev = p;
  }
}

TEST(ModificationRate, Examples) {
  const GrayImage a = testing::uniform_random_image(9, 9, 3);
  EXPECT_EQ(modification_rate(a, a), 0.0);
  EXPECT_DOUBLE_EQ(modification_rate(row_of({0}), row_of({255})), 8.0);
  EXPECT_DOUBLE_EQ(changed_pixel_rate(row_of({0, 5}), row_of({255, 5})), 0.5);
}

TEST(ModificationRate, MatchesPopcountOracleAndIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GrayImage a = testing::uniform_random_image(11, 7, seed);
    const GrayImage b = testing::uniform_random_image(11, 7, seed + 99);
    std::size_t bits = 0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      for (int k = 0; k < 8; ++k) bits += ((a.pixels()[n] >> k) & 1) != ((b.pixels()[n] >> k) & 1) ? 1 : 0;
    }
    EXPECT_DOUBLE_EQ(modification_rate(a, b), static_cast<double>(bits) / 77.0);
    EXPECT_EQ(modification_rate(a, b), modification_rate(b, a));
    EXPECT_LE(modification_rate(a, b), 8.0);
  }
}

TEST(EmbeddingRate, Examples) {
  const GrayImage img(256, 256);
  EXPECT_EQ(embedding_rate(0, img).bits_per_pixel, 0.0);
  const EmbeddingRate ten = embedding_rate(6554, img);
  EXPECT_NEAR(ten.bits_per_pixel, 0.1, 1e-4);
  EXPECT_NEAR(ten.percent, 10.0, 1e-2);
  EXPECT_DOUBLE_EQ(embedding_rate(65536, img).bits_per_pixel, 1.0);

  EmbedReport report;
  report.bits_embedded = 6554;
  EXPECT_DOUBLE_EQ(embedding_rate(report, img).bits_per_pixel, 6554.0 / 65536.0);
}

TEST(QualityReport, CombinesMeasures) {
  const GrayImage a = row_of({10, 20, 30, 40});
  const GrayImage b = row_of({11, 20, 30, 40});
  const QualityReport q = quality_report(a, b, 2);
  EXPECT_DOUBLE_EQ(q.mse, 0.25);
  EXPECT_DOUBLE_EQ(q.psnr, psnr_from_mse(0.25));
  EXPECT_DOUBLE_EQ(q.modification_rate, 0.25);
  ASSERT_TRUE(q.embedding_rate.has_value());
  EXPECT_DOUBLE_EQ(q.embedding_rate->bits_per_pixel, 0.5);
  EXPECT_TRUE(std::isinf(quality_report(a, a).psnr));
}

}  // namespace
}  // namespace stegedge
