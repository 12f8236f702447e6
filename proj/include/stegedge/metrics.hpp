#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "stegedge/image.hpp"

namespace stegedge {

struct EmbedReport;

inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct EmbeddingRate {
  double bits_per_pixel = 0.0;
  double percent = 0.0;
};

struct QualityReport {
  double mse = 0.0;
  double psnr = kInfinitePsnr;  // infinite iff mse == 0
  double modification_rate = 0.0;
  std::optional<EmbeddingRate> embedding_rate;
};

double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / MSE); kInfinitePsnr for identical images.
double psnr(const GrayImage& a, const GrayImage& b);
double psnr_from_mse(double mse) noexcept;

/// Differing bit positions over all eight planes.
std::size_t flipped_bits(const GrayImage& a, const GrayImage& b);

/// Flipped bits per pixel, in [0, 8].
double modification_rate(const GrayImage& a, const GrayImage& b);

/// Fraction of pixels whose value changed. For +-1 embedders this is the
/// modifications-per-pixel figure quoted for LSBM/LSBMR.
double changed_pixel_rate(const GrayImage& a, const GrayImage& b);

EmbeddingRate embedding_rate(std::size_t bits_embedded, const GrayImage& img);
EmbeddingRate embedding_rate(const EmbedReport& report, const GrayImage& img);

QualityReport quality_report(const GrayImage& cover, const GrayImage& stego,
                             std::optional<std::size_t> bits_embedded = std::nullopt);

}  // namespace stegedge
