#include "stegedge/metrics.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "stegedge/codec.hpp"
#include "stegedge/error.hpp"

namespace stegedge {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::DimensionMismatch, "images differ in size");
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr_from_mse(double m) noexcept {
  if (m <= 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

std::size_t flipped_bits(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::size_t count = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(pa[i] ^ pb[i])));
  }
  return count;
}

double modification_rate(const GrayImage& a, const GrayImage& b) {
  return static_cast<double>(flipped_bits(a, b)) / static_cast<double>(a.size());
}

double changed_pixel_rate(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::size_t changed = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) changed += pa[i] != pb[i] ? 1 : 0;
  return static_cast<double>(changed) / static_cast<double>(pa.size());
}

EmbeddingRate embedding_rate(std::size_t bits_embedded, const GrayImage& img) {
  const double bpp = static_cast<double>(bits_embedded) / static_cast<double>(img.size());
  return EmbeddingRate{bpp, bpp * 100.0};
}

EmbeddingRate embedding_rate(const EmbedReport& report, const GrayImage& img) {
  return embedding_rate(report.bits_embedded, img);
}

QualityReport quality_report(const GrayImage& cover, const GrayImage& stego, std::optional<std::size_t> bits_embedded) {
  QualityReport r;
  r.mse = mse(cover, stego);
  r.psnr = psnr_from_mse(r.mse);
  r.modification_rate = modification_rate(cover, stego);
  if (bits_embedded) r.embedding_rate = embedding_rate(*bits_embedded, cover);
  return r;
}

}  // namespace stegedge
