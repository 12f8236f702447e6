#include "stegedge/experiment.hpp"

#include <cmath>
#include <random>

namespace stegedge {

Bits random_bits(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bits bits(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
  }
  return bits;
}

std::size_t payload_bits_for_rate(const GrayImage& img, double rate_percent) {
  return static_cast<std::size_t>(std::llround(rate_percent / 100.0 * static_cast<double>(img.size())));
}

Embedder proposed_embedder(std::uint64_t seed, std::size_t block_size) {
  return [seed, block_size](const GrayImage& cover, double rate) {
    const Bits payload = random_bits(payload_bits_for_rate(cover, rate), seed);
    return embed(cover, payload, block_size).stego;
  };
}

Embedder baseline_embedder(const BaselineConfig& cfg) {
  return [cfg](const GrayImage& cover, double rate) {
    std::size_t n = payload_bits_for_rate(cover, rate);
    if (cfg.method == BaselineMethod::Lsbmr) n -= n % 2;
    // Payload seed is decoupled from the embedder's own stream.
    const Bits payload = random_bits(n, cfg.seed ^ 0x9E3779B97F4A7C15ull);
    return baseline_embed(cover, payload, cfg);
  };
}

}  // namespace stegedge
