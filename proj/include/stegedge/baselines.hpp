#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "stegedge/codec.hpp"
#include "stegedge/image.hpp"

namespace stegedge {

enum class BaselineMethod { Lsb, Lsbm, Lsbmr };

std::optional<BaselineMethod> parse_baseline_method(std::string_view name);
std::string_view to_string(BaselineMethod method) noexcept;

/// The seed drives the +-1 choices and, with `scatter`, a pixel-visit
/// permutation. Without scatter pixels are visited in raster order.
struct BaselineConfig {
  BaselineMethod method = BaselineMethod::Lsb;
  std::uint64_t seed = 0;
  bool scatter = false;
};

GrayImage lsb_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg);
GrayImage lsbm_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg);
GrayImage lsbmr_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg);

/// Dispatches on cfg.method.
GrayImage baseline_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg);
Bits baseline_extract(const GrayImage& stego, const BaselineConfig& cfg, std::size_t payload_bits);

/// LSBMR's second-bit function: LSB(floor(a / 2) + b).
constexpr int lsbmr_g(int a, int b) noexcept { return ((a >> 1) + b) & 1; }

}  // namespace stegedge
