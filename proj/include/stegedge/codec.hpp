#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stegedge/capacity.hpp"
#include "stegedge/image.hpp"

namespace stegedge {

/// One bit per element, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Unpacks octets most-significant bit first.
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
/// Packs bits MSB first; a trailing partial byte is zero-filled.
Bytes bits_to_bytes(std::span<const std::uint8_t> bits);

inline constexpr std::uint8_t kHeaderMagic = 0xA5;
inline constexpr std::uint8_t kHeaderVersion = 0x01;
inline constexpr std::size_t kHeaderBits = 72;
inline constexpr std::size_t kMaxPayloadBits = (std::size_t{1} << 24) - 1;

/// Auxiliary record stored in plane 1 of pixels (0,0)..(0,71).
///
/// Layout, each field MSB first: magic(8) version(8) z(8) t1(8) t2(8) t3(8)
/// payload_bits(24).
struct StegoHeader {
  std::uint8_t magic = kHeaderMagic;
  std::uint8_t version = kHeaderVersion;
  std::uint8_t z = 32;
  std::uint8_t t1 = 0;
  std::uint8_t t2 = 16;
  std::uint8_t t3 = 32;
  std::uint32_t payload_bits = 0;

  Thresholds thresholds() const noexcept { return Thresholds{t1, t2, t3}; }
  friend bool operator==(const StegoHeader&, const StegoHeader&) = default;
};

/// Writes up to case_label bits into one pixel: bit q goes to plane q+1,
/// XORed with key plane case_label+1+q. Fewer bits leave higher target
/// planes untouched.
std::uint8_t embed_pixel(std::uint8_t value, int case_label, std::span<const std::uint8_t> bits);
/// Inverse of embed_pixel for the first `count` bits; appends to out.
void extract_pixel(std::uint8_t value, int case_label, int count, Bits& out);

GrayImage write_header(const GrayImage& img, const StegoHeader& header);
StegoHeader read_header(const GrayImage& img);

struct EmbedReport {
  std::size_t bits_embedded = 0;
  /// Pixels that received at least one payload bit, per case.
  std::array<std::size_t, 3> pixels_used{0, 0, 0};
  Thresholds thresholds;
  std::array<bool, 3> threshold_shortfall{false, false, false};
  double psnr_hint = 0.0;
  std::size_t flipped_bits = 0;
};

struct EmbedResult {
  GrayImage stego;
  EmbedReport report;
  RegionPlan plan;
};

EmbedResult embed(const GrayImage& cover, std::span<const std::uint8_t> payload,
                  std::size_t block_size = kDefaultBlockSize);

/// Rebuilds the region plan the embedder used, from the cover and a header.
RegionPlan replay_plan(const GrayImage& cover, const StegoHeader& header);

/// Non-blind extraction: the original cover is required.
Bits extract(const GrayImage& cover, const GrayImage& stego);

}  // namespace stegedge
