#pragma once

#include <cstddef>
#include <cstdint>

#include "stegedge/baselines.hpp"
#include "stegedge/codec.hpp"
#include "stegedge/rs.hpp"

namespace stegedge {

/// Deterministic uniform bits from a 64-bit Mersenne Twister.
Bits random_bits(std::size_t count, std::uint64_t seed);

/// Payload length for "k% embedding": k percent of the pixel count, rounded.
std::size_t payload_bits_for_rate(const GrayImage& img, double rate_percent);

/// Embeds a seeded random payload with the edge-adaptive codec.
Embedder proposed_embedder(std::uint64_t seed, std::size_t block_size = kDefaultBlockSize);

/// Same for a baseline; LSBMR payloads are rounded down to an even length.
Embedder baseline_embedder(const BaselineConfig& cfg);

}  // namespace stegedge
