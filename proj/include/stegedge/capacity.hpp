#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stegedge/error.hpp"
#include "stegedge/mmed.hpp"

namespace stegedge {

/// Sub-payload lengths in bits for the 1-, 2- and 3-bit embedding classes.
struct PayloadSplit {
  std::size_t len1 = 0;
  std::size_t len2 = 0;
  std::size_t len3 = 0;

  std::size_t total() const noexcept { return len1 + len2 + len3; }
  friend bool operator==(const PayloadSplit&, const PayloadSplit&) = default;
};

/// MMED cutoffs. t1 in [0,15], t2 in [16,31], t3 in [32,63].
struct Thresholds {
  int t1 = 0;
  int t2 = 16;
  int t3 = 32;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

inline constexpr Thresholds kMostPermissive{0, 16, 32};
inline constexpr std::size_t kDefaultBlockSize = 32;

struct ThresholdSelection {
  Thresholds thresholds;
  /// shortfall[k-1] is set when no parameter in class k's range reached len_k.
  std::array<bool, 3> shortfall{false, false, false};

  bool any_shortfall() const noexcept { return shortfall[0] || shortfall[1] || shortfall[2]; }
};

struct PlanPixel {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::uint8_t case_label = 0;  // 1, 2 or 3 = bits carried

  friend bool operator==(const PlanPixel&, const PlanPixel&) = default;
};

struct RegionPlan {
  std::size_t block_size = 0;
  std::vector<PlanPixel> ordered_pixels;
  std::array<std::size_t, 3> per_case_counts{0, 0, 0};

  friend bool operator==(const RegionPlan&, const RegionPlan&) = default;
};

/// Capacity of a set of pixels, in bits per embedding class.
struct CaseCapacity {
  std::size_t case1_bits = 0;
  std::size_t case2_bits = 0;
  std::size_t case3_bits = 0;

  std::size_t total() const noexcept { return case1_bits + case2_bits + case3_bits; }
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, CaseCapacity available, PayloadSplit required)
      : Error(ErrorCode::InsufficientCapacity, what), available_(available), required_(required) {}

  const CaseCapacity& available() const noexcept { return available_; }
  const PayloadSplit& required() const noexcept { return required_; }

 private:
  CaseCapacity available_;
  PayloadSplit required_;
};

PayloadSplit split_payload(std::size_t total_bits);

/// Number of interior pixels with p <= MMED < 2^(3+k).
std::size_t m_set_size(const EdgeMap& edges, int p, int k);

ThresholdSelection select_thresholds(const EdgeMap& edges, const PayloadSplit& split);

/// Embedding class of an MMED value, 0 when below t1.
constexpr int classify(int mmed, const Thresholds& th) noexcept {
  if (mmed < th.t1) return 0;
  if (mmed < th.t2) return 1;
  if (mmed < th.t3) return 2;
  return 3;
}

/// Bits that fit in the z x z block at origin (row, col), clipped to the image.
std::size_t block_capacity(const EdgeMap& edges, std::size_t row, std::size_t col, std::size_t z,
                           const Thresholds& th);

/// Capacity of every interior pixel of the image under th.
CaseCapacity total_capacity(const EdgeMap& edges, const Thresholds& th);

/// Raster-order block scan that collects eligible pixels until each
/// sub-payload fits. Pure in its arguments, so extraction can replay it.
RegionPlan build_region_plan(const EdgeMap& edges, std::size_t z, const Thresholds& th,
                             const PayloadSplit& split);

}  // namespace stegedge
