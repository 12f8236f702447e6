#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegedge/image.hpp"

namespace stegedge {

/// Flipping mask over {-1, 0, 1}; length >= 2 with at least one nonzero entry.
class RsMask {
 public:
  explicit RsMask(std::vector<int> entries);

  /// Parses "0,1,1,0" style text.
  static RsMask parse(std::string_view text);
  static RsMask standard() { return RsMask({0, 1, 1, 0}); }

  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  RsMask negated() const;

 private:
  std::vector<int> entries_;
};

struct RsCounts {
  std::size_t regular = 0;
  std::size_t singular = 0;
  std::size_t unusable = 0;
};

struct RsStats {
  double r_m = 0.0;
  double s_m = 0.0;
  double r_neg_m = 0.0;
  double s_neg_m = 0.0;
  std::size_t group_count = 0;
  RsCounts positive;
  RsCounts negative;
};

/// Sum of absolute differences between consecutive values.
int discrimination(std::span<const std::uint8_t> group);

/// F_1 for +1, F_-1 for -1, identity for 0. F_-1 leaves 0 and 255 in place.
std::uint8_t flip(std::uint8_t value, int direction);

/// Non-overlapping windows of mask length over the row-major pixel stream.
RsStats rs_statistics(const GrayImage& img, const RsMask& mask);

/// Produces a stego from a cover at the given embedding rate in percent.
using Embedder = std::function<GrayImage(const GrayImage& cover, double rate_percent)>;

struct RsCurvePoint {
  double rate_percent = 0.0;
  std::optional<RsStats> stats;  // empty when embedding failed
  std::string error;
};

std::vector<RsCurvePoint> rs_curve(const GrayImage& cover, std::span<const double> rates, const Embedder& embedder,
                                   const RsMask& mask);

}  // namespace stegedge
