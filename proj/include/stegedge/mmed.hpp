#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stegedge/image.hpp"

namespace stegedge {

/// Per-pixel MMED prediction-error magnitudes. Values lie in [0, 510];
/// row 0 and column 0 have no full template and are stored as 0.
struct EdgeMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint16_t> values;

  std::uint16_t at(std::size_t row, std::size_t col) const { return values[row * width + col]; }

  friend bool operator==(const EdgeMap&, const EdgeMap&) = default;
};

/// Prediction error of x given its upper-left (a), upper (b) and left (c)
/// neighbours.
constexpr int mmed_pixel(int x, int a, int b, int c) noexcept {
  const int lo = b < c ? b : c;
  const int hi = b < c ? c : b;
  int predicted;
  if (a >= hi) {
    predicted = lo;
  } else if (a <= lo) {
    predicted = hi;
  } else {
    predicted = b + c - a;
  }
  const int err = x - predicted;
  return err < 0 ? -err : err;
}

EdgeMap mmed_map(const GrayImage& img);

/// Edge map as a viewable image, values clamped to 255.
GrayImage edge_map_image(const EdgeMap& edges);

}  // namespace stegedge
