#include "stegedge/mmed.hpp"

#include <algorithm>

namespace stegedge {

EdgeMap mmed_map(const GrayImage& img) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  EdgeMap out{w, h, std::vector<std::uint16_t>(w * h, 0)};
  const auto px = img.pixels();
  for (std::size_t i = 1; i < h; ++i) {
    const std::uint8_t* above = px.data() + (i - 1) * w;
    const std::uint8_t* row = px.data() + i * w;
    std::uint16_t* dst = out.values.data() + i * w;
    for (std::size_t j = 1; j < w; ++j) {
      dst[j] = static_cast<std::uint16_t>(mmed_pixel(row[j], above[j - 1], above[j], row[j - 1]));
    }
  }
  return out;
}

GrayImage edge_map_image(const EdgeMap& edges) {
  std::vector<std::uint8_t> pixels(edges.values.size());
  std::transform(edges.values.begin(), edges.values.end(), pixels.begin(),
                 [](std::uint16_t v) { return static_cast<std::uint8_t>(std::min<std::uint16_t>(v, 255)); });
  return GrayImage(edges.width, edges.height, std::move(pixels));
}

}  // namespace stegedge
