#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stegedge {

using Bytes = std::vector<std::uint8_t>;

/// 8-bit single-channel raster, row-major.
///
/// Construction validates the size invariant; after that the object is a
/// plain value. Pixel (row, col) lives at index row * width + col.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// One bit plane of an image; plane 1 is the least significant.
struct BitPlane {
  std::size_t width = 0;
  std::size_t height = 0;
  int plane_index = 1;
  std::vector<std::uint8_t> bits;

  friend bool operator==(const BitPlane&, const BitPlane&) = default;
};

// Binary PGM (P5). Comments are accepted on load and never written.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);
Bytes save_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Bit-plane primitives. Planes are numbered 1..8, 1 = weight 2^0.
int get_bit(std::uint8_t pixel, int plane);
std::uint8_t set_bit(std::uint8_t pixel, int plane, int bit);
BitPlane bit_plane(const GrayImage& img, int plane);

/// Renders a bit plane as a 0/255 image for visual inspection.
GrayImage bit_plane_image(const BitPlane& plane);

}  // namespace stegedge
