#include "stegedge/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "stegedge/error.hpp"

namespace stegedge {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorCode::InvalidImage, "width and height must be at least 1");
  }
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorCode::InvalidImage, "pixel count does not match width x height");
  }
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads a run of non-space octets.
  std::string token() {
    for (;;) {
      while (pos_ < bytes_.size() && std::isspace(bytes_[pos_])) ++pos_;
      if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
        continue;
      }
      break;
    }
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) throw Error(ErrorCode::MalformedHeader, "unexpected end of header");
    return out;
  }

  std::size_t number(const char* field) {
    const std::string tok = token();
    std::size_t value = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::MalformedHeader, std::string("non-numeric ") + field);
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > (1u << 30)) throw Error(ErrorCode::MalformedHeader, std::string(field) + " too large");
    }
    return value;
  }

  // Exactly one whitespace octet separates maxval from the raster.
  void single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::MalformedHeader, "missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorCode::MalformedHeader, "expected magic P5");
  }
  HeaderReader reader(bytes.subspan(2));
  if (bytes.size() > 2 && !std::isspace(bytes[2]) && bytes[2] != '#') {
    throw Error(ErrorCode::MalformedHeader, "expected magic P5");
  }
  const std::size_t width = reader.number("width");
  const std::size_t height = reader.number("height");
  const std::size_t maxval = reader.number("maxval");
  if (width == 0 || height == 0) throw Error(ErrorCode::MalformedHeader, "zero dimension");
  if (maxval == 0) throw Error(ErrorCode::MalformedHeader, "zero maxval");
  if (maxval > 255) throw Error(ErrorCode::UnsupportedMaxval, "maxval " + std::to_string(maxval));
  reader.single_whitespace();

  const std::size_t offset = 2 + reader.position();
  const std::size_t count = width * height;
  if (bytes.size() - offset < count) {
    throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(count) + " pixel octets, got " +
                                              std::to_string(bytes.size() - offset));
  }
  auto raster = bytes.subspan(offset, count);
  for (std::uint8_t v : raster) {
    if (v > maxval) throw Error(ErrorCode::MalformedHeader, "pixel exceeds maxval");
  }
  return GrayImage(width, height, std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

Bytes save_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return load_pgm(read_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  write_file(path, save_pgm(img));
}

namespace {

void check_plane(int plane) {
  if (plane < 1 || plane > 8) {
    throw Error(ErrorCode::PlaneOutOfRange, "plane " + std::to_string(plane) + " not in [1, 8]");
  }
}

}  // namespace

int get_bit(std::uint8_t pixel, int plane) {
  check_plane(plane);
  return (pixel >> (plane - 1)) & 1;
}

std::uint8_t set_bit(std::uint8_t pixel, int plane, int bit) {
  check_plane(plane);
  const auto mask = static_cast<std::uint8_t>(1u << (plane - 1));
  return bit ? static_cast<std::uint8_t>(pixel | mask) : static_cast<std::uint8_t>(pixel & ~mask);
}

BitPlane bit_plane(const GrayImage& img, int plane) {
  check_plane(plane);
  BitPlane out{img.width(), img.height(), plane, {}};
  out.bits.reserve(img.size());
  for (std::uint8_t p : img.pixels()) out.bits.push_back(static_cast<std::uint8_t>((p >> (plane - 1)) & 1));
  return out;
}

GrayImage bit_plane_image(const BitPlane& plane) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(plane.bits.size());
  for (std::uint8_t b : plane.bits) pixels.push_back(b ? 255 : 0);
  return GrayImage(plane.width, plane.height, std::move(pixels));
}

}  // namespace stegedge
