#include "stegedge/baselines.hpp"

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "stegedge/error.hpp"

namespace stegedge {

std::optional<BaselineMethod> parse_baseline_method(std::string_view name) {
  if (name == "lsb") return BaselineMethod::Lsb;
  if (name == "lsbm") return BaselineMethod::Lsbm;
  if (name == "lsbmr") return BaselineMethod::Lsbmr;
  return std::nullopt;
}

std::string_view to_string(BaselineMethod method) noexcept {
  switch (method) {
    case BaselineMethod::Lsb: return "lsb";
    case BaselineMethod::Lsbm: return "lsbm";
    case BaselineMethod::Lsbmr: return "lsbmr";
  }
  return "unknown";
}

namespace {

// Visit order plus the generator for the +-1 choices. The permutation is
// drawn first so the extractor reproduces it from the seed alone.
// Fisher-Yates is spelled out because std::shuffle's sequence is not
// portable across standard libraries.
struct Walk {
  std::vector<std::size_t> order;
  std::mt19937_64 rng;

  Walk(std::size_t n, const BaselineConfig& cfg) : order(n), rng(cfg.seed) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (cfg.scatter) {
      for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
      }
    }
  }

  int step(int value) {
    if (value == 0) return 1;
    if (value == 255) return -1;
    return (rng() & 1) ? 1 : -1;
  }
};

void check_length(const GrayImage& img, std::size_t bits, BaselineMethod method) {
  if (method == BaselineMethod::Lsbmr) {
    if (bits % 2 != 0) throw Error(ErrorCode::OddPayloadLength, "LSBMR embeds bit pairs");
    if (bits > img.size() / 2 * 2) throw Error(ErrorCode::PayloadTooLarge, "payload exceeds pixel pairs");
  } else if (bits > img.size()) {
    throw Error(ErrorCode::PayloadTooLarge,
                std::to_string(bits) + " bits exceed " + std::to_string(img.size()) + " pixels");
  }
}

}  // namespace

GrayImage lsb_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg) {
  check_length(cover, payload.size(), BaselineMethod::Lsb);
  Walk walk(cover.size(), cfg);
  GrayImage stego = cover;
  auto px = stego.pixels();
  for (std::size_t i = 0; i < payload.size(); ++i) {
    std::uint8_t& v = px[walk.order[i]];
    v = static_cast<std::uint8_t>((v & 0xFE) | (payload[i] & 1));
  }
  return stego;
}

GrayImage lsbm_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg) {
  check_length(cover, payload.size(), BaselineMethod::Lsbm);
  Walk walk(cover.size(), cfg);
  GrayImage stego = cover;
  auto px = stego.pixels();
  for (std::size_t i = 0; i < payload.size(); ++i) {
    std::uint8_t& v = px[walk.order[i]];
    if ((v & 1) != payload[i]) v = static_cast<std::uint8_t>(v + walk.step(v));
  }
  return stego;
}

GrayImage lsbmr_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg) {
  check_length(cover, payload.size(), BaselineMethod::Lsbmr);
  Walk walk(cover.size(), cfg);
  GrayImage stego = cover;
  auto px = stego.pixels();
  for (std::size_t p = 0; p < payload.size() / 2; ++p) {
    std::uint8_t& first = px[walk.order[2 * p]];
    std::uint8_t& second = px[walk.order[2 * p + 1]];
    const int m1 = payload[2 * p];
    const int m2 = payload[2 * p + 1];
    int x = first;
    int y = second;
    if (m1 == (x & 1)) {
      if (m2 != lsbmr_g(x, y)) y += walk.step(y);
    } else {
      const int down = x - 1;
      const int up = x + 1;
      const bool down_ok = down >= 0 && lsbmr_g(down, y) == m2;
      const bool up_ok = up <= 255 && lsbmr_g(up, y) == m2;
      if (down_ok) {
        x = down;
      } else if (up_ok) {
        x = up;
      } else {
        // Saturated x whose matching neighbour is out of range: take the
        // in-range one and repair m2 through y.
        x = down >= 0 ? down : up;
        y += walk.step(y);
      }
    }
    first = static_cast<std::uint8_t>(x);
    second = static_cast<std::uint8_t>(y);
  }
  return stego;
}

GrayImage baseline_embed(const GrayImage& cover, std::span<const std::uint8_t> payload, const BaselineConfig& cfg) {
  switch (cfg.method) {
    case BaselineMethod::Lsb: return lsb_embed(cover, payload, cfg);
    case BaselineMethod::Lsbm: return lsbm_embed(cover, payload, cfg);
    case BaselineMethod::Lsbmr: return lsbmr_embed(cover, payload, cfg);
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown baseline method");
}

Bits baseline_extract(const GrayImage& stego, const BaselineConfig& cfg, std::size_t payload_bits) {
  check_length(stego, payload_bits, cfg.method);
  Walk walk(stego.size(), cfg);
  const auto px = stego.pixels();
  Bits out;
  out.reserve(payload_bits);
  if (cfg.method == BaselineMethod::Lsbmr) {
    for (std::size_t p = 0; p < payload_bits / 2; ++p) {
      const int x = px[walk.order[2 * p]];
      const int y = px[walk.order[2 * p + 1]];
      out.push_back(static_cast<std::uint8_t>(x & 1));
      out.push_back(static_cast<std::uint8_t>(lsbmr_g(x, y)));
    }
  } else {
    for (std::size_t i = 0; i < payload_bits; ++i) out.push_back(static_cast<std::uint8_t>(px[walk.order[i]] & 1));
  }
  return out;
}

}  // namespace stegedge
