#include "stegedge/rs.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "stegedge/error.hpp"

namespace stegedge {

RsMask::RsMask(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw Error(ErrorCode::InvalidMask, "mask needs at least two entries");
  bool nonzero = false;
  for (int e : entries_) {
    if (e < -1 || e > 1) throw Error(ErrorCode::InvalidMask, "mask entries must be -1, 0 or 1");
    nonzero |= e != 0;
  }
  if (!nonzero) throw Error(ErrorCode::InvalidMask, "mask is all zeros");
}

RsMask RsMask::parse(std::string_view text) {
  std::vector<int> entries;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidMask, "bad mask entry '" + item + "'");
    }
  }
  return RsMask(std::move(entries));
}

RsMask RsMask::negated() const {
  std::vector<int> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(), [](int e) { return -e; });
  return RsMask(std::move(out));
}

int discrimination(std::span<const std::uint8_t> group) {
  if (group.size() < 2) throw Error(ErrorCode::GroupTooShort, "group needs at least two values");
  int sum = 0;
  for (std::size_t i = 1; i < group.size(); ++i) sum += std::abs(int{group[i]} - int{group[i - 1]});
  return sum;
}

std::uint8_t flip(std::uint8_t value, int direction) {
  if (direction > 0) return static_cast<std::uint8_t>(value ^ 1);
  if (direction < 0) {
    // F_-1(x) = F_1(x + 1) - 1: odd values step up, even values step down.
    const int shifted = (value & 1) ? value + 1 : value - 1;
    return (shifted < 0 || shifted > 255) ? value : static_cast<std::uint8_t>(shifted);
  }
  return value;
}

namespace {

constexpr std::size_t kMaxGroup = 64;

void classify(int before, int after, RsCounts& counts) {
  if (after > before) {
    ++counts.regular;
  } else if (after < before) {
    ++counts.singular;
  } else {
    ++counts.unusable;
  }
}

double fraction(std::size_t n, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(total);
}

}  // namespace

RsStats rs_statistics(const GrayImage& img, const RsMask& mask) {
  const std::size_t n = mask.size();
  if (n > kMaxGroup) throw Error(ErrorCode::InvalidMask, "mask longer than 64 entries");
  const auto px = img.pixels();
  const auto entries = mask.entries();

  RsStats stats;
  stats.group_count = px.size() / n;
  std::array<std::uint8_t, kMaxGroup> pos{};
  std::array<std::uint8_t, kMaxGroup> neg{};
  for (std::size_t g = 0; g < stats.group_count; ++g) {
    const auto group = px.subspan(g * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = flip(group[i], entries[i]);
      neg[i] = flip(group[i], -entries[i]);
    }
    const int base = discrimination(group);
    classify(base, discrimination(std::span(pos).first(n)), stats.positive);
    classify(base, discrimination(std::span(neg).first(n)), stats.negative);
  }
  stats.r_m = fraction(stats.positive.regular, stats.group_count);
  stats.s_m = fraction(stats.positive.singular, stats.group_count);
  stats.r_neg_m = fraction(stats.negative.regular, stats.group_count);
  stats.s_neg_m = fraction(stats.negative.singular, stats.group_count);
  return stats;
}

std::vector<RsCurvePoint> rs_curve(const GrayImage& cover, std::span<const double> rates, const Embedder& embedder,
                                   const RsMask& mask) {
  std::vector<RsCurvePoint> out;
  out.reserve(rates.size());
  for (double rate : rates) {
    RsCurvePoint point;
    point.rate_percent = rate;
    try {
      point.stats = rs_statistics(rate == 0.0 ? cover : embedder(cover, rate), mask);
    } catch (const Error& e) {
      point.error = e.what();
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace stegedge
