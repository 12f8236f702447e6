#include "stegedge/codec.hpp"

#include <string>

#include "stegedge/metrics.hpp"
#include "stegedge/mmed.hpp"

namespace stegedge {

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
  Bits bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) bits.push_back(static_cast<std::uint8_t>((byte >> shift) & 1));
  }
  return bits;
}

Bytes bits_to_bytes(std::span<const std::uint8_t> bits) {
  Bytes bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

namespace {

void require_header_width(const GrayImage& img) {
  if (img.width() < kHeaderBits) {
    throw Error(ErrorCode::ImageTooNarrow,
                "width " + std::to_string(img.width()) + " < " + std::to_string(kHeaderBits) + " header pixels");
  }
}

void push_field(Bits& out, std::uint32_t value, int width) {
  for (int shift = width - 1; shift >= 0; --shift) out.push_back(static_cast<std::uint8_t>((value >> shift) & 1));
}

std::uint32_t pop_field(std::span<const std::uint8_t>& bits, int width) {
  std::uint32_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | bits[static_cast<std::size_t>(i)];
  bits = bits.subspan(static_cast<std::size_t>(width));
  return v;
}

// Key plane paired with target plane (q + 1) for a pixel carrying c bits.
constexpr int key_plane(int c, int q) noexcept { return c + 1 + q; }

}  // namespace

std::uint8_t embed_pixel(std::uint8_t value, int case_label, std::span<const std::uint8_t> bits) {
  for (std::size_t q = 0; q < bits.size(); ++q) {
    const int plane = static_cast<int>(q);
    value = set_bit(value, plane + 1, get_bit(value, key_plane(case_label, plane)) ^ bits[q]);
  }
  return value;
}

void extract_pixel(std::uint8_t value, int case_label, int count, Bits& out) {
  for (int q = 0; q < count; ++q) {
    out.push_back(static_cast<std::uint8_t>(get_bit(value, key_plane(case_label, q)) ^ get_bit(value, q + 1)));
  }
}

GrayImage write_header(const GrayImage& img, const StegoHeader& header) {
  require_header_width(img);
  Bits bits;
  bits.reserve(kHeaderBits);
  push_field(bits, header.magic, 8);
  push_field(bits, header.version, 8);
  push_field(bits, header.z, 8);
  push_field(bits, header.t1, 8);
  push_field(bits, header.t2, 8);
  push_field(bits, header.t3, 8);
  push_field(bits, header.payload_bits & 0xFFFFFFu, 24);

  GrayImage out = img;
  for (std::size_t j = 0; j < kHeaderBits; ++j) out.at(0, j) = set_bit(out.at(0, j), 1, bits[j]);
  return out;
}

StegoHeader read_header(const GrayImage& img) {
  require_header_width(img);
  Bits raw(kHeaderBits);
  for (std::size_t j = 0; j < kHeaderBits; ++j) raw[j] = static_cast<std::uint8_t>(img.at(0, j) & 1);
  std::span<const std::uint8_t> bits(raw);

  StegoHeader h;
  h.magic = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.version = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.z = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.t1 = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.t2 = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.t3 = static_cast<std::uint8_t>(pop_field(bits, 8));
  h.payload_bits = pop_field(bits, 24);

  if (h.magic != kHeaderMagic) throw Error(ErrorCode::BadMagic, "no stego header present");
  if (h.version != kHeaderVersion) {
    throw Error(ErrorCode::UnsupportedVersion, "header version " + std::to_string(h.version));
  }
  if (h.t1 > 15 || h.t2 < 16 || h.t2 > 31 || h.t3 < 32 || h.t3 > 63) {
    throw Error(ErrorCode::CorruptHeader, "threshold out of range");
  }
  if (h.z == 0) throw Error(ErrorCode::CorruptHeader, "zero block size");
  return h;
}

EmbedResult embed(const GrayImage& cover, std::span<const std::uint8_t> payload, std::size_t block_size) {
  if (payload.empty()) throw Error(ErrorCode::EmptyPayload, "payload has no bits");
  if (payload.size() > kMaxPayloadBits) {
    throw Error(ErrorCode::PayloadTooLarge, std::to_string(payload.size()) + " bits does not fit the 24-bit length field");
  }
  require_header_width(cover);
  if (block_size == 0 || block_size > 255) {
    throw Error(ErrorCode::InvalidBlockSize, "block size must be in [1, 255]");
  }

  const EdgeMap edges = mmed_map(cover);
  const PayloadSplit split = split_payload(payload.size());
  const ThresholdSelection selection = select_thresholds(edges, split);
  RegionPlan plan = build_region_plan(edges, block_size, selection.thresholds, split);

  const std::array<std::span<const std::uint8_t>, 3> parts{
      payload.subspan(0, split.len1), payload.subspan(split.len1, split.len2),
      payload.subspan(split.len1 + split.len2, split.len3)};
  std::array<std::size_t, 3> cursor{0, 0, 0};

  GrayImage stego = cover;
  EmbedReport report;
  report.thresholds = selection.thresholds;
  report.threshold_shortfall = selection.shortfall;

  for (const PlanPixel& px : plan.ordered_pixels) {
    const auto k = static_cast<std::size_t>(px.case_label - 1);
    const std::size_t remaining = parts[k].size() - cursor[k];
    if (remaining == 0) continue;
    const std::size_t take = std::min<std::size_t>(px.case_label, remaining);
    stego.at(px.row, px.col) = embed_pixel(stego.at(px.row, px.col), px.case_label, parts[k].subspan(cursor[k], take));
    cursor[k] += take;
    ++report.pixels_used[k];
    report.bits_embedded += take;
  }

  StegoHeader header;
  header.z = static_cast<std::uint8_t>(block_size);
  header.t1 = static_cast<std::uint8_t>(selection.thresholds.t1);
  header.t2 = static_cast<std::uint8_t>(selection.thresholds.t2);
  header.t3 = static_cast<std::uint8_t>(selection.thresholds.t3);
  header.payload_bits = static_cast<std::uint32_t>(payload.size());
  stego = write_header(stego, header);

  report.psnr_hint = psnr(cover, stego);
  report.flipped_bits = flipped_bits(cover, stego);
  return EmbedResult{std::move(stego), report, std::move(plan)};
}

RegionPlan replay_plan(const GrayImage& cover, const StegoHeader& header) {
  const PayloadSplit split = split_payload(header.payload_bits);
  try {
    return build_region_plan(mmed_map(cover), header.z, header.thresholds(), split);
  } catch (const CapacityError&) {
    throw Error(ErrorCode::PlanMismatch, "cover cannot hold the advertised payload; wrong cover image?");
  }
}

Bits extract(const GrayImage& cover, const GrayImage& stego) {
  if (!cover.same_shape(stego)) throw Error(ErrorCode::DimensionMismatch, "cover and stego differ in size");
  const StegoHeader header = read_header(stego);
  if (header.payload_bits == 0) return {};

  const PayloadSplit split = split_payload(header.payload_bits);
  const RegionPlan plan = replay_plan(cover, header);

  const std::array<std::size_t, 3> lengths{split.len1, split.len2, split.len3};
  std::array<Bits, 3> parts;
  for (std::size_t k = 0; k < 3; ++k) parts[k].reserve(lengths[k]);

  for (const PlanPixel& px : plan.ordered_pixels) {
    const auto k = static_cast<std::size_t>(px.case_label - 1);
    const std::size_t remaining = lengths[k] - parts[k].size();
    if (remaining == 0) continue;
    const int take = static_cast<int>(std::min<std::size_t>(px.case_label, remaining));
    extract_pixel(stego.at(px.row, px.col), px.case_label, take, parts[k]);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (parts[k].size() != lengths[k]) throw Error(ErrorCode::PlanMismatch, "plan exhausted before payload recovered");
  }

  Bits out;
  out.reserve(header.payload_bits);
  for (const Bits& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace stegedge
