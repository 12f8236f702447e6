#include "stegedge/capacity.hpp"

#include <algorithm>

namespace stegedge {

namespace {

struct ClassRange {
  int lo;
  int hi;     // inclusive top of the parameter range
  int bound;  // exclusive MMED upper bound of M(p)
};

constexpr std::array<ClassRange, 3> kRanges{{{0, 15, 16}, {16, 31, 32}, {32, 63, 64}}};

const ClassRange& range_for(int k) {
  if (k < 1 || k > 3) throw Error(ErrorCode::ParameterOutOfRange, "class index must be 1, 2 or 3");
  return kRanges[static_cast<std::size_t>(k - 1)];
}

// Histogram of interior MMED values below 64.
std::array<std::size_t, 64> interior_histogram(const EdgeMap& edges) {
  std::array<std::size_t, 64> hist{};
  for (std::size_t i = 1; i < edges.height; ++i) {
    const std::uint16_t* row = edges.values.data() + i * edges.width;
    for (std::size_t j = 1; j < edges.width; ++j) {
      if (row[j] < 64) ++hist[row[j]];
    }
  }
  return hist;
}

}  // namespace

PayloadSplit split_payload(std::size_t total_bits) {
  if (total_bits == 0) throw Error(ErrorCode::EmptyPayload, "payload has no bits");
  PayloadSplit s;
  s.len1 = total_bits * 6 / 10;
  s.len2 = total_bits * 3 / 10;
  s.len3 = total_bits - s.len1 - s.len2;
  return s;
}

std::size_t m_set_size(const EdgeMap& edges, int p, int k) {
  const ClassRange& r = range_for(k);
  if (p < r.lo || p > r.hi) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "p=" + std::to_string(p) + " outside class " + std::to_string(k) + " range");
  }
  std::size_t count = 0;
  for (std::size_t i = 1; i < edges.height; ++i) {
    const std::uint16_t* row = edges.values.data() + i * edges.width;
    for (std::size_t j = 1; j < edges.width; ++j) {
      count += (row[j] >= p && row[j] < r.bound) ? 1 : 0;
    }
  }
  return count;
}

ThresholdSelection select_thresholds(const EdgeMap& edges, const PayloadSplit& split) {
  const auto hist = interior_histogram(edges);
  const std::array<std::size_t, 3> need{split.len1, split.len2, split.len3};
  ThresholdSelection sel;
  std::array<int, 3> chosen{};
  for (std::size_t k = 0; k < 3; ++k) {
    const ClassRange& r = kRanges[k];
    // |M(p)| grows as p falls, so the first hit scanning down is the argmax.
    std::size_t count = 0;
    for (int v = r.bound - 1; v > r.hi; --v) count += hist[static_cast<std::size_t>(v)];
    int found = -1;
    for (int p = r.hi; p >= r.lo; --p) {
      count += hist[static_cast<std::size_t>(p)];
      if (count >= need[k]) {
        found = p;
        break;
      }
    }
    if (found < 0) {
      chosen[k] = r.lo;
      sel.shortfall[k] = true;
    } else {
      chosen[k] = found;
    }
  }
  sel.thresholds = Thresholds{chosen[0], chosen[1], chosen[2]};
  return sel;
}

std::size_t block_capacity(const EdgeMap& edges, std::size_t row, std::size_t col, std::size_t z,
                           const Thresholds& th) {
  const std::size_t row_end = std::min(edges.height, row + z);
  const std::size_t col_end = std::min(edges.width, col + z);
  std::size_t bits = 0;
  for (std::size_t i = std::max<std::size_t>(row, 1); i < row_end; ++i) {
    for (std::size_t j = std::max<std::size_t>(col, 1); j < col_end; ++j) {
      bits += static_cast<std::size_t>(classify(edges.at(i, j), th));
    }
  }
  return bits;
}

CaseCapacity total_capacity(const EdgeMap& edges, const Thresholds& th) {
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 1; i < edges.height; ++i) {
    for (std::size_t j = 1; j < edges.width; ++j) ++counts[static_cast<std::size_t>(classify(edges.at(i, j), th))];
  }
  return CaseCapacity{counts[1], counts[2] * 2, counts[3] * 3};
}

RegionPlan build_region_plan(const EdgeMap& edges, std::size_t z, const Thresholds& th,
                             const PayloadSplit& split) {
  if (z == 0) throw Error(ErrorCode::InvalidBlockSize, "block size must be at least 1");
  RegionPlan plan;
  plan.block_size = z;
  auto satisfied = [&] {
    return plan.per_case_counts[0] >= split.len1 && plan.per_case_counts[1] * 2 >= split.len2 &&
           plan.per_case_counts[2] * 3 >= split.len3;
  };
  if (satisfied()) return plan;

  for (std::size_t br = 0; br < edges.height; br += z) {
    for (std::size_t bc = 0; bc < edges.width; bc += z) {
      const std::size_t row_end = std::min(edges.height, br + z);
      const std::size_t col_end = std::min(edges.width, bc + z);
      for (std::size_t i = std::max<std::size_t>(br, 1); i < row_end; ++i) {
        for (std::size_t j = std::max<std::size_t>(bc, 1); j < col_end; ++j) {
          const int c = classify(edges.at(i, j), th);
          if (c == 0) continue;
          plan.ordered_pixels.push_back(
              PlanPixel{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint8_t>(c)});
          ++plan.per_case_counts[static_cast<std::size_t>(c - 1)];
        }
      }
      if (satisfied()) return plan;
    }
  }

  const CaseCapacity available{plan.per_case_counts[0], plan.per_case_counts[1] * 2,
                               plan.per_case_counts[2] * 3};
  throw CapacityError("need " + std::to_string(split.len1) + "/" + std::to_string(split.len2) + "/" +
                          std::to_string(split.len3) + " bits per case, image offers " +
                          std::to_string(available.case1_bits) + "/" + std::to_string(available.case2_bits) +
                          "/" + std::to_string(available.case3_bits),
                      available, split);
}

}  // namespace stegedge
