#pragma once

// Histogram of |<left_a, right_b>| over the strict upper triangle a < b.
// This is the inner loop of exact pair distributions: left holds shell
// coordinates, right holds G * coordinates, so the dot product is the
// lattice inner product.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace shellbound::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool cpu_supports(Isa isa);

struct DotOperands {
  std::size_t count = 0;
  std::size_t dim = 0;
  std::vector<std::int64_t> left;   // count x dim, row-major
  std::vector<std::int64_t> right;  // count x dim, row-major
};

// int16 layout for the AVX2 path. Dimensions are zero-padded to an even
// count and handled in pairs; `right` is stored in blocks of 8 rows with the
// two int16 entries of each pair adjacent per lane.
inline constexpr std::size_t kMaxPackedPairs = 64;

struct PackedI16 {
  std::size_t count = 0;
  std::size_t pairs = 0;   // padded dim / 2
  std::size_t blocks = 0;  // ceil(count / 8)
  std::vector<std::int32_t> left_pairs;    // count x pairs, two int16 per int32
  std::vector<std::int16_t> right_rows;    // count x (2 * pairs)
  std::vector<std::int16_t> right_blocks;  // blocks x pairs x 16
};

// nullopt when some entry exceeds int16, a dot product could overflow int32,
// or dim > 2 * kMaxPackedPairs.
std::optional<PackedI16> pack_i16(const DotOperands& ops);

// bins[j] += #{(a, b) : row_begin <= a < row_end, a < b < count, |dot| == j}.
// Throws std::out_of_range if a dot product does not fit in the bins.
void upper_abs_dot_histogram_scalar(const DotOperands& ops, std::size_t row_begin, std::size_t row_end,
                                    std::span<std::uint64_t> bins);

#if defined(__x86_64__) || defined(_M_X64)
void upper_abs_dot_histogram_avx2(const PackedI16& packed, std::size_t row_begin, std::size_t row_end,
                                  std::span<std::uint64_t> bins);
#endif

struct HistogramOptions {
  unsigned threads = 0;
  // Forces a variant; a forced AVX2 request on ineligible data or CPU throws.
  std::optional<Isa> isa;
};

// The variant the dispatcher would pick for these operands.
Isa select_isa(const DotOperands& ops);

std::vector<std::uint64_t> upper_abs_dot_histogram(const DotOperands& ops, std::size_t bins,
                                                   const HistogramOptions& options = {});

}  // namespace shellbound::kernels
