// Compiled with -mavx2; only reached after a runtime cpu_supports check.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <stdexcept>

#include "shellbound/kernels/dot_histogram.hpp"

namespace shellbound::kernels {

namespace {

constexpr int kMaxComparedBins = 8;

inline std::int64_t hsum_epi32(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += lanes[i];
  return s;
}

inline std::int32_t hmax_epi32(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int32_t m = lanes[0];
  for (int i = 1; i < 8; ++i) m = lanes[i] > m ? lanes[i] : m;
  return m;
}

inline __m256i block_dots(const __m256i* left, const std::int16_t* block, std::size_t pairs) {
  const auto* rb = reinterpret_cast<const __m256i*>(block);
  __m256i sum = _mm256_setzero_si256();
  for (std::size_t q = 0; q < pairs; ++q) {
    sum = _mm256_add_epi32(sum, _mm256_madd_epi16(left[q], _mm256_loadu_si256(rb + q)));
  }
  return _mm256_abs_epi32(sum);
}

// Bins [0, C) are counted with lane compares; bin C is the remainder.
template <int C>
void count_blocks(const PackedI16& p, const __m256i* left, std::size_t first, std::uint64_t* local,
                  __m256i& vmax) {
  __m256i acc[C + 1];
  __m256i keys[C + 1];
  for (int j = 0; j < C; ++j) {
    acc[j] = _mm256_setzero_si256();
    keys[j] = _mm256_set1_epi32(j);
  }
  for (std::size_t b = first; b < p.blocks; ++b) {
    const __m256i mag = block_dots(left, p.right_blocks.data() + b * p.pairs * 16, p.pairs);
    vmax = _mm256_max_epi32(vmax, mag);
    for (int j = 0; j < C; ++j) acc[j] = _mm256_sub_epi32(acc[j], _mm256_cmpeq_epi32(mag, keys[j]));
  }
  const auto total = static_cast<std::int64_t>((p.blocks - first) * 8);
  std::int64_t counted = 0;
  for (int j = 0; j < C; ++j) {
    const std::int64_t c = hsum_epi32(acc[j]);
    local[j] += static_cast<std::uint64_t>(c);
    counted += c;
  }
  local[C] += static_cast<std::uint64_t>(total - counted);
}

void store_blocks(const PackedI16& p, const __m256i* left, std::size_t first, std::uint64_t* local,
                  std::size_t nbins) {
  alignas(32) std::int32_t lanes[8];
  for (std::size_t b = first; b < p.blocks; ++b) {
    const __m256i mag = block_dots(left, p.right_blocks.data() + b * p.pairs * 16, p.pairs);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), mag);
    for (int i = 0; i < 8; ++i) {
      if (static_cast<std::size_t>(lanes[i]) >= nbins) throw std::out_of_range("inner product outside histogram range");
      ++local[lanes[i]];
    }
  }
}

template <int C>
void count_dispatch(int compared, const PackedI16& p, const __m256i* left, std::size_t first, std::uint64_t* local,
                    __m256i& vmax) {
  if constexpr (C > kMaxComparedBins) {
    (void)compared, (void)p, (void)left, (void)first, (void)local, (void)vmax;
  } else {
    if (compared == C) {
      count_blocks<C>(p, left, first, local, vmax);
    } else {
      count_dispatch<C + 1>(compared, p, left, first, local, vmax);
    }
  }
}

}  // namespace

void upper_abs_dot_histogram_avx2(const PackedI16& p, std::size_t row_begin, std::size_t row_end,
                                  std::span<std::uint64_t> bins) {
  if (p.pairs > kMaxPackedPairs) throw std::invalid_argument("packed operands too wide for the AVX2 kernel");
  const std::size_t nbins = bins.size();
  const std::size_t width = 2 * p.pairs;
  const int compared = static_cast<int>(nbins) - 1;
  const std::size_t pad = p.blocks * 8 - p.count;
  __m256i left[kMaxPackedPairs];
  __m256i vmax = _mm256_setzero_si256();

  for (std::size_t a = row_begin; a < row_end; ++a) {
    const std::int32_t* lp = p.left_pairs.data() + a * p.pairs;
    std::size_t start = a + 1;
    // Scalar head up to the next 8-row block boundary.
    for (; start < p.count && start % 8 != 0; ++start) {
      const std::int16_t* r = p.right_rows.data() + start * width;
      std::int64_t dot = 0;
      for (std::size_t q = 0; q < p.pairs; ++q) {
        const auto lo = static_cast<std::int16_t>(lp[q] & 0xffff);
        const auto hi = static_cast<std::int16_t>((lp[q] >> 16) & 0xffff);
        dot += static_cast<std::int64_t>(lo) * r[2 * q] + static_cast<std::int64_t>(hi) * r[2 * q + 1];
      }
      const std::int64_t mag = dot < 0 ? -dot : dot;
      if (static_cast<std::size_t>(mag) >= nbins) throw std::out_of_range("inner product outside histogram range");
      ++bins[static_cast<std::size_t>(mag)];
    }
    if (start >= p.count) continue;

    for (std::size_t q = 0; q < p.pairs; ++q) left[q] = _mm256_set1_epi32(lp[q]);
    if (compared <= kMaxComparedBins) {
      count_dispatch<0>(compared, p, left, start / 8, bins.data(), vmax);
    } else {
      store_blocks(p, left, start / 8, bins.data(), nbins);
    }
    // Zero padding rows of the final block contributed dot 0.
    bins[0] -= pad;
  }
  if (static_cast<std::size_t>(hmax_epi32(vmax)) >= nbins) {
    throw std::out_of_range("inner product outside histogram range");
  }
}

}  // namespace shellbound::kernels

#endif
