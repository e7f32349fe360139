#include "shellbound/kernels/dot_histogram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shellbound/parallel.hpp"

namespace shellbound::kernels {

namespace {

constexpr std::int64_t kInt16Max = 32767;
constexpr std::int64_t kInt32Max = 2147483647;

std::int64_t max_abs(const std::vector<std::int64_t>& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::optional<PackedI16> pack_i16(const DotOperands& ops) {
  if (ops.dim > 2 * kMaxPackedPairs) return std::nullopt;
  const std::int64_t ml = max_abs(ops.left);
  const std::int64_t mr = max_abs(ops.right);
  if (ml > kInt16Max || mr > kInt16Max) return std::nullopt;
  if (ml != 0 && mr != 0 && static_cast<std::int64_t>(ops.dim) * ml > kInt32Max / mr) return std::nullopt;

  PackedI16 p;
  p.count = ops.count;
  p.pairs = (ops.dim + 1) / 2;
  p.blocks = (ops.count + 7) / 8;
  const std::size_t width = 2 * p.pairs;
  auto at = [&](const std::vector<std::int64_t>& m, std::size_t row, std::size_t d) -> std::int16_t {
    return d < ops.dim ? static_cast<std::int16_t>(m[row * ops.dim + d]) : std::int16_t{0};
  };
  p.left_pairs.resize(ops.count * p.pairs);
  p.right_rows.resize(ops.count * width);
  p.right_blocks.assign(p.blocks * p.pairs * 16, 0);
  for (std::size_t row = 0; row < ops.count; ++row) {
    for (std::size_t q = 0; q < p.pairs; ++q) {
      const auto lo = static_cast<std::uint16_t>(at(ops.left, row, 2 * q));
      const auto hi = static_cast<std::uint16_t>(at(ops.left, row, 2 * q + 1));
      p.left_pairs[row * p.pairs + q] = static_cast<std::int32_t>(static_cast<std::uint32_t>(lo) |
                                                                  (static_cast<std::uint32_t>(hi) << 16));
      const std::int16_t r0 = at(ops.right, row, 2 * q);
      const std::int16_t r1 = at(ops.right, row, 2 * q + 1);
      p.right_rows[row * width + 2 * q] = r0;
      p.right_rows[row * width + 2 * q + 1] = r1;
      const std::size_t block = row / 8;
      const std::size_t lane = row % 8;
      const std::size_t base = (block * p.pairs + q) * 16 + 2 * lane;
      p.right_blocks[base] = r0;
      p.right_blocks[base + 1] = r1;
    }
  }
  return p;
}

void upper_abs_dot_histogram_scalar(const DotOperands& ops, std::size_t row_begin, std::size_t row_end,
                                    std::span<std::uint64_t> bins) {
  const std::size_t dim = ops.dim;
  for (std::size_t a = row_begin; a < row_end; ++a) {
    const std::int64_t* l = ops.left.data() + a * dim;
    for (std::size_t b = a + 1; b < ops.count; ++b) {
      const std::int64_t* r = ops.right.data() + b * dim;
      __int128 acc = 0;
      for (std::size_t d = 0; d < dim; ++d) acc += static_cast<__int128>(l[d]) * r[d];
      const __int128 mag = acc < 0 ? -acc : acc;
      if (mag >= static_cast<__int128>(bins.size())) {
        throw std::out_of_range("inner product outside histogram range");
      }
      ++bins[static_cast<std::size_t>(mag)];
    }
  }
}

Isa select_isa(const DotOperands& ops) {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_supports(Isa::avx2) && pack_i16(ops)) return Isa::avx2;
#endif
  (void)ops;
  return Isa::scalar;
}

std::vector<std::uint64_t> upper_abs_dot_histogram(const DotOperands& ops, std::size_t bins,
                                                   const HistogramOptions& options) {
  if (ops.left.size() != ops.count * ops.dim || ops.right.size() != ops.count * ops.dim) {
    throw std::invalid_argument("operand sizes do not match count x dim");
  }
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Isa isa = options.isa.value_or(select_isa(ops));
  std::optional<PackedI16> packed;
  if (isa == Isa::avx2) {
    if (!cpu_supports(Isa::avx2)) throw std::runtime_error("AVX2 requested but not supported by this CPU");
    packed = pack_i16(ops);
    if (!packed) throw std::runtime_error("operands out of range for the int16 AVX2 kernel");
  }

  // Row a costs count - a - 1 dot products; many small chunks keep workers balanced.
  const unsigned threads = resolve_threads(options.threads);
  const std::size_t chunks = std::min<std::size_t>(ops.count, std::max<std::size_t>(1, 64 * threads));
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(bins, 0));
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = ops.count * c / chunks;
    const std::size_t end = ops.count * (c + 1) / chunks;
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::avx2) {
      upper_abs_dot_histogram_avx2(*packed, begin, end, partial[c]);
      return;
    }
#endif
    upper_abs_dot_histogram_scalar(ops, begin, end, partial[c]);
  });

  std::vector<std::uint64_t> out(bins, 0);
  for (const auto& part : partial) {
    for (std::size_t j = 0; j < bins; ++j) out[j] += part[j];
  }
  return out;
}

}  // namespace shellbound::kernels
