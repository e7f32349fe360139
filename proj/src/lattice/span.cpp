#include "shellbound/lattice/span.hpp"

#include <algorithm>

#include "shellbound/errors.hpp"

namespace shellbound {

namespace {

using Row = std::vector<BigInt>;

std::size_t leading_column(const Row& r) {
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (r[c] != 0) return c;
  }
  return r.size();
}

// Echelon basis with positive pivots, kept sorted by pivot column.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  void insert(Row v) {
    std::size_t i = 0;
    for (std::size_t c = leading_column(v); c < width_; c = leading_column(v)) {
      while (i < rows_.size() && pivots_[i] < c) ++i;
      if (i == rows_.size() || pivots_[i] != c) {
        if (v[c] < 0) negate(v);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), c);
        return;
      }
      Row& b = rows_[i];
      if (mpz_divisible_p(v[c].get_mpz_t(), b[c].get_mpz_t()) != 0) {
        const BigInt q = v[c] / b[c];
        for (std::size_t j = c; j < width_; ++j) v[j] -= q * b[j];
        continue;
      }
      // Unimodular 2x2 step: b' = s b + t v has pivot gcd, v' clears column c.
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
      const BigInt bq = b[c] / g;
      const BigInt vq = v[c] / g;
      for (std::size_t j = c; j < width_; ++j) {
        BigInt nb = s * b[j] + t * v[j];
        v[j] = vq * b[j] - bq * v[j];
        b[j] = std::move(nb);
      }
      if (b[c] < 0) negate(b);
    }
  }

  // Reduce entries above each pivot into [0, pivot).
  IntMatrix finish() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      for (std::size_t j = 0; j < i; ++j) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows_[j][c].get_mpz_t(), rows_[i][c].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t col = c; col < width_; ++col) rows_[j][col] -= q * rows_[i][col];
      }
    }
    return rows_;
  }

 private:
  static void negate(Row& r) {
    for (auto& x : r) x = -x;
  }

  std::size_t width_;
  IntMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  if (rows.empty()) return {};
  const std::size_t width = rows.front().size();
  Echelon ech(width);
  for (const auto& r : rows) {
    if (r.size() != width) throw InputError("rows of differing length");
    ech.insert(r);
  }
  return ech.finish();
}

SpanBasis span_of(std::span<const LatticeVector> vectors, const GramLattice& lattice) {
  if (vectors.empty()) throw PreconditionError("span of an empty vector set");
  const std::size_t n = static_cast<std::size_t>(lattice.dim());
  Echelon ech(n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw InputError("vector dimension does not match the lattice");
    Row row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = from_int64(v[c]);
    ech.insert(std::move(row));
  }
  SpanBasis out;
  out.basis = ech.finish();
  out.rank = static_cast<int>(out.basis.size());

  // gram = B G B^T
  IntMatrix bg(out.basis.size(), Row(n));
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t p = 0; p < n; ++p) {
        if (out.basis[i][p] != 0) bg[i][j] += out.basis[i][p] * lattice.entry(static_cast<int>(p), static_cast<int>(j));
      }
    }
  }
  out.gram.assign(out.basis.size(), Row(out.basis.size()));
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      for (std::size_t p = 0; p < n; ++p) out.gram[i][j] += bg[i][p] * out.basis[j][p];
    }
  }
  return out;
}

BigInt gram_det(const SpanBasis& span) { return determinant(span.gram); }

bool is_even(const SpanBasis& span) {
  for (std::size_t i = 0; i < span.gram.size(); ++i) {
    if (!mpz_even_p(span.gram[i][i].get_mpz_t())) return false;
  }
  return true;
}

}  // namespace shellbound
