#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/lattice/catalog.hpp"
#include "shellbound/lattice/shell.hpp"
#include "shellbound/lattice/span.hpp"
#include "shellbound/verify/oracles.hpp"

using namespace shellbound;

namespace {

// Every vector with |x_i| <= bound and x^T G x == k.
std::vector<LatticeVector> cube_search(const GramLattice& lattice, std::int64_t k, std::int64_t bound) {
  const auto n = static_cast<std::size_t>(lattice.dim());
  std::vector<LatticeVector> out;
  LatticeVector x(n, -bound);
  while (true) {
    if (norm(lattice, x) == k) out.push_back(x);
    std::size_t i = n;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
    }
  }
}

GramLattice block_diagonal(const std::vector<long>& diag) {
  std::vector<std::vector<long>> g(diag.size(), std::vector<long>(diag.size(), 0));
  for (std::size_t i = 0; i < diag.size(); ++i) g[i][i] = diag[i];
  return GramLattice(to_int_matrix(g));
}

}  // namespace

TEST_CASE("builtin catalog") {
  const auto z3 = builtin("zn:3");
  CHECK(z3.dim() == 3);
  CHECK(z3.gram() == to_int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  const auto e8 = builtin("e8");
  CHECK(e8.dim() == 8);
  CHECK(determinant(e8.gram()) == 1);
  for (int i = 0; i < 8; ++i) CHECK(e8.entry(i, i) == 2);

  CHECK(determinant(builtin("an:5").gram()) == 6);
  CHECK(determinant(builtin("dn:6").gram()) == 4);
  CHECK(builtin("scaledz:9").gram() == to_int_matrix({{9}}));

  CHECK_THROWS_AS(builtin("bogus"), InputError);
  CHECK_THROWS_AS(builtin("zn:0"), InputError);
  CHECK_THROWS_AS(builtin("zn:-2"), InputError);
  CHECK_THROWS_AS(builtin("zn:x"), InputError);
  CHECK_THROWS_AS(builtin("dn:1"), InputError);
}

TEST_CASE("leech Gram invariants") {
  const auto leech = builtin("leech");
  CHECK(leech.dim() == 24);
  for (int i = 0; i < 24; ++i) {
    CHECK(leech.entry(i, i) % 2 == 0);
    for (int j = 0; j < 24; ++j) CHECK(leech.entry(i, j) == leech.entry(j, i));
  }
  CHECK(determinant(leech.gram()) == 1);
  const auto minors = leading_minors(leech.gram());
  CHECK(minors.size() == 24);
  CHECK(std::all_of(minors.begin(), minors.end(), [](const BigInt& m) { return m > 0; }));
  CHECK(minimum(leech, 4) == 4);
}

TEST_CASE("leech kissing number") {
  CHECK(shell_count(builtin("leech"), 4) == 196560);
}

TEST_CASE("Gram validation") {
  CHECK_THROWS_AS(GramLattice(to_int_matrix({{1, 2}, {2, 1}})), PreconditionError);
  CHECK_THROWS_AS(GramLattice(to_int_matrix({{1, 0}, {1, 1}})), PreconditionError);
  CHECK_THROWS_AS(GramLattice(to_int_matrix({{0}})), PreconditionError);
  CHECK_THROWS_AS(GramLattice(to_int_matrix({{1, 0}})), InputError);
  CHECK_THROWS_AS(GramLattice(IntMatrix{}), InputError);
  CHECK_NOTHROW(GramLattice(to_int_matrix({{2, -1}, {-1, 2}})));
}

TEST_CASE("inner products") {
  const auto z2 = builtin("zn:2");
  CHECK(inner(z2, {1, 0}, {0, 1}) == 0);
  CHECK(inner(z2, {1, 2}, {1, 2}) == 5);
  CHECK_THROWS_AS(inner(z2, {1, 2, 3}, {1, 2}), InputError);

  const auto e8 = builtin("e8");
  for (int i = 0; i < 8; ++i) {
    LatticeVector v(8, 0);
    v[i] = 1;
    CHECK(inner(e8, v, v) % 2 == 0);
    for (int j = 0; j < 8; ++j) {
      LatticeVector w(8, 0);
      w[j] = 1;
      LatticeVector s(8, 0);
      s[i] += 1;
      s[j] += 1;
      CHECK(norm(e8, s) % 2 == 0);
    }
  }
}

TEST_CASE("enumerate_shell examples") {
  const auto z2 = builtin("zn:2");
  const auto s = enumerate_shell(z2, 1);
  CHECK(s.vectors() == std::vector<LatticeVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(shell_count(builtin("e8"), 2) == 240);
  CHECK(shell_count(z2, 3) == 0);
  CHECK(cube_search(z2, 3, 2).empty());
  for (int n = 1; n <= 9; ++n) CHECK(shell_count(builtin("zn:" + std::to_string(n)), 1) == std::size_t(2 * n));
  CHECK(shell_count(builtin("scaledz:4"), 4) == 2);
  CHECK(shell_count(builtin("scaledz:4"), 2) == 0);
  CHECK_THROWS_AS(enumerate_shell(z2, 0), PreconditionError);
}

TEST_CASE("E8 theta coefficients") {
  // 240 sigma_3(m) vectors of norm 2m
  const auto e8 = builtin("e8");
  CHECK(shell_count(e8, 4) == 240 * 9);
  CHECK(shell_count(e8, 6) == 240 * 28);
  CHECK(shell_count(e8, 3) == 0);
}

TEST_CASE("enumeration matches brute force on small builtins") {
  std::vector<std::string> names = {"zn:1", "zn:2", "zn:3", "zn:4", "an:2", "an:3", "an:4",
                                    "dn:2", "dn:3", "dn:4", "dn:5", "scaledz:2", "scaledz:9"};
  for (const auto& name : names) {
    const auto lattice = builtin(name);
    for (std::int64_t k = 1; k <= 6; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto shell = enumerate_shell(lattice, k);
      CHECK(shell.vectors() == oracle::box_search(lattice, k));
      for (const auto& v : shell.vectors()) {
        CHECK(norm(lattice, v) == k);
        LatticeVector neg(v.size());
        std::transform(v.begin(), v.end(), neg.begin(), [](std::int64_t x) { return -x; });
        CHECK(shell.contains(neg));
      }
      CHECK(std::is_sorted(shell.vectors().begin(), shell.vectors().end()));
      CHECK(BigInt(static_cast<unsigned long>(shell.size())) <= rsd_bound(lattice.dim(), k));
    }
  }
}

TEST_CASE("box bounds are exact on Z^n") {
  CHECK(oracle::box_bounds(builtin("zn:3"), 4) == std::vector<std::int64_t>{2, 2, 2});
  CHECK(oracle::box_bounds(builtin("zn:3"), 3) == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("enumeration is deterministic across thread counts") {
  const auto e8 = builtin("e8");
  const auto one = enumerate_shell(e8, 4, EnumerateOptions{1});
  const auto four = enumerate_shell(e8, 4, EnumerateOptions{4});
  const auto again = enumerate_shell(e8, 4, EnumerateOptions{4});
  CHECK(one.vectors() == four.vectors());
  CHECK(four.vectors() == again.vectors());
}

TEST_CASE("skewed basis of Z^2") {
  // Basis (1,0), (7,1) of Z^2: Gram [[1,7],[7,50]].
  const GramLattice skew(to_int_matrix({{1, 7}, {7, 50}}));
  CHECK(shell_count(skew, 1) == 4);
  CHECK(shell_count(skew, 2) == 4);
  CHECK(shell_count(skew, 5) == 8);
  CHECK(enumerate_shell(skew, 5).vectors() == oracle::box_search(skew, 5));
}

TEST_CASE("Shell construction checks invariants") {
  const auto z2 = builtin("zn:2");
  CHECK_NOTHROW(Shell(z2, 1, {{1, 0}, {-1, 0}}));
  CHECK_THROWS_AS(Shell(z2, 1, {{1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Shell(z2, 2, {{1, 0}, {-1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Shell(z2, 1, {{1, 0}, {-1, 0}, {1, 0}}), PreconditionError);
}

TEST_CASE("minimum") {
  CHECK(minimum(builtin("e8"), 4) == 2);
  CHECK(minimum(builtin("zn:5"), 3) == 1);
  CHECK(minimum(builtin("scaledz:9"), 8) == std::nullopt);
}

TEST_CASE("span_of and HNF") {
  const auto z3 = builtin("zn:3");
  const auto s3 = span_of(enumerate_shell(z3, 1).vectors(), z3);
  CHECK(s3.rank == 3);
  CHECK(s3.gram == to_int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  const auto e8 = builtin("e8");
  const auto se8 = span_of(enumerate_shell(e8, 2).vectors(), e8);
  CHECK(se8.rank == 8);
  CHECK(gram_det(se8) == 1);
  CHECK(is_even(se8));

  const auto z4 = builtin("zn:4");
  const auto sz4 = span_of(enumerate_shell(z4, 1).vectors(), z4);
  CHECK(gram_det(sz4) == 1);
  CHECK_FALSE(is_even(sz4));

  const auto z2 = builtin("zn:2");
  const std::vector<LatticeVector> single = {{2, 0}};
  const auto s1 = span_of(single, z2);
  CHECK(s1.rank == 1);
  CHECK(s1.gram == to_int_matrix({{4}}));
  CHECK(gram_det(s1) == 4);

  // Norm-2 vectors of Z^3 generate D3, index 2.
  const auto d3 = span_of(enumerate_shell(z3, 2).vectors(), z3);
  CHECK(d3.rank == 3);
  CHECK(gram_det(d3) == 4);

  // Z^3 + 2Z^2: the norm-1 shell spans a rank-3 sublattice.
  const auto mixed = block_diagonal({1, 1, 1, 4, 4});
  CHECK(span_of(enumerate_shell(mixed, 1).vectors(), mixed).rank == 3);

  CHECK_THROWS_AS(span_of(std::vector<LatticeVector>{}, z2), PreconditionError);
}

TEST_CASE("HNF is canonical") {
  const IntMatrix a = to_int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const IntMatrix b = to_int_matrix({{10, -4, -16}, {2, 4, 4}, {-6, 6, 12}, {4, 8, 8}});
  const auto ha = hermite_normal_form(a);
  CHECK(ha == hermite_normal_form(b));
  CHECK(determinant(ha) == determinant(a) * (determinant(a) < 0 ? -1 : 1));
  for (std::size_t i = 0; i < ha.size(); ++i) CHECK(ha[i][i] > 0);
}
