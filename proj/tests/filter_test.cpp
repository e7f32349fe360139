#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shellbound/classify/classify.hpp"
#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/filter/filter.hpp"
#include "shellbound/lattice/catalog.hpp"

using namespace shellbound;

namespace {

Rational q(long p, long d = 1) { return make_rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("root filter examples") {
  const auto e8 = root_filter_check(8, 2);
  CHECK(e8.passes);
  CHECK(e8.evaluations.size() == 2);
  for (const auto& [u, v] : e8.evaluations) CHECK(v == 0);

  const auto n9 = root_filter_check(9, 2);
  CHECK_FALSE(n9.passes);
  CHECK(n9.evaluations.at(q(0)) == 0);
  CHECK(n9.evaluations.at(q(1, 2)) != 0);

  CHECK_FALSE(root_filter_check(10, 3).passes);
  CHECK(root_filter_check(10, 3).evaluations.size() == 3);
}

TEST_CASE("root filter agrees with direct evaluation") {
  for (int n = 2; n <= 20; ++n)
    for (long k = 1; k <= 5; ++k) {
      const auto c = cumulative_C(n, 2 * k - 1);
      const auto report = root_filter_check(n, k);
      bool all_zero = true;
      for (long j = 0; j < k; ++j) {
        const auto u = q(j, k);
        CHECK(report.evaluations.at(u) == c(u));
        all_zero = all_zero && c(u) == 0;
      }
      CHECK(report.passes == all_zero);
    }
}

TEST_CASE("cumulative sums are odd") {
  for (int n = 2; n <= 30; ++n)
    for (long k = 1; k <= 6; ++k) {
      const auto c = cumulative_C(n, 2 * k - 1);
      CHECK(c.is_odd());
      CHECK(c.reflected() == Poly::constant(q(-1)) * c);
      CHECK(c.degree() == std::optional<std::size_t>(2 * k - 1));
    }
}

TEST_CASE("filter search") {
  CHECK(filter_search(2, 200) == std::vector<int>{8});
  CHECK(filter_search(2, 500) == std::vector<int>{8});
  CHECK(filter_search(3, 200).empty());
  CHECK(filter_search(3, 500, 4).empty());
  CHECK(filter_search(1, 40).size() == 39);
  CHECK(filter_search(2, 500, 1) == filter_search(2, 500, 3));
}

TEST_CASE("k = 2 closed form") {
  CHECK(k2_solve() == 8);
  CHECK(root_filter_check(k2_solve(), 2).passes);
  for (int n = 2; n <= 200; ++n)
    if (n != 8) CHECK_FALSE(root_filter_check(n, 2).passes);
}

TEST_CASE("k = 3 contradiction") {
  const auto c = k3_contradiction();
  CHECK(c.n_from_sum == 10);
  CHECK(c.product_required == q(4, 81));
  CHECK(c.product_actual == q(5, 96));
  CHECK_FALSE(c.consistent);
  // 1/9 is not a root of C_5 at n = 10.
  CHECK(cumulative_C(10, 5)(q(1, 3)) != 0);
}

TEST_CASE("circle exclusion") {
  CHECK(circle_exclusion(2));
  CHECK(circle_exclusion(3));
  CHECK(circle_exclusion(100));
  bool all = true;
  for (long k = 2; k <= 1000; ++k) all = all && circle_exclusion(k);
  CHECK(all);
  CHECK_THROWS_AS(circle_exclusion(1), PreconditionError);
}

TEST_CASE("Bannai-Damerell table") {
  const auto& bd = bd_allowed_strengths();
  CHECK(bd == std::set<int>{4, 5, 7, 11});
  CHECK(bd.count(7) == 1);
  CHECK(bd.count(11) == 1);
  CHECK(bd.count(15) == 0);
  for (long k = 4; k <= 8; ++k) CHECK(bd.count(static_cast<int>(4 * k - 1)) == 0);
}

TEST_CASE("no equality for k >= 4 in dimension >= 3") {
  for (const std::string name : {"zn:3", "zn:4", "an:3", "dn:4", "dn:5", "e8"}) {
    for (std::int64_t k = 4; k <= 8; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto r = classify(builtin(name), k);
      CHECK_FALSE(r.equality);
      CHECK(r.kind == EqualityCase::none);
      CHECK(r.count < r.bound);
    }
  }
}
