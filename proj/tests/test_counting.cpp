// Counting kernel: binomials, ballot numbers, the count formula, the Fine
// sequence, and the Shapiro identity, cross-checked against independent
// path-enumeration and recurrence oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "finetree/bigint.hpp"
#include "finetree/counting.hpp"
#include "oracles.hpp"

using namespace finetree;

TEST_CASE("binomial coefficients with triangle guards") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(10, 5) == 252);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(4, -1) == 0);
  // Pascal's rule on a block of the triangle.
  for (long long n = 1; n <= 40; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("parameter validity") {
  CHECK(params_valid(FineParams{0, 2}));
  CHECK(params_valid(FineParams{0, 1}));
  CHECK(params_valid(FineParams{1, 3}));
  CHECK(params_valid(FineParams{3, 4}));
  CHECK_FALSE(params_valid(FineParams{2, 2}));
  CHECK_FALSE(params_valid(FineParams{3, 1}));
  CHECK_FALSE(params_valid(FineParams{-1, 2}));
}

TEST_CASE("catalan numbers against the convolution recurrence") {
  std::vector<long long> small = {1, 1, 2, 5, 14, 42};
  for (size_t i = 0; i < small.size(); ++i)
    CHECK(catalan(static_cast<long long>(i)) == small[i]);
  for (int n = 0; n <= 25; ++n)
    CHECK(catalan(n) == oracle::catalan_rec(n));
  // and against raw path counting
  for (int n = 0; n <= 9; ++n)
    CHECK(catalan(n) == BigInt(oracle::all_dyck_paths(n).size()));
}

TEST_CASE("ballot numbers against path enumeration") {
  CHECK(ballot(2, 2) == 1);
  CHECK(ballot(4, 2) == 5);
  CHECK(ballot(0, 0) == 0);   // no paths of semilength < 1
  CHECK(ballot(3, 0) == 0);   // every nonempty path starts with a rise
  CHECK(ballot(3, 4) == 0);   // first rise cannot exceed the semilength
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (int k = 0; k <= n + 1; ++k) {
      CHECK(ballot(n, k) == oracle::ballot_by_paths(n, k));
      total += ballot(n, k);
    }
    CHECK(total == catalan(n));
  }
}

TEST_CASE("count formula against filtered enumeration") {
  CHECK(count_formula(5, FineParams{0, 2}) == 18);
  CHECK(count_formula(4, FineParams{1, 3}) == 6);
  for (int p = 0; p <= 3; ++p)
    for (int q = p + 1; q <= 4; ++q) {
      FineParams pq{p, q};
      for (int n = 0; n <= 9; ++n)
        CHECK(count_formula(n, pq) ==
              BigInt(oracle::words_by_filter(n, pq).size()));
    }
  // q = 1 makes the zero condition vacuous: plain Catalan counting.
  for (int n = 1; n <= 10; ++n)
    CHECK(count_formula(n, FineParams{0, 1}) == catalan(n));
}

TEST_CASE("fine sequence values") {
  std::vector<long long> expected = {1, 2, 6, 18, 57, 186, 622, 2120};
  for (size_t i = 0; i < expected.size(); ++i)
    CHECK(fine(static_cast<long long>(i) + 1) == expected[i]);
  for (long long n = 0; n <= 12; ++n)
    CHECK(fine(n) == count_formula(n + 1, FineParams{0, 2}));
}

TEST_CASE("shapiro identity") {
  ShapiroReport rep = check_shapiro(15);
  CHECK(rep.ok);
  CHECK(rep.checked_up_to == 15);
  CHECK(rep.first_failure == -1);
  for (long long n = 2; n <= 15; ++n)
    CHECK(2 * fine(n) + fine(n - 1) == oracle::catalan_rec(static_cast<int>(n) + 1));
}
