#include <doctest.h>

#include <stdexcept>

#include "test_helpers.hpp"
#include "valleyless/counting.hpp"

using namespace vls;

namespace {

// Published table of permutations by length n (columns 1..10) and number of
// valleys k (rows 0..4). Zero where the table is blank.
const long long kValleyTable[5][10] = {
    {1, 2, 4, 8, 16, 32, 64, 128, 256, 512},
    {0, 0, 2, 16, 88, 416, 1824, 7680, 31616, 128512},
    {0, 0, 0, 0, 16, 272, 2880, 24576, 185856, 1304832},
    {0, 0, 0, 0, 0, 0, 272, 7936, 137216, 1841152},
    {0, 0, 0, 0, 0, 0, 0, 0, 7936, 353792},
};

// Valleyless sequences by length n (rows 1..6) and maximum k (columns 1..5).
const long long kValleylessTable[6][5] = {
    {1, 1, 1, 1, 1}, {1, 3, 5, 7, 9}, {1, 6, 15, 28, 45},
    {1, 10, 35, 84, 165}, {1, 15, 70, 210, 495}, {1, 21, 126, 462, 1287},
};

int brute_valleys(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t j = 1; j + 1 < w.size(); ++j) c += w[j] < w[j - 1] && w[j] < w[j + 1];
  return c;
}

}  // namespace

TEST_CASE("binomial against Pascal's triangle") {
  const auto pascal = vls::testing::pascal_triangle(40);
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= a + 2; ++b)
      CHECK(binomial(a, b) == (b <= a ? pascal[a][b] : BigInt(0)));
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(13, 8) == 1287);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(200, 100) == BigInt("90548514656103281165404177077484163874504589675413336841320"));
}

TEST_CASE("count_valley_perms reproduces the published table") {
  for (int k = 0; k <= 4; ++k)
    for (int n = 1; n <= 10; ++n) CHECK(count_valley_perms(n, k) == kValleyTable[k][n - 1]);
  CHECK(count_valley_perms(5, 1) == 88);
  CHECK(count_valley_perms(9, 4) == 7936);
  for (int n = 1; n <= 40; ++n) CHECK(count_valley_perms(n, 0) == (BigInt(1) << (n - 1)));
  CHECK(count_valley_perms(5, -1) == 0);
  CHECK(count_valley_perms(5, 3) == 0);
  CHECK_THROWS_AS(count_valley_perms(0, 0), std::invalid_argument);
}

TEST_CASE("row sums are factorials and do not overflow") {
  for (int n = 1; n <= 30; ++n) {
    BigInt p = 0, e = 0;
    for (int k = 0; k < n; ++k) {
      p += count_valley_perms(n, k);
      e += eulerian(n, k);
    }
    CHECK(p == vls::testing::factorial(n));
    CHECK(e == vls::testing::factorial(n));
  }
}

TEST_CASE("count_valley_perms matches brute force for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<BigInt> hist(static_cast<std::size_t>(n), 0);
    for (const auto& w : vls::testing::all_perms(n)) hist[brute_valleys(w)] += 1;
    for (int k = 0; k < n; ++k) CHECK(count_valley_perms(n, k) == hist[k]);
  }
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(4, 1) == 11);
  CHECK(eulerian(4, 2) == 11);
  for (int n = 1; n <= 8; ++n) {
    CHECK(eulerian(n, 0) == 1);
    for (int k = 0; k < n; ++k) CHECK(eulerian(n, k) == eulerian(n, n - 1 - k));
    CHECK(eulerian(n, n) == 0);
  }
  // Brute force: permutations of 4 with exactly one descent.
  int one_descent = 0;
  for (const auto& w : vls::testing::all_perms(4)) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    one_descent += d == 1;
  }
  CHECK(one_descent == 11);
}

TEST_CASE("count_valleyless_nk reproduces the published table") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 5; ++k) CHECK(count_valleyless_nk(n, k) == kValleylessTable[n - 1][k - 1]);
  CHECK(count_valleyless_nk(4, 3) == 35);
  CHECK(count_valleyless_nk(6, 5) == 1287);
  CHECK_THROWS_AS(count_valleyless_nk(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_valleyless_nk(0, 3), std::invalid_argument);
}

TEST_CASE("count_valleyless_npk spot values") {
  CHECK(count_valleyless_npk(10, 20, 5) == 325);
  for (int k = 1; k <= 6; ++k) CHECK(count_valleyless_npk(1, k, k) == 1);
  CHECK(count_valleyless_npk(2, 4, 2) == 1);
  CHECK(count_valleyless_npk(3, 4, 2) == 3);
  // Unsatisfiable combinations.
  CHECK(count_valleyless_npk(3, 4, 3) == 0);
  CHECK(count_valleyless_npk(3, 10, 3) == 0);
  CHECK(count_valleyless_npk(3, 2, 1) == 0);
  CHECK_THROWS_AS(count_valleyless_npk(3, 5, 0), std::invalid_argument);
}

TEST_CASE("summing the q-refined counts over the sum recovers the binomial closed form") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 4; ++k) {
      BigInt total = 0;
      for (int p = 1; p <= n * k; ++p) total += count_valleyless_npk(n, p, k);
      CHECK(total == count_valleyless_nk(n, k));
    }
  }
}
