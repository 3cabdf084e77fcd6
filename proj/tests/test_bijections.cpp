#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "test_helpers.hpp"
#include "valleyless/bijections.hpp"

using namespace vls;
using vls::testing::all_perms;

namespace {

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Permutation> brute_with_valleys(int n, int k) {
  std::vector<Permutation> out;
  for (const auto& w : all_perms(n)) {
    int valleys = 0;
    for (std::size_t j = 1; j + 1 < w.size(); ++j) valleys += w[j] < w[j - 1] && w[j] < w[j + 1];
    if (valleys == k) out.emplace_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("theta encode and decode examples") {
  CHECK(theta_encode(Composition({2, 3, 2, 1, 1})) == std::vector<int>{2, 5, 7, 8});
  CHECK(theta_encode(Composition({6})).empty());
  CHECK(theta_encode(Composition({1, 1, 1})) == std::vector<int>{1, 2});
  CHECK(theta_decode(std::vector<int>{2, 5, 7, 8}, 9) == Composition({2, 3, 2, 1, 1}));
  CHECK(theta_decode(std::vector<int>{}, 6) == Composition({6}));
  CHECK(theta_decode(std::vector<int>{2, 1}, 3) == Composition({1, 1, 1}));
}

TEST_CASE("theta_decode rejects cut points outside 1..N-1") {
  CHECK_THROWS_AS(theta_decode(std::vector<int>{0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(theta_decode(std::vector<int>{4}, 4), std::invalid_argument);
  CHECK_THROWS_AS(theta_decode(std::vector<int>{2, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(theta_decode(std::vector<int>{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
}

TEST_CASE("theta round-trips every composition of N <= 12") {
  for (int total = 1; total <= 12; ++total) {
    const auto comps = compositions_of(total);
    REQUIRE(comps.size() == (std::size_t{1} << (total - 1)));
    REQUIRE(std::set<Composition>(comps.begin(), comps.end()).size() == comps.size());
    for (const auto& c : comps) {
      const auto cuts = theta_encode(c);
      REQUIRE(cuts.size() == c.size() - 1);
      REQUIRE(theta_decode(cuts, total) == c);
    }
  }
}

TEST_CASE("permutation <-> composition examples") {
  CHECK(valleyless_perm_to_composition(Permutation({1})) == Composition({1}));
  CHECK(valleyless_perm_to_composition(Permutation({1, 2, 3})) == Composition({3}));
  CHECK(valleyless_perm_to_composition(Permutation({3, 2, 1})) == Composition({1, 1, 1}));
  CHECK(composition_to_valleyless_perm(Composition({1})) == Permutation({1}));
  CHECK(composition_to_valleyless_perm(Composition({3})) == Permutation({1, 2, 3}));
  CHECK(composition_to_valleyless_perm(Composition({1, 1, 1})) == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(valleyless_perm_to_composition(Permutation({2, 1, 3})), std::invalid_argument);
}

TEST_CASE("valleyless permutations biject onto compositions for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Composition> images;
    std::size_t sources = 0;
    for (const auto& w : all_perms(n)) {
      const Permutation p(w);
      if (!is_valleyless(p)) continue;
      ++sources;
      const auto c = valleyless_perm_to_composition(p);
      REQUIRE(c.total() == n);
      REQUIRE(composition_to_valleyless_perm(c) == p);
      images.insert(c);
    }
    CHECK(images.size() == sources);
    const auto all = compositions_of(n);
    CHECK(images == std::set<Composition>(all.begin(), all.end()));
    for (const auto& c : all) CHECK(is_valleyless(composition_to_valleyless_perm(c)));
  }
}

TEST_CASE("doubling construction") {
  CHECK(generate_valleyless_permutations(1) == std::vector<Permutation>{Permutation({1})});
  CHECK(sorted(generate_valleyless_permutations(3)) ==
        std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 3, 1}),
                                 Permutation({3, 2, 1})});
  // Prepend child first, then append.
  CHECK(generate_valleyless_permutations(3) ==
        std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({2, 3, 1}), Permutation({1, 3, 2}),
                                 Permutation({3, 2, 1})});
  CHECK(generate_valleyless_permutations(10).size() == 512);
  CHECK_THROWS_AS(generate_valleyless_permutations(0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const auto gen = sorted(generate_valleyless_permutations(n));
    CHECK(std::adjacent_find(gen.begin(), gen.end()) == gen.end());
    CHECK(gen.size() == (std::size_t{1} << (n - 1)));
    CHECK(gen == brute_with_valleys(n, 0));
  }
}

TEST_CASE("k-valley generator examples") {
  CHECK(sorted(generate_k_valley_permutations(3, 1)) ==
        std::vector<Permutation>{Permutation({2, 1, 3}), Permutation({3, 1, 2})});
  CHECK(generate_k_valley_permutations(5, 1).size() == 88);
  CHECK(generate_k_valley_permutations(4, 2).empty());
  CHECK(generate_k_valley_permutations(4, -1).empty());
  for (int n = 1; n <= 8; ++n) {
    CHECK(generate_k_valley_permutations(n, 0) == generate_valleyless_permutations(n));
  }
}

TEST_CASE("k-valley generator equals the brute-force sets for n <= 8, duplicate free") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= (n - 1) / 2 + 1; ++k) {
      const auto raw = generate_k_valley_permutations(n, k);
      const auto gen = sorted(raw);
      REQUIRE(std::adjacent_find(gen.begin(), gen.end()) == gen.end());
      REQUIRE(gen == brute_with_valleys(n, k));
    }
  }
}
