#include "valleyless/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vls::oracle {

Config Config::from_env() {
  Config cfg;
  if (const char* v = std::getenv("VLS_MAX_BRUTE_N"); v != nullptr && *v != '\0') {
    try {
      std::size_t used = 0;
      const int n = std::stoi(v, &used);
      if (used != std::string(v).size() || n < 1) throw std::invalid_argument(v);
      cfg.max_perm_n = n;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("VLS_MAX_BRUTE_N must be a positive integer, got '") + v + "'");
    }
  }
  return cfg;
}

namespace {

void check_perm_cap(int n, const Config& cfg) {
  if (n < 1) throw std::invalid_argument("oracle: n must be at least 1");
  if (n > cfg.max_perm_n) {
    throw std::invalid_argument("oracle: n = " + std::to_string(n) + " exceeds the permutation cap " +
                                std::to_string(cfg.max_perm_n));
  }
}

// base^exp, saturating at limit + 1.
std::uint64_t capped_power(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
    r *= base;
  }
  return r;
}

// C(a, b), saturating at limit + 1.
std::uint64_t capped_choose(int a, int b, std::uint64_t limit) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

void for_each_permutation(int n, const WordVisitor& visit, const Config& cfg) {
  check_perm_cap(n, cfg);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enum_permutations(int n, const Config& cfg) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&out](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); }, cfg);
  return out;
}

void for_each_bounded_sequence(int n, int max_entry, const WordVisitor& visit, const Config& cfg) {
  if (n < 1 || max_entry < 1) throw std::invalid_argument("oracle: n and max_entry must be positive");
  if (capped_power(static_cast<std::uint64_t>(max_entry), n, cfg.max_universe) > cfg.max_universe) {
    throw std::invalid_argument("oracle: " + std::to_string(max_entry) + "^" + std::to_string(n) +
                                " sequences exceed the universe cap");
  }
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(w);
    // Odometer increment, last position fastest.
    std::size_t i = w.size();
    while (i > 0 && w[i - 1] == max_entry) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

std::vector<Sequence> enum_bounded_sequences(int n, int max_entry, const Config& cfg) {
  std::vector<Sequence> out;
  for_each_bounded_sequence(n, max_entry, [&out](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); }, cfg);
  return out;
}

void for_each_sequence_with_sum_at_most(int n, int sum_cap, const WordVisitor& visit, const Config& cfg) {
  if (n < 1) throw std::invalid_argument("oracle: n must be positive");
  if (sum_cap < n) return;
  // Sequences of n positive parts with sum <= S number C(S, n).
  if (capped_choose(sum_cap, n, cfg.max_universe) > cfg.max_universe) {
    throw std::invalid_argument("oracle: sequences with sum <= " + std::to_string(sum_cap) +
                                " exceed the universe cap");
  }
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  int sum = n;
  while (true) {
    visit(w);
    // Increment the last entry that can still grow; reset everything after it.
    std::size_t i = w.size();
    while (i > 0) {
      --i;
      if (sum + 1 <= sum_cap) {
        ++w[i];
        ++sum;
        break;
      }
      sum -= w[i] - 1;
      w[i] = 1;
      if (i == 0) return;
    }
  }
}

bool brute_is_valleyless(std::span<const int> s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (s[j] < std::min(s[i], s[k])) return false;
  return true;
}

int brute_count_valleys(std::span<const int> s) {
  int c = 0;
  for (std::size_t j = 1; j + 1 < s.size(); ++j) c += (s[j] < s[j - 1] && s[j] < s[j + 1]) ? 1 : 0;
  return c;
}

long long brute_inversions(std::span<const int> w) {
  long long c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j] ? 1 : 0;
  return c;
}

StatHistogram brute_valley_histogram(int n, const Config& cfg) {
  StatHistogram h;
  for_each_permutation(n, [&h](std::span<const int> w) { h[brute_count_valleys(w)] += 1; }, cfg);
  return h;
}

StatHistogram brute_descent_histogram(int n, const Config& cfg) {
  StatHistogram h;
  for_each_permutation(n, [&h](std::span<const int> w) {
    long long d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1] ? 1 : 0;
    h[d] += 1;
  }, cfg);
  return h;
}

BigCount brute_valleyless_count(int n, int max_entry, const Config& cfg) {
  BigCount c = 0;
  for_each_bounded_sequence(n, max_entry, [&](std::span<const int> w) {
    if (*std::max_element(w.begin(), w.end()) == max_entry && brute_is_valleyless(w)) c += 1;
  }, cfg);
  return c;
}

TruncatedSeries brute_valleyless_qy_polynomial(int n, int sum_cap, const Config& cfg) {
  TruncatedSeries poly(Orders{1, sum_cap + 1, sum_cap + 1});
  for_each_sequence_with_sum_at_most(n, sum_cap, [&](std::span<const int> w) {
    if (!brute_is_valleyless(w)) return;
    const int sum = std::accumulate(w.begin(), w.end(), 0);
    const int max = *std::max_element(w.begin(), w.end());
    poly.add_to(Exponent{0, sum, max}, 1);
  }, cfg);
  return poly;
}

std::pair<TruncatedSeries, TruncatedSeries> brute_inversion_polynomials(int n, const Config& cfg) {
  const Orders o{1, n * (n - 1) / 2 + 1, 1};
  TruncatedSeries valleyless(o);
  TruncatedSeries all(o);
  for_each_permutation(n, [&](std::span<const int> w) {
    const Exponent e{0, static_cast<int>(brute_inversions(w)), 0};
    all.add_to(e, 1);
    if (brute_is_valleyless(w)) valleyless.add_to(e, 1);
  }, cfg);
  return {valleyless, all};
}

std::vector<Permutation> brute_k_valley_permutations(int n, int k, const Config& cfg) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](std::span<const int> w) {
    if (brute_count_valleys(w) == k) out.emplace_back(std::vector<int>(w.begin(), w.end()));
  }, cfg);
  return out;
}

}  // namespace vls::oracle
