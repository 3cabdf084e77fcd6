#include "valleyless/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "valleyless/generating_functions.hpp"

namespace vls {

BigCount binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigCount r = 1;
  // r stays integral: after step i it equals C(a - b + i, i).
  for (unsigned i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

std::vector<std::vector<BigCount>> valley_perm_triangle(int max_n) {
  std::vector<std::vector<BigCount>> rows(static_cast<std::size_t>(std::max(max_n, 0)) + 1);
  if (max_n < 1) return rows;
  rows[1] = {1};
  for (int n = 2; n <= max_n; ++n) {
    const auto& prev = rows[static_cast<std::size_t>(n) - 1];
    auto at = [&prev](int k) -> BigCount {
      return (k < 0 || k >= static_cast<int>(prev.size())) ? BigCount(0) : prev[static_cast<std::size_t>(k)];
    };
    const int top = (n - 1) / 2;
    auto& row = rows[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
      row[static_cast<std::size_t>(k)] = 2 * (k + 1) * at(k) + (n - 2 * k) * at(k - 1);
    }
  }
  return rows;
}

BigCount count_valley_perms(int n, int k) {
  if (n < 1) throw std::invalid_argument("count_valley_perms: n must be at least 1");
  if (k < 0 || k > (n - 1) / 2) return 0;
  return valley_perm_triangle(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigCount eulerian(int n, int k) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be at least 1");
  if (k < 0 || k > n - 1) return 0;
  std::vector<BigCount> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const BigCount same = j < m - 1 ? row[static_cast<std::size_t>(j)] : BigCount(0);
      const BigCount lower = j > 0 ? row[static_cast<std::size_t>(j) - 1] : BigCount(0);
      next[static_cast<std::size_t>(j)] = (j + 1) * same + (m - j) * lower;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigCount count_valleyless_nk(int n, int k) {
  if (n < 1) throw std::invalid_argument("count_valleyless_nk: n must be at least 1");
  if (k < 1) throw std::invalid_argument("count_valleyless_nk: maximum entry must be at least 1");
  const auto twice = static_cast<unsigned>(2 * (k - 1));
  return binomial(static_cast<unsigned>(n - 1) + twice, twice);
}

BigCount count_valleyless_npk(int n, int p, int k) {
  if (n < 1) throw std::invalid_argument("count_valleyless_npk: n must be at least 1");
  if (k < 1) throw std::invalid_argument("count_valleyless_npk: maximum entry must be at least 1");
  // One entry equals k and the rest are at least 1 and at most k.
  if (p < n + k - 1 || static_cast<long long>(p) > static_cast<long long>(n) * k) return 0;
  const auto v = v_xqy(Orders{n + 1, p + 1, k + 1});
  return v.coeff(Exponent{n, p, k});
}

}  // namespace vls
