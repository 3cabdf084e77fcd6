#pragma once

#include <vector>

#include "valleyless/bigint.hpp"

namespace vls {

/// C(a, b); zero when b > a.
BigCount binomial(unsigned a, unsigned b);

/// P(n, k): permutations of length n with exactly k valleys, from
///   P(n,k) = 2(k+1) P(n-1,k) + (n-2k) P(n-1,k-1),  P(1,0) = 1.
/// Zero for k < 0 or k > (n-1)/2. Requires n >= 1.
BigCount count_valley_perms(int n, int k);

/// Rows 1..max_n of the P(n, k) triangle; row n has entries k = 0..(n-1)/2.
/// Row 0 is empty.
std::vector<std::vector<BigCount>> valley_perm_triangle(int max_n);

/// Eulerian number E(n, k) from E(n,k) = (k+1)E(n-1,k) + (n-k)E(n-1,k-1),
/// E(1,0) = 1. Requires n >= 1.
BigCount eulerian(int n, int k);

/// Valleyless sequences of length n with maximum entry exactly k:
/// C(n-1+2(k-1), 2(k-1)). Throws unless n >= 1 and k >= 1.
BigCount count_valleyless_nk(int n, int k);

/// Valleyless sequences of length n, entry sum p and maximum exactly k.
/// Read off the q-analog generating function with truncation orders chosen
/// from (n, p, k). Zero when no such sequence exists.
BigCount count_valleyless_npk(int n, int p, int k);

}  // namespace vls
