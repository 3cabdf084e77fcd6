#pragma once

#include <utility>

#include "valleyless/series.hpp"

namespace vls {

/// (xq)_n = (1 - xq)(1 - xq^2)...(1 - xq^n), truncated to `orders`.
TruncatedSeries q_pochhammer(int n, Orders orders);

/// g_k(x), whose x^n coefficient counts length-n permutations with exactly
/// k valleys, truncated below x^x_order.
///
/// Iterates f_{j+1} = D_x(f_j) / (1 - (2j + 4) x) from f_0 = 1/(1 - 2x)
/// and returns x^(2k+1) f_k. Each derivative costs one order of x, which
/// the final shift by x^(2k+1) more than recovers.
TruncatedSeries gf_valley_perms(int k, int x_order);

/// The tabulated rational closed forms of g_0..g_4, expanded. Throws for k
/// outside 0..4.
TruncatedSeries gf_table1_closed_form(int k, int x_order);

/// V(x, y) = xy / (1 - x - y/(1 - x)) = xy(1 - x) / ((1 - x)^2 - y).
TruncatedSeries gf_valleyless_bivariate(int x_order, int y_order);

/// b_n(x, q): generating function of valleyless sequences with maximum n,
/// x marking length and q the entry sum, by
///   b_0 = 0,  b_1 = xq/(1 - xq),  b_n(x, q) = b_{n-1}(xq, q) / (1 - xq)^2.
TruncatedSeries b_n_recursive(int n, int x_order, int q_order);

/// b_n = x q^n (1 - x q^n) / (xq)_n^2. Requires n >= 1.
TruncatedSeries b_n_closed(int n, int x_order, int q_order);

/// V(x, q, y) = sum_{m >= 1} b_m(x, q) y^m. Terms with m >= orders.y cannot
/// reach a retained y power, so the truncated sum is exact.
TruncatedSeries v_xqy(Orders orders);

/// One step of the three-term recurrence
///   a_n = (2q a_{n-1} - q^2 a_{n-2}) / (1 - y q^n).
/// Valid for n >= 3; exposed separately so the n = 2 boundary can be probed.
TruncatedSeries a_n_step(int n, const TruncatedSeries& a_prev, const TruncatedSeries& a_prev2);

/// a_1 = yq/(1 - yq) and a_2 = (q^2 y + q^3 y^2)/((1 - yq)(1 - yq^2)); a_0 = 0.
TruncatedSeries a_n_base(int n, int q_order, int y_order);

/// a_n(q, y): the x^n coefficient of V(x, q, y) as a series in q and y
/// (x order 1), from the bases and a_n_step.
TruncatedSeries a_n_recurrence(int n, int q_order, int y_order);

/// (prod_{j=1}^{n-1} (1 + q^j),  prod_{j=1}^{n-1} (1 + q + ... + q^j)):
/// inversion generating polynomials of valleyless and of all permutations.
std::pair<TruncatedSeries, TruncatedSeries> q_inversion_products(int n, int q_order);

}  // namespace vls
