#include "valleyless/generating_functions.hpp"

#include <stdexcept>
#include <vector>

namespace vls {

namespace {

// 1 - c x^i q^j y^l
TruncatedSeries one_minus(const BigInt& c, Exponent e, Orders o) {
  return TruncatedSeries::constant(1, o) - TruncatedSeries::monomial(c, e, o);
}

TruncatedSeries polynomial_in_x(const std::vector<long long>& coeffs, int x_order) {
  TruncatedSeries p(Orders{x_order, 1, 1});
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_to(Exponent{static_cast<int>(i), 0, 0}, coeffs[i]);
  return p;
}

}  // namespace

TruncatedSeries q_pochhammer(int n, Orders orders) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be nonnegative");
  TruncatedSeries r = TruncatedSeries::constant(1, orders);
  for (int i = 1; i <= n; ++i) r = r * one_minus(1, Exponent{1, i, 0}, orders);
  return r;
}

TruncatedSeries gf_valley_perms(int k, int x_order) {
  if (k < 0) throw std::invalid_argument("gf_valley_perms: k must be nonnegative");
  if (x_order < 1) throw std::invalid_argument("gf_valley_perms: x_order must be positive");
  const Orders o{x_order, 1, 1};
  TruncatedSeries f = series_invert_unit(one_minus(2, Exponent{1, 0, 0}, o));
  for (int j = 0; j < k; ++j) {
    const auto d = series_derivative_x(f);
    f = d * series_invert_unit(one_minus(2 * j + 4, Exponent{1, 0, 0}, d.orders()));
  }
  return multiply_by_monomial(f, Exponent{2 * k + 1, 0, 0}).truncated(o);
}

TruncatedSeries gf_table1_closed_form(int k, int x_order) {
  if (k < 0 || k > 4) throw std::invalid_argument("gf_table1_closed_form: k must be in 0..4");
  if (x_order < 1) throw std::invalid_argument("gf_table1_closed_form: x_order must be positive");
  struct Row {
    long long scale;
    std::vector<long long> numerator;
  };
  static const Row rows[] = {
      {1, {1}},
      {2, {1}},
      {16, {1, -3}},
      {16, {17, -184, 636, -720}},
      {256, {31, -788, 8096, -43132, 126072, -192672, 120960}},
  };
  const Orders o{x_order, 1, 1};
  const Row& row = rows[k];
  auto numerator = multiply_by_monomial(BigInt(row.scale) * polynomial_in_x(row.numerator, x_order),
                                        Exponent{2 * k + 1, 0, 0})
                       .truncated(o);
  // Denominator: prod_{i=1}^{k+1} (1 - 2 i x)^(k + 2 - i).
  TruncatedSeries denominator = TruncatedSeries::constant(1, o);
  for (int i = 1; i <= k + 1; ++i) {
    denominator = denominator * series_pow(one_minus(2 * i, Exponent{1, 0, 0}, o),
                                           static_cast<unsigned>(k + 2 - i));
  }
  return numerator * series_invert_unit(denominator);
}

TruncatedSeries gf_valleyless_bivariate(int x_order, int y_order) {
  const Orders o{x_order, 1, y_order};
  const auto one_minus_x = one_minus(1, Exponent{1, 0, 0}, o);
  const auto numerator = TruncatedSeries::monomial(1, Exponent{1, 0, 1}, o) * one_minus_x;
  const auto denominator = one_minus_x * one_minus_x - TruncatedSeries::monomial(1, Exponent{0, 0, 1}, o);
  return numerator * series_invert_unit(denominator);
}

TruncatedSeries b_n_recursive(int n, int x_order, int q_order) {
  if (n < 0) throw std::invalid_argument("b_n_recursive: n must be nonnegative");
  const Orders o{x_order, q_order, 1};
  if (n == 0) return TruncatedSeries(o);
  const auto one_minus_xq = one_minus(1, Exponent{1, 1, 0}, o);
  TruncatedSeries b = TruncatedSeries::monomial(1, Exponent{1, 1, 0}, o) * series_invert_unit(one_minus_xq);
  const auto inv_square = series_invert_unit(one_minus_xq * one_minus_xq);
  for (int m = 2; m <= n; ++m) b = substitute_x_times_q(b) * inv_square;
  return b;
}

TruncatedSeries b_n_closed(int n, int x_order, int q_order) {
  if (n < 1) throw std::invalid_argument("b_n_closed: n must be at least 1");
  const Orders o{x_order, q_order, 1};
  const auto numerator =
      TruncatedSeries::monomial(1, Exponent{1, n, 0}, o) * one_minus(1, Exponent{1, n, 0}, o);
  const auto poch = q_pochhammer(n, o);
  return numerator * series_invert_unit(poch * poch);
}

TruncatedSeries v_xqy(Orders orders) {
  TruncatedSeries v(orders);
  for (int m = 1; m < orders.y; ++m) {
    // Every sequence with maximum m has entry sum at least m.
    if (m >= orders.q) break;
    // b_m carries no y, so its coefficients land exactly on y^m.
    for (const auto& t : b_n_closed(m, orders.x, orders.q).terms()) {
      v.add_to(Exponent{t.exponent.x, t.exponent.q, m}, t.coeff);
    }
  }
  return v;
}

TruncatedSeries a_n_step(int n, const TruncatedSeries& a_prev, const TruncatedSeries& a_prev2) {
  const Orders o = min_orders(a_prev.orders(), a_prev2.orders());
  const auto numerator = TruncatedSeries::monomial(2, Exponent{0, 1, 0}, o) * a_prev -
                         TruncatedSeries::monomial(1, Exponent{0, 2, 0}, o) * a_prev2;
  return numerator * series_invert_unit(one_minus(1, Exponent{0, n, 1}, o));
}

TruncatedSeries a_n_base(int n, int q_order, int y_order) {
  const Orders o{1, q_order, y_order};
  const auto one_minus_yq = one_minus(1, Exponent{0, 1, 1}, o);
  switch (n) {
    case 0:
      return TruncatedSeries(o);
    case 1:
      return TruncatedSeries::monomial(1, Exponent{0, 1, 1}, o) * series_invert_unit(one_minus_yq);
    case 2: {
      const auto numerator =
          TruncatedSeries::monomial(1, Exponent{0, 2, 1}, o) + TruncatedSeries::monomial(1, Exponent{0, 3, 2}, o);
      return numerator * series_invert_unit(one_minus_yq * one_minus(1, Exponent{0, 2, 1}, o));
    }
    default:
      throw std::invalid_argument("a_n_base: only n = 0, 1, 2 are bases");
  }
}

TruncatedSeries a_n_recurrence(int n, int q_order, int y_order) {
  if (n < 0) throw std::invalid_argument("a_n_recurrence: n must be nonnegative");
  if (n <= 2) return a_n_base(n, q_order, y_order);
  TruncatedSeries older = a_n_base(1, q_order, y_order);
  TruncatedSeries newer = a_n_base(2, q_order, y_order);
  for (int m = 3; m <= n; ++m) {
    auto next = a_n_step(m, newer, older);
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

std::pair<TruncatedSeries, TruncatedSeries> q_inversion_products(int n, int q_order) {
  if (n < 1) throw std::invalid_argument("q_inversion_products: n must be at least 1");
  const Orders o{1, q_order, 1};
  TruncatedSeries valleyless = TruncatedSeries::constant(1, o);
  TruncatedSeries all = TruncatedSeries::constant(1, o);
  for (int j = 1; j < n; ++j) {
    valleyless = valleyless * (TruncatedSeries::constant(1, o) + TruncatedSeries::monomial(1, Exponent{0, j, 0}, o));
    TruncatedSeries bracket(o);
    for (int i = 0; i <= j; ++i) bracket.add_to(Exponent{0, i, 0}, 1);
    all = all * bracket;
  }
  return {valleyless, all};
}

}  // namespace vls
