#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "valleyless/bigint.hpp"

namespace vls {

/// Per-variable truncation orders. Coefficients with an exponent at or
/// beyond its variable's order are not represented (unknown).
struct Orders {
  int x = 1;
  int q = 1;
  int y = 1;

  friend bool operator==(const Orders&, const Orders&) = default;
};

struct Exponent {
  int x = 0;
  int q = 0;
  int y = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  int degree() const { return x + q + y; }
};

struct Term {
  Exponent exponent;
  BigInt coeff;
};

Orders min_orders(const Orders& a, const Orders& b);

/// Truncated power series in x, q, y with exact integer coefficients.
///
/// Storage is dense over [0, orders.x) x [0, orders.q) x [0, orders.y).
/// Equality compares coefficients on the common (per-variable minimum)
/// orders, so a series and its truncation compare equal.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(Orders{0, 0, 0}) {}
  explicit TruncatedSeries(Orders orders);

  static TruncatedSeries constant(const BigInt& c, Orders orders);
  static TruncatedSeries monomial(const BigInt& c, Exponent e, Orders orders);

  const Orders& orders() const { return orders_; }

  /// Coefficient of x^e.x q^e.q y^e.y. Throws std::out_of_range when e lies
  /// at or beyond the truncation orders.
  BigInt coeff(Exponent e) const;
  bool in_range(Exponent e) const;

  /// Adds c to one coefficient; silently ignores exponents past the orders.
  void add_to(Exponent e, const BigInt& c);

  /// Nonzero terms in graded-lex order: total degree ascending, ties broken
  /// by larger x exponent first, then larger q exponent.
  std::vector<Term> terms() const;
  bool is_zero() const;
  BigInt constant_term() const;
  /// Sum of all stored coefficients (evaluation at x = q = y = 1 of the
  /// retained polynomial).
  BigInt coefficient_sum() const;

  /// Drops everything at or beyond the given orders (clamped to current).
  TruncatedSeries truncated(Orders orders) const;

  /// Coefficient of x^n as a series in q and y, with x order 1.
  TruncatedSeries x_slice(int n) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::size_t index(int ex, int eq, int ey) const {
    return (static_cast<std::size_t>(ex) * static_cast<std::size_t>(orders_.q) +
            static_cast<std::size_t>(eq)) *
               static_cast<std::size_t>(orders_.y) +
           static_cast<std::size_t>(ey);
  }

  Orders orders_;
  std::vector<BigInt> coeffs_;

  friend TruncatedSeries series_derivative_x(const TruncatedSeries&);
  friend TruncatedSeries series_invert_unit(const TruncatedSeries&);
  friend TruncatedSeries substitute_x_times_q(const TruncatedSeries&);
  friend TruncatedSeries multiply_by_monomial(const TruncatedSeries&, Exponent);
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// d/dx; the x order drops by one.
TruncatedSeries series_derivative_x(const TruncatedSeries& a);

/// Multiplicative inverse of a series with constant term +1 or -1. Throws
/// std::invalid_argument for any other constant term.
TruncatedSeries series_invert_unit(const TruncatedSeries& a);

/// x^i q^j y^l -> x^i q^(i+j) y^l. Orders are unchanged.
TruncatedSeries substitute_x_times_q(const TruncatedSeries& a);

/// Multiplies by x^e.x q^e.q y^e.y; each order grows by the matching
/// exponent since the shifted coefficients stay exact that far.
TruncatedSeries multiply_by_monomial(const TruncatedSeries& a, Exponent e);

/// Integer power with exact truncation.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned n);

/// One line per nonzero term, "coeff x^a q^b y^c" with zero exponents
/// omitted, in terms() order. The zero series prints as "0".
std::string to_plain(const TruncatedSeries& s);

/// {"terms":[{"x":a,"q":b,"y":c,"coeff":"<decimal>"}],"orders":{...}}
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace vls
