#include <doctest.h>

#include <random>
#include <stdexcept>

#include "valleyless/series.hpp"

using namespace vls;

namespace {

const Orders kX8{8, 1, 1};

TruncatedSeries poly_x(std::initializer_list<long long> c, int order = 8) {
  TruncatedSeries s(Orders{order, 1, 1});
  int i = 0;
  for (long long v : c) s.add_to(Exponent{i++, 0, 0}, v);
  return s;
}

TruncatedSeries mono(long long c, int x, int q, int y, Orders o) {
  return TruncatedSeries::monomial(c, Exponent{x, q, y}, o);
}

TruncatedSeries random_series(std::mt19937& rng, Orders o, bool unit) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> keep(0, 3);
  TruncatedSeries s(o);
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j < o.q; ++j)
      for (int l = 0; l < o.y; ++l)
        if (keep(rng) == 0) s.add_to(Exponent{i, j, l}, coef(rng));
  if (unit) {
    const BigInt c0 = s.constant_term();
    s.add_to(Exponent{}, (rng() % 2 ? 1 : -1) - c0);
  }
  return s;
}

}  // namespace

TEST_CASE("addition") {
  const auto a = poly_x({3, 0, -2, 7});
  CHECK(a + TruncatedSeries(kX8) == a);
  CHECK(series_add(poly_x({1, 1}), poly_x({1, -1})) == TruncatedSeries::constant(2, kX8));
  const Orders o{3, 3, 1};
  CHECK((mono(1, 1, 0, 0, o) + mono(1, 0, 1, 0, o)) + (mono(1, 1, 0, 0, o) - mono(1, 0, 1, 0, o)) ==
        mono(2, 1, 0, 0, o));
}

TEST_CASE("multiplication") {
  const auto a = poly_x({3, 0, -2, 7});
  CHECK(a * TruncatedSeries::constant(1, kX8) == a);
  CHECK(series_mul(poly_x({1, 1}), poly_x({1, 1})) == poly_x({1, 2, 1}));
  for (int m = 1; m <= 10; ++m) {
    TruncatedSeries geometric(Orders{m, 1, 1});
    for (int i = 0; i < m; ++i) geometric.add_to(Exponent{i, 0, 0}, 1);
    CHECK(poly_x({1, -1}, m) * geometric == TruncatedSeries::constant(1, Orders{m, 1, 1}));
  }
}

TEST_CASE("truncation orders travel with the value") {
  const auto a = poly_x({1, 2, 3}, 8);
  const auto b = poly_x({1, 1}, 4);
  CHECK((a + b).orders() == Orders{4, 1, 1});
  CHECK((a * b).orders() == Orders{4, 1, 1});
  CHECK(series_derivative_x(a).orders() == Orders{7, 1, 1});
  CHECK(a.truncated(Orders{2, 5, 5}).orders() == Orders{2, 1, 1});
  CHECK_THROWS_AS(b.coeff(Exponent{4, 0, 0}), std::out_of_range);
  // A series equals its own truncation.
  CHECK(a == a.truncated(Orders{2, 1, 1}));
}

TEST_CASE("derivative in x") {
  const Orders o{6, 1, 1};
  CHECK(series_derivative_x(mono(1, 2, 0, 0, o)) == mono(2, 1, 0, 0, Orders{5, 1, 1}));
  CHECK(series_derivative_x(TruncatedSeries::constant(9, o)).is_zero());
  // Term-wise: d/dx sum (2x)^i = sum (i+1) 2^(i+1) x^i.
  const auto inv = series_invert_unit(poly_x({1, -2}, 6));
  CHECK(series_derivative_x(inv) == poly_x({2, 8, 24, 64, 160}, 5));
}

TEST_CASE("unit inversion") {
  CHECK(series_invert_unit(TruncatedSeries::constant(1, kX8)) == TruncatedSeries::constant(1, kX8));
  CHECK(series_invert_unit(poly_x({1, -2})) == poly_x({1, 2, 4, 8, 16, 32, 64, 128}));
  CHECK(series_invert_unit(poly_x({-1, 1})) == poly_x({-1, -1, -1, -1, -1, -1, -1, -1}));
  const Orders o{1, 6, 6};
  TruncatedSeries geometric(o);
  for (int i = 0; i < 6; ++i) geometric.add_to(Exponent{0, i, i}, 1);
  CHECK(series_invert_unit(TruncatedSeries::constant(1, o) - mono(1, 0, 1, 1, o)) == geometric);
  CHECK_THROWS_AS(series_invert_unit(poly_x({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(series_invert_unit(poly_x({0, 1})), std::invalid_argument);
}

TEST_CASE("property: a * invert(a) == 1 and ring laws on random trivariate series") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const Orders o{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 4)};
    const auto a = random_series(rng, o, true);
    const auto b = random_series(rng, o, false);
    const auto c = random_series(rng, o, false);
    CHECK(a * series_invert_unit(a) == TruncatedSeries::constant(1, o));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(series_derivative_x(a * b) == series_derivative_x(a) * b + a * series_derivative_x(b));
  }
}

TEST_CASE("substitution x -> xq") {
  const Orders o{5, 12, 1};
  CHECK(substitute_x_times_q(mono(1, 1, 0, 0, o)) == mono(1, 1, 1, 0, o));
  CHECK(substitute_x_times_q(TruncatedSeries::constant(4, o)) == TruncatedSeries::constant(4, o));
  const auto b1 = mono(1, 1, 1, 0, o) * series_invert_unit(TruncatedSeries::constant(1, o) - mono(1, 1, 1, 0, o));
  TruncatedSeries expected(o);
  for (int i = 1; i < 5; ++i) expected.add_to(Exponent{i, 2 * i, 0}, 1);
  CHECK(substitute_x_times_q(b1) == expected);
  CHECK(substitute_x_times_q(b1).orders() == o);
}

TEST_CASE("monomial shift raises the orders") {
  const auto s = multiply_by_monomial(poly_x({1, 1}, 3), Exponent{2, 1, 0});
  CHECK(s.orders() == Orders{5, 2, 1});
  CHECK(s.coeff(Exponent{2, 1, 0}) == 1);
  CHECK(s.coeff(Exponent{3, 1, 0}) == 1);
  CHECK(s.coeff(Exponent{2, 0, 0}) == 0);
}

TEST_CASE("plain printing uses graded-lex order and omits zero exponents") {
  const Orders o{3, 3, 3};
  const auto s = TruncatedSeries::constant(-2, o) + mono(3, 0, 1, 1, o) + mono(5, 1, 0, 1, o) + mono(7, 2, 0, 0, o) +
                 mono(1, 1, 0, 0, o);
  CHECK(to_plain(s) == "-2\n1 x^1\n7 x^2\n5 x^1 y^1\n3 q^1 y^1\n");
  CHECK(to_plain(TruncatedSeries(o)) == "0\n");
}

TEST_CASE("json form") {
  const Orders o{3, 3, 3};
  BigInt big = 1;
  big <<= 100;
  const auto s = mono(5, 1, 0, 1, o) + TruncatedSeries::monomial(big, Exponent{0, 2, 0}, o);
  const auto j = to_json(s);
  CHECK(j.at("orders").at("q") == 3);
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[1].at("coeff") == "1267650600228229401496703205376");
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(
                      R"({"terms":[{"x":5,"q":0,"y":0,"coeff":"1"}],"orders":{"x":2,"q":1,"y":1}})")),
                  std::invalid_argument);
}

TEST_CASE("property: json round-trips exactly, orders included") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Orders o{1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)};
    auto s = random_series(rng, o, false);
    s = s * s * s * s;  // exercise multi-word coefficients
    const auto back = series_from_json(nlohmann::json::parse(to_json(s).dump()));
    CHECK(back.orders() == s.orders());
    CHECK(back == s);
  }
}
