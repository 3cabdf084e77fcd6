#include "valleyless/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace vls {

Orders min_orders(const Orders& a, const Orders& b) {
  return Orders{std::min(a.x, b.x), std::min(a.q, b.q), std::min(a.y, b.y)};
}

TruncatedSeries::TruncatedSeries(Orders orders) : orders_(orders) {
  if (orders.x < 0 || orders.q < 0 || orders.y < 0) {
    throw std::invalid_argument("truncation orders must be nonnegative");
  }
  coeffs_.resize(static_cast<std::size_t>(orders.x) * static_cast<std::size_t>(orders.q) *
                 static_cast<std::size_t>(orders.y));
}

TruncatedSeries TruncatedSeries::constant(const BigInt& c, Orders orders) {
  return monomial(c, Exponent{}, orders);
}

TruncatedSeries TruncatedSeries::monomial(const BigInt& c, Exponent e, Orders orders) {
  TruncatedSeries s(orders);
  s.add_to(e, c);
  return s;
}

bool TruncatedSeries::in_range(Exponent e) const {
  return e.x >= 0 && e.q >= 0 && e.y >= 0 && e.x < orders_.x && e.q < orders_.q && e.y < orders_.y;
}

BigInt TruncatedSeries::coeff(Exponent e) const {
  if (!in_range(e)) {
    throw std::out_of_range("exponent (" + std::to_string(e.x) + "," + std::to_string(e.q) + "," +
                            std::to_string(e.y) + ") is beyond the truncation orders");
  }
  return coeffs_[index(e.x, e.q, e.y)];
}

void TruncatedSeries::add_to(Exponent e, const BigInt& c) {
  if (in_range(e)) coeffs_[index(e.x, e.q, e.y)] += c;
}

std::vector<Term> TruncatedSeries::terms() const {
  std::vector<Term> out;
  for (int i = 0; i < orders_.x; ++i)
    for (int j = 0; j < orders_.q; ++j)
      for (int l = 0; l < orders_.y; ++l) {
        const auto& c = coeffs_[index(i, j, l)];
        if (c != 0) out.push_back(Term{Exponent{i, j, l}, c});
      }
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const auto& u = a.exponent;
    const auto& v = b.exponent;
    if (u.degree() != v.degree()) return u.degree() < v.degree();
    if (u.x != v.x) return u.x > v.x;
    return u.q > v.q;
  });
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

BigInt TruncatedSeries::constant_term() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.front();
}

BigInt TruncatedSeries::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(Orders orders) const {
  const Orders o = min_orders(orders, orders_);
  TruncatedSeries r(o);
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j < o.q; ++j)
      for (int l = 0; l < o.y; ++l) r.coeffs_[r.index(i, j, l)] = coeffs_[index(i, j, l)];
  return r;
}

TruncatedSeries TruncatedSeries::x_slice(int n) const {
  if (n < 0 || n >= orders_.x) throw std::out_of_range("x exponent beyond truncation order");
  TruncatedSeries r(Orders{1, orders_.q, orders_.y});
  for (int j = 0; j < orders_.q; ++j)
    for (int l = 0; l < orders_.y; ++l) r.coeffs_[r.index(0, j, l)] = coeffs_[index(n, j, l)];
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a.truncated(b.orders_);
  const Orders& o = r.orders_;
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j < o.q; ++j)
      for (int l = 0; l < o.y; ++l) r.coeffs_[r.index(i, j, l)] += b.coeffs_[b.index(i, j, l)];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(min_orders(a.orders_, b.orders_));
  const auto lhs = a.truncated(r.orders_).terms();
  const auto rhs = b.truncated(r.orders_).terms();
  for (const auto& s : lhs) {
    for (const auto& t : rhs) {
      const Exponent e{s.exponent.x + t.exponent.x, s.exponent.q + t.exponent.q,
                       s.exponent.y + t.exponent.y};
      if (r.in_range(e)) r.coeffs_[r.index(e.x, e.q, e.y)] += s.coeff * t.coeff;
    }
  }
  return r;
}

TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Orders o = min_orders(a.orders_, b.orders_);
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j < o.q; ++j)
      for (int l = 0; l < o.y; ++l)
        if (a.coeffs_[a.index(i, j, l)] != b.coeffs_[b.index(i, j, l)]) return false;
  return true;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_derivative_x(const TruncatedSeries& a) {
  const Orders& in = a.orders_;
  TruncatedSeries r(Orders{std::max(in.x - 1, 0), in.q, in.y});
  for (int i = 1; i < in.x; ++i)
    for (int j = 0; j < in.q; ++j)
      for (int l = 0; l < in.y; ++l) r.coeffs_[r.index(i - 1, j, l)] = i * a.coeffs_[a.index(i, j, l)];
  return r;
}

TruncatedSeries series_invert_unit(const TruncatedSeries& a) {
  const BigInt c0 = a.constant_term();
  if (a.coeffs_.empty()) return a;
  if (c0 != 1 && c0 != -1) {
    throw std::invalid_argument("series_invert_unit: constant term must be +1 or -1, got " +
                                to_decimal(c0));
  }
  // Solve a * b = 1 one coefficient at a time; index order visits every
  // componentwise-smaller exponent first.
  std::vector<Term> tail = a.terms();
  tail.erase(tail.begin());
  const Orders& o = a.orders_;
  TruncatedSeries b(o);
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j < o.q; ++j)
      for (int l = 0; l < o.y; ++l) {
        BigInt acc = (i == 0 && j == 0 && l == 0) ? 1 : 0;
        for (const auto& t : tail) {
          const auto& e = t.exponent;
          if (e.x <= i && e.q <= j && e.y <= l) acc -= t.coeff * b.coeffs_[b.index(i - e.x, j - e.q, l - e.y)];
        }
        b.coeffs_[b.index(i, j, l)] = c0 * acc;
      }
  return b;
}

TruncatedSeries substitute_x_times_q(const TruncatedSeries& a) {
  const Orders& o = a.orders_;
  TruncatedSeries r(o);
  for (int i = 0; i < o.x; ++i)
    for (int j = 0; j + i < o.q; ++j)
      for (int l = 0; l < o.y; ++l) r.coeffs_[r.index(i, i + j, l)] = a.coeffs_[a.index(i, j, l)];
  return r;
}

TruncatedSeries multiply_by_monomial(const TruncatedSeries& a, Exponent e) {
  if (e.x < 0 || e.q < 0 || e.y < 0) throw std::invalid_argument("negative monomial exponent");
  const Orders& in = a.orders_;
  TruncatedSeries r(Orders{in.x + e.x, in.q + e.q, in.y + e.y});
  for (int i = 0; i < in.x; ++i)
    for (int j = 0; j < in.q; ++j)
      for (int l = 0; l < in.y; ++l)
        r.coeffs_[r.index(i + e.x, j + e.q, l + e.y)] = a.coeffs_[a.index(i, j, l)];
  return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned n) {
  TruncatedSeries r = TruncatedSeries::constant(1, a.orders());
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

std::string to_plain(const TruncatedSeries& s) {
  const auto ts = s.terms();
  if (ts.empty()) return "0\n";
  std::string out;
  for (const auto& t : ts) {
    out += to_decimal(t.coeff);
    if (t.exponent.x) out += " x^" + std::to_string(t.exponent.x);
    if (t.exponent.q) out += " q^" + std::to_string(t.exponent.q);
    if (t.exponent.y) out += " y^" + std::to_string(t.exponent.y);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const TruncatedSeries& s) {
  auto terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({{"x", t.exponent.x},
                     {"q", t.exponent.q},
                     {"y", t.exponent.y},
                     {"coeff", to_decimal(t.coeff)}});
  }
  const auto& o = s.orders();
  return {{"terms", std::move(terms)}, {"orders", {{"x", o.x}, {"q", o.q}, {"y", o.y}}}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const auto& o = j.at("orders");
  TruncatedSeries s(Orders{o.at("x").get<int>(), o.at("q").get<int>(), o.at("y").get<int>()});
  for (const auto& t : j.at("terms")) {
    const Exponent e{t.value("x", 0), t.value("q", 0), t.value("y", 0)};
    if (!s.in_range(e)) throw std::invalid_argument("series term beyond its declared orders");
    s.add_to(e, from_decimal(t.at("coeff").get<std::string>()));
  }
  return s;
}

}  // namespace vls
