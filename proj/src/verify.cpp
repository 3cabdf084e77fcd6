#include "valleyless/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include "valleyless/bijections.hpp"
#include "valleyless/counting.hpp"
#include "valleyless/generating_functions.hpp"

namespace vls {

namespace {

using Failure = std::optional<nlohmann::json>;

nlohmann::json word_json(std::span<const int> w) { return std::vector<int>(w.begin(), w.end()); }

nlohmann::json mismatch(const std::string& route, int n, int k, const BigInt& expected, const BigInt& got) {
  return {{"route", route}, {"n", n}, {"k", k}, {"expected", to_decimal(expected)}, {"got", to_decimal(got)}};
}

BigCount factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  template <class Fn>
  void run(const std::string& name, bool enabled, Fn&& body) {
    if (!enabled) return;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    Failure f;
    try {
      f = body();
    } catch (const std::exception& e) {
      f = nlohmann::json{{"error", e.what()}};
    }
    r.passed = !f.has_value();
    r.counterexample = f.value_or(nullptr);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
};

}  // namespace

VerifyLimits VerifyLimits::capped(int max_n) {
  VerifyLimits l;
  auto clamp = [max_n](int& v) { v = std::max(0, std::min(v, max_n)); };
  for (int* v : {&l.perm_n, &l.brute_count_n, &l.factorial_n, &l.seq_n, &l.comp_total, &l.gf_n, &l.table1_order,
                 &l.bivariate_n, &l.b_n, &l.qy_n}) {
    clamp(*v);
  }
  return l;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"status", c.passed ? "pass" : "fail"},
                   {"counterexample", c.counterexample},
                   {"elapsed_ms", c.elapsed_ms}});
  }
  return {{"checks", std::move(arr)}};
}

VerificationReport verify_all(const VerifyLimits& limits) {
  VerificationReport report;
  Runner run(report);
  const auto& cfg = limits.oracle;
  const auto p_route = limits.valley_perm_count ? limits.valley_perm_count
                                                : std::function<BigCount(int, int)>(count_valley_perms);

  // seq_core

  run.run("inversion_table_round_trip", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      Failure f;
      oracle::for_each_permutation(n, [&](std::span<const int> w) {
        if (f) return;
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        if (permutation_from_inversion_table(inversion_table(p)) != p) f = nlohmann::json{{"perm", word_json(w)}};
      }, cfg);
      if (f) return f;
    }
    return std::nullopt;
  });

  run.run("inversion_count_matches_pair_count", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      Failure f;
      oracle::for_each_permutation(n, [&](std::span<const int> w) {
        if (f) return;
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        if (inversion_count(p) != oracle::brute_inversions(w)) f = nlohmann::json{{"perm", word_json(w)}};
      }, cfg);
      if (f) return f;
    }
    return std::nullopt;
  });

  run.run("valleyless_iff_no_valleys_on_permutations", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      Failure f;
      oracle::for_each_permutation(n, [&](std::span<const int> w) {
        if (!f && is_valleyless(w) != (count_valleys(w) == 0)) f = nlohmann::json{{"perm", word_json(w)}};
      }, cfg);
      if (f) return f;
    }
    return std::nullopt;
  });

  run.run("valleyless_theorem2_characterization", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      Failure f;
      oracle::for_each_permutation(n, [&](std::span<const int> w) {
        if (f) return;
        const auto a = inversion_table(Permutation(std::vector<int>(w.begin(), w.end())));
        bool extreme = true;
        for (int k = 1; k <= n; ++k) {
          const int v = a.at(static_cast<std::size_t>(k) - 1);
          extreme = extreme && (v == 0 || v == n - k);
        }
        if (extreme != oracle::brute_is_valleyless(w)) f = nlohmann::json{{"perm", word_json(w)}};
      }, cfg);
      if (f) return f;
    }
    return std::nullopt;
  });

  run.run("valleyless_triple_vs_unimodal", limits.seq_n >= 1 && limits.seq_entry >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.seq_n; ++n) {
      Failure f;
      oracle::for_each_bounded_sequence(n, limits.seq_entry, [&](std::span<const int> w) {
        if (f) return;
        const bool triple = oracle::brute_is_valleyless(w);
        if (is_valleyless(w) != triple || is_unimodal(w) != triple ||
            (triple && count_valleys(w) != 0)) {
          f = nlohmann::json{{"sequence", word_json(w)}};
        }
      }, cfg);
      if (f) return f;
    }
    return std::nullopt;
  });

  // bijections

  run.run("theta_round_trip", limits.comp_total >= 1, [&]() -> Failure {
    for (int total = 1; total <= limits.comp_total; ++total) {
      for (const auto& c : compositions_of(total)) {
        if (theta_decode(theta_encode(c), total) != c) return nlohmann::json{{"composition", word_json(c.parts())}};
      }
    }
    return std::nullopt;
  });

  run.run("valleyless_perm_composition_bijection", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      std::set<Composition> images;
      std::size_t sources = 0;
      Failure f;
      oracle::for_each_permutation(n, [&](std::span<const int> w) {
        if (f || !oracle::brute_is_valleyless(w)) return;
        ++sources;
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        const auto c = valleyless_perm_to_composition(p);
        if (c.total() != n || composition_to_valleyless_perm(c) != p) f = nlohmann::json{{"perm", word_json(w)}};
        images.insert(c);
      }, cfg);
      if (f) return f;
      if (images.size() != sources || images.size() != compositions_of(n).size()) {
        return nlohmann::json{{"n", n}, {"valleyless", sources}, {"distinct_images", images.size()}};
      }
    }
    return std::nullopt;
  });

  run.run("valleyless_generator_matches_brute_force", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      auto gen = generate_valleyless_permutations(n);
      std::sort(gen.begin(), gen.end());
      if (gen != oracle::brute_k_valley_permutations(n, 0, cfg) || gen.size() != (std::size_t{1} << (n - 1))) {
        return nlohmann::json{{"n", n}};
      }
    }
    return std::nullopt;
  });

  run.run("k_valley_generator_matches_brute_force", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      for (int k = 0; k <= (n - 1) / 2 + 1; ++k) {
        auto gen = generate_k_valley_permutations(n, k);
        std::sort(gen.begin(), gen.end());
        if (std::adjacent_find(gen.begin(), gen.end()) != gen.end() ||
            gen != oracle::brute_k_valley_permutations(n, k, cfg)) {
          return nlohmann::json{{"n", n}, {"k", k}};
        }
      }
    }
    return std::nullopt;
  });

  // counting

  run.run("valley_perm_rows_sum_to_factorial", limits.factorial_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.factorial_n; ++n) {
      BigCount s = 0;
      for (int k = 0; k <= (n - 1) / 2; ++k) s += p_route(n, k);
      if (s != factorial(n)) return mismatch("recurrence-row-sum", n, -1, factorial(n), s);
    }
    return std::nullopt;
  });

  run.run("eulerian_rows_sum_to_factorial", limits.factorial_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.factorial_n; ++n) {
      BigCount s = 0;
      for (int k = 0; k < n; ++k) s += eulerian(n, k);
      if (s != factorial(n)) return mismatch("eulerian-row-sum", n, -1, factorial(n), s);
    }
    return std::nullopt;
  });

  run.run("eulerian_vs_brute_descents", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      const auto h = oracle::brute_descent_histogram(n, cfg);
      for (int k = 0; k < n; ++k) {
        const auto it = h.find(k);
        const BigCount want = it == h.end() ? BigCount(0) : it->second;
        if (eulerian(n, k) != want) return mismatch("eulerian-recurrence", n, k, want, eulerian(n, k));
      }
    }
    return std::nullopt;
  });

  run.run("valley_perms_recurrence_gf_brute", limits.brute_count_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.brute_count_n; ++n) {
      const auto h = oracle::brute_valley_histogram(n, cfg);
      for (int k = 0; k <= (n - 1) / 2 + 1; ++k) {
        const auto it = h.find(k);
        const BigCount want = it == h.end() ? BigCount(0) : it->second;
        const BigCount rec = p_route(n, k);
        if (rec != want) return mismatch("eq4-recurrence", n, k, want, rec);
        const BigCount gf = gf_valley_perms(k, n + 1).coeff(Exponent{n, 0, 0});
        if (gf != want) return mismatch("eq3-series", n, k, want, gf);
      }
    }
    return std::nullopt;
  });

  run.run("valleyless_nk_vs_npk_and_brute", limits.seq_n >= 1 && limits.seq_max_k >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.seq_n; ++n) {
      for (int k = 1; k <= limits.seq_max_k; ++k) {
        const BigCount closed = count_valleyless_nk(n, k);
        const BigCount brute = oracle::brute_valleyless_count(n, k, cfg);
        if (closed != brute) return mismatch("binomial-closed-form", n, k, brute, closed);
        const auto v = v_xqy(Orders{n + 1, n * k + 1, k + 1});
        BigCount marginal = 0;
        for (int p = n; p <= n * k; ++p) marginal += v.coeff(Exponent{n, p, k});
        if (marginal != brute) return mismatch("q-analog-marginal", n, k, brute, marginal);
      }
    }
    return std::nullopt;
  });

  // series

  run.run("table1_closed_forms_vs_recursion", limits.table1_order >= 1, [&]() -> Failure {
    for (int k = 0; k <= 4; ++k) {
      const auto closed = gf_table1_closed_form(k, limits.table1_order);
      const auto iterated = gf_valley_perms(k, limits.table1_order);
      if (!(closed == iterated)) {
        for (int n = 0; n < limits.table1_order; ++n) {
          const auto a = closed.coeff(Exponent{n, 0, 0});
          const auto b = iterated.coeff(Exponent{n, 0, 0});
          if (a != b) return mismatch("table1-closed-form", n, k, b, a);
        }
      }
    }
    return std::nullopt;
  });

  run.run("valley_gf_vs_recurrence", limits.gf_n >= 1 && limits.gf_k >= 0, [&]() -> Failure {
    for (int k = 0; k <= limits.gf_k; ++k) {
      const auto g = gf_valley_perms(k, limits.gf_n + 1);
      for (int n = 1; n <= limits.gf_n; ++n) {
        const BigCount rec = p_route(n, k);
        const BigCount coef = g.coeff(Exponent{n, 0, 0});
        if (rec != coef) return mismatch("eq4-recurrence", n, k, coef, rec);
      }
    }
    return std::nullopt;
  });

  run.run("bivariate_gf_vs_binomial", limits.bivariate_n >= 1 && limits.bivariate_k >= 1, [&]() -> Failure {
    const auto v = gf_valleyless_bivariate(limits.bivariate_n + 1, limits.bivariate_k + 1);
    for (int n = 1; n <= limits.bivariate_n; ++n) {
      for (int k = 1; k <= limits.bivariate_k; ++k) {
        const auto coef = v.coeff(Exponent{n, 0, k});
        const auto want = binomial(static_cast<unsigned>(n - 1 + 2 * (k - 1)), static_cast<unsigned>(2 * (k - 1)));
        if (coef != want) return mismatch("bivariate-series", n, k, want, coef);
      }
    }
    return std::nullopt;
  });

  run.run("b_n_recursive_vs_closed", limits.b_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.b_n; ++n) {
      if (!(b_n_recursive(n, limits.b_x_order, limits.b_q_order) == b_n_closed(n, limits.b_x_order, limits.b_q_order))) {
        return nlohmann::json{{"n", n}};
      }
    }
    return std::nullopt;
  });

  run.run("q_analog_vs_three_term_recurrence_vs_brute", limits.qy_n >= 1 && limits.qy_sum_cap >= 1, [&]() -> Failure {
    const int cap = limits.qy_sum_cap;
    const auto v = v_xqy(Orders{limits.qy_n + 1, cap + 1, cap + 1});
    for (int n = 1; n <= limits.qy_n; ++n) {
      const auto slice = v.x_slice(n);
      const auto rec = a_n_recurrence(n, cap + 1, cap + 1);
      const auto brute = oracle::brute_valleyless_qy_polynomial(n, cap, cfg);
      if (!(slice == brute)) return nlohmann::json{{"route", "q-analog-slice"}, {"n", n}};
      if (!(rec == brute)) return nlohmann::json{{"route", "three-term-recurrence"}, {"n", n}};
    }
    return std::nullopt;
  });

  run.run("inversion_products_vs_brute", limits.perm_n >= 1, [&]() -> Failure {
    for (int n = 1; n <= limits.perm_n; ++n) {
      const auto [valleyless, all] = oracle::brute_inversion_polynomials(n, cfg);
      const auto [prod_v, prod_all] = q_inversion_products(n, n * (n - 1) / 2 + 1);
      if (!(prod_v == valleyless)) return nlohmann::json{{"route", "valleyless-product"}, {"n", n}};
      if (!(prod_all == all)) return nlohmann::json{{"route", "q-factorial"}, {"n", n}};
      if (prod_v.coefficient_sum() != (BigCount(1) << (n - 1))) {
        return nlohmann::json{{"route", "valleyless-product-at-q=1"}, {"n", n}};
      }
    }
    return std::nullopt;
  });

  return report;
}

}  // namespace vls
