#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "valleyless/bigint.hpp"
#include "valleyless/oracle.hpp"

namespace vls {

/// Ranges for verify_all. A check whose range is empty is left out of the
/// report entirely.
struct VerifyLimits {
  int perm_n = 8;          // exhaustive permutation identities and bijections
  int brute_count_n = 9;   // P(n,k) against the brute-force histogram
  int factorial_n = 12;    // row sums of P(n,k) and E(n,k)
  int seq_n = 6;           // unimodality grid and Table-3 style counts
  int seq_entry = 4;       // entry bound for the unimodality grid
  int seq_max_k = 5;
  int comp_total = 12;
  int gf_n = 12;           // g_k coefficients against the recurrence
  int gf_k = 5;
  int table1_order = 14;
  int bivariate_n = 10;
  int bivariate_k = 6;
  int b_n = 6;
  int b_x_order = 8;
  int b_q_order = 24;
  int qy_n = 8;
  int qy_sum_cap = 16;

  /// Route under test for P(n,k); defaults to count_valley_perms. Tests
  /// swap in a mutated recurrence to exercise failure reporting.
  std::function<BigCount(int, int)> valley_perm_count;

  oracle::Config oracle;

  /// Defaults with every length-like limit clamped to max_n.
  static VerifyLimits capped(int max_n);
};

struct CheckResult {
  std::string name;
  bool passed = true;
  nlohmann::json counterexample;  // null when passed
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Runs every cross-route identity up to the given limits. Failures are
/// recorded with the first counterexample found; nothing throws for a
/// mismatch.
VerificationReport verify_all(const VerifyLimits& limits = {});

}  // namespace vls
