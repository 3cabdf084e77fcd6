#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "valleyless/bigint.hpp"
#include "valleyless/seq_core.hpp"
#include "valleyless/series.hpp"

// Brute-force enumerators. Nothing here calls the statistics, bijections,
// counting or generating-function code it is used to check; the only shared
// pieces are the value types and TruncatedSeries as a coefficient container.
namespace vls::oracle {

struct Config {
  int max_perm_n = 10;
  std::uint64_t max_universe = 100'000'000;

  /// Defaults, with max_perm_n taken from VLS_MAX_BRUTE_N when set.
  static Config from_env();
};

using StatHistogram = std::map<long long, BigCount>;

using WordVisitor = std::function<void(std::span<const int>)>;

/// Visits all n! permutations of 1..n in lexicographic order.
void for_each_permutation(int n, const WordVisitor& visit, const Config& cfg = {});
std::vector<Permutation> enum_permutations(int n, const Config& cfg = {});

/// Visits all max_entry^n sequences with entries in 1..max_entry,
/// lexicographically.
void for_each_bounded_sequence(int n, int max_entry, const WordVisitor& visit,
                               const Config& cfg = {});
std::vector<Sequence> enum_bounded_sequences(int n, int max_entry, const Config& cfg = {});

/// Visits every length-n positive sequence with entry sum at most sum_cap.
void for_each_sequence_with_sum_at_most(int n, int sum_cap, const WordVisitor& visit,
                                        const Config& cfg = {});

/// Triple-scan definition, written independently of seq_core.
bool brute_is_valleyless(std::span<const int> s);
int brute_count_valleys(std::span<const int> s);
long long brute_inversions(std::span<const int> w);

/// Histogram of the number of valleys over all permutations of length n.
StatHistogram brute_valley_histogram(int n, const Config& cfg = {});

/// Histogram of the number of descents over all permutations of length n.
StatHistogram brute_descent_histogram(int n, const Config& cfg = {});

/// Valleyless sequences of length n with maximum exactly max_entry, by
/// filtering the bounded universe.
BigCount brute_valleyless_count(int n, int max_entry, const Config& cfg = {});

/// sum over valleyless length-n sequences with sum <= sum_cap of
/// q^sum y^max, with orders x 1, q sum_cap + 1, y sum_cap + 1.
TruncatedSeries brute_valleyless_qy_polynomial(int n, int sum_cap, const Config& cfg = {});

/// (sum over valleyless permutations of q^inv, sum over all of q^inv).
std::pair<TruncatedSeries, TruncatedSeries> brute_inversion_polynomials(int n,
                                                                        const Config& cfg = {});

/// Sorted list of the permutations of length n with exactly k valleys.
std::vector<Permutation> brute_k_valley_permutations(int n, int k, const Config& cfg = {});

}  // namespace vls::oracle
