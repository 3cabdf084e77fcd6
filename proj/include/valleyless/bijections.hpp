#pragma once

#include <span>
#include <vector>

#include "valleyless/seq_core.hpp"

namespace vls {

/// Ordered parts of a positive integer.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const { return total_; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Partial sums s_1, s_1+s_2, ..., excluding the full total. Ascending.
std::vector<int> theta_encode(const Composition& c);

/// Inverse of theta_encode. Cut points may be given in any order but must be
/// distinct and lie in 1..total-1.
Composition theta_decode(std::span<const int> cut_points, int total);

/// Every composition of total, ordered by cut-point bitmask.
std::vector<Composition> compositions_of(int total);

/// Bijection from valleyless permutations of length n onto compositions of n.
///
/// With a = inversion_table(p), each a_k is 0 or n - k. The cut set is
/// {k < n : a_k = n - k} and the result is theta_decode(cut set, n).
Composition valleyless_perm_to_composition(const Permutation& p);

/// Inverse of valleyless_perm_to_composition.
Permutation composition_to_valleyless_perm(const Composition& c);

/// All 2^(n-1) valleyless permutations of length n.
///
/// Built by the doubling construction: each valleyless permutation of length
/// n - 1 is shifted up by one and a 1 is placed first, then last. Output
/// order is the depth-first order of that tree, prepend child first.
std::vector<Permutation> generate_valleyless_permutations(int n);

/// All permutations of length n with exactly k valleys, each once.
///
/// A length-m parent is shifted up by one and a 1 is inserted in a gap.
/// Parents with k valleys take the 1 at the front, the back, or either side
/// of one of their valleys (valley count preserved). Parents with k - 1
/// valleys take it in an interior gap touching no valley (count grows by
/// one). For each level the children of the k-valley parents come first, in
/// the order front, back, then valley-adjacent gaps left to right; the
/// children of the (k - 1)-valley parents follow, gaps left to right.
/// For k = 0 this reproduces generate_valleyless_permutations exactly.
std::vector<Permutation> generate_k_valley_permutations(int n, int k);

}  // namespace vls
