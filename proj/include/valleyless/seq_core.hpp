#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vls {

/// Finite list of positive integers. Empty sequences are allowed.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  long long sum() const;
  /// 0 for the empty sequence.
  int max() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  std::vector<int> entries_;
};

/// A word that is a rearrangement of 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation reversed(int n);

  std::span<const int> word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }
  Sequence as_sequence() const { return Sequence(word_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// (a_1, ..., a_n) with 0 <= a_k <= n - k. Stored 0-based: at(k-1) is a_k.
class InversionTable {
 public:
  InversionTable() = default;
  explicit InversionTable(std::vector<int> entries);

  std::span<const int> entries() const { return a_; }
  std::size_t size() const { return a_.size(); }
  int at(std::size_t i) const { return a_[i]; }

  friend bool operator==(const InversionTable&, const InversionTable&) = default;

 private:
  std::vector<int> a_;
};

/// No i < j < k with s_j < min(s_i, s_k).
bool is_valleyless(std::span<const int> s);
inline bool is_valleyless(const Sequence& s) { return is_valleyless(s.entries()); }
inline bool is_valleyless(const Permutation& p) { return is_valleyless(p.word()); }

/// Nondecreasing up to some index and nonincreasing after it.
bool is_unimodal(std::span<const int> s);

/// Interior positions strictly below both neighbours.
int count_valleys(std::span<const int> s);
inline int count_valleys(const Sequence& s) { return count_valleys(s.entries()); }
inline int count_valleys(const Permutation& p) { return count_valleys(p.word()); }

/// 0-based indices of the valleys, ascending.
std::vector<std::size_t> valley_positions(std::span<const int> s);

InversionTable inversion_table(const Permutation& p);
Permutation permutation_from_inversion_table(const InversionTable& t);
long long inversion_count(const Permutation& p);

/// 1-based positions i with p_i > p_{i+1}, ascending.
std::vector<int> descent_set(const Permutation& p);

/// All valleyless sequences of length n whose maximum entry is exactly
/// max_entry, in lexicographic order.
std::vector<Sequence> valleyless_sequences(int n, int max_entry);

/// Compact digit form ("2731546") for at most nine single-digit entries,
/// comma-separated otherwise.
std::string format_word(std::span<const int> word);

}  // namespace vls
