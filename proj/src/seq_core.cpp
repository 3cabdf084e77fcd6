#include "valleyless/seq_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vls {

Sequence::Sequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_) {
    if (v < 1) throw std::invalid_argument("sequence entries must be positive");
  }
}

long long Sequence::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

int Sequence::max() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

InversionTable::InversionTable(std::vector<int> entries) : a_(std::move(entries)) {
  const int n = static_cast<int>(a_.size());
  for (int k = 1; k <= n; ++k) {
    const int v = a_[k - 1];
    if (v < 0 || v > n - k) {
      throw std::invalid_argument("inversion table entry a_" + std::to_string(k) +
                                  " = " + std::to_string(v) + " outside [0, " +
                                  std::to_string(n - k) + "]");
    }
  }
}

bool is_valleyless(std::span<const int> s) {
  // s_j is the middle of a bad triple iff some earlier entry and some later
  // entry both exceed it.
  const std::size_t n = s.size();
  if (n < 3) return true;
  std::vector<int> suffix_max(n);
  suffix_max[n - 1] = s[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) suffix_max[i] = std::max(s[i], suffix_max[i + 1]);
  int prefix_max = s[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (s[j] < prefix_max && s[j] < suffix_max[j + 1]) return false;
    prefix_max = std::max(prefix_max, s[j]);
  }
  return true;
}

bool is_unimodal(std::span<const int> s) {
  std::size_t i = 1;
  while (i < s.size() && s[i - 1] <= s[i]) ++i;
  while (i < s.size() && s[i - 1] >= s[i]) ++i;
  return i >= s.size();
}

std::vector<std::size_t> valley_positions(std::span<const int> s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    if (s[j] < s[j - 1] && s[j] < s[j + 1]) out.push_back(j);
  }
  return out;
}

int count_valleys(std::span<const int> s) {
  return static_cast<int>(valley_positions(s).size());
}

InversionTable inversion_table(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> a(n, 0);
  // Walk left to right, tracking which values have been seen.
  std::vector<bool> seen(n + 1, false);
  for (int v : p.word()) {
    int greater = 0;
    for (std::size_t u = static_cast<std::size_t>(v) + 1; u <= n; ++u) greater += seen[u];
    a[static_cast<std::size_t>(v) - 1] = greater;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return InversionTable(std::move(a));
}

Permutation permutation_from_inversion_table(const InversionTable& t) {
  // Place n, n-1, ..., 1; when k is placed every symbol already in the word
  // is larger, so k goes after exactly a_k of them.
  const int n = static_cast<int>(t.size());
  std::vector<int> word;
  word.reserve(t.size());
  for (int k = n; k >= 1; --k) {
    word.insert(word.begin() + t.at(static_cast<std::size_t>(k) - 1), k);
  }
  return Permutation(std::move(word));
}

long long inversion_count(const Permutation& p) {
  const auto t = inversion_table(p);
  return std::accumulate(t.entries().begin(), t.entries().end(), 0LL);
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

namespace {

void extend_valleyless(std::vector<int>& cur, std::size_t n, int max_entry, bool descending,
                       bool hit_max, std::vector<Sequence>& out) {
  if (cur.size() == n) {
    if (hit_max) out.emplace_back(cur);
    return;
  }
  const int prev = cur.empty() ? max_entry : cur.back();
  // Once descending, the maximum can no longer be reached from below it.
  if (descending && !hit_max) return;
  const int hi = descending ? prev : max_entry;
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    const bool now_desc = descending || (cur.size() > 1 && v < prev);
    extend_valleyless(cur, n, max_entry, now_desc, hit_max || v == max_entry, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Sequence> valleyless_sequences(int n, int max_entry) {
  if (n < 0 || max_entry < 1) throw std::invalid_argument("need n >= 0 and max_entry >= 1");
  std::vector<Sequence> out;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(n));
  extend_valleyless(cur, static_cast<std::size_t>(n), max_entry, false, false, out);
  return out;
}

std::string format_word(std::span<const int> word) {
  const bool compact = word.size() <= 9 &&
                       std::all_of(word.begin(), word.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace vls
