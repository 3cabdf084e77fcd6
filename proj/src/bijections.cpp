#include "valleyless/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vls {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int v : parts_) {
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += v;
  }
}

std::vector<int> theta_encode(const Composition& c) {
  std::vector<int> cuts;
  cuts.reserve(c.size() - 1);
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c.parts()[i];
    cuts.push_back(acc);
  }
  return cuts;
}

Composition theta_decode(std::span<const int> cut_points, int total) {
  if (total < 1) throw std::invalid_argument("total must be positive");
  std::vector<int> cuts(cut_points.begin(), cut_points.end());
  std::sort(cuts.begin(), cuts.end());
  if (std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end()) {
    throw std::invalid_argument("duplicate cut point");
  }
  std::vector<int> parts;
  parts.reserve(cuts.size() + 1);
  int prev = 0;
  for (int c : cuts) {
    if (c < 1 || c > total - 1) {
      throw std::invalid_argument("cut point " + std::to_string(c) + " outside 1.." +
                                  std::to_string(total - 1));
    }
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(total - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int total) {
  if (total < 1 || total > 30) throw std::invalid_argument("total must be in 1..30");
  std::vector<Composition> out;
  const unsigned long count = 1UL << (total - 1);
  out.reserve(count);
  std::vector<int> cuts;
  for (unsigned long mask = 0; mask < count; ++mask) {
    cuts.clear();
    for (int b = 0; b < total - 1; ++b) {
      if (mask & (1UL << b)) cuts.push_back(b + 1);
    }
    out.push_back(theta_decode(cuts, total));
  }
  return out;
}

Composition valleyless_perm_to_composition(const Permutation& p) {
  if (p.size() == 0) throw std::invalid_argument("empty permutation");
  if (!is_valleyless(p)) {
    throw std::invalid_argument("permutation " + format_word(p.word()) + " is not valleyless");
  }
  const int n = static_cast<int>(p.size());
  const auto a = inversion_table(p);
  std::vector<int> cuts;
  for (int k = 1; k < n; ++k) {
    if (a.at(static_cast<std::size_t>(k) - 1) == n - k) cuts.push_back(k);
  }
  return theta_decode(cuts, n);
}

Permutation composition_to_valleyless_perm(const Composition& c) {
  const int n = c.total();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int k : theta_encode(c)) a[static_cast<std::size_t>(k) - 1] = n - k;
  return permutation_from_inversion_table(InversionTable(std::move(a)));
}

namespace {

std::vector<int> shifted_with_one_at(std::span<const int> parent, std::size_t gap) {
  std::vector<int> child;
  child.reserve(parent.size() + 1);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (i == gap) child.push_back(1);
    child.push_back(parent[i] + 1);
  }
  if (gap == parent.size()) child.push_back(1);
  return child;
}

// Gaps are numbered 0..m: gap g sits before parent[g].
void append_preserving_children(const Permutation& parent, std::vector<Permutation>& out) {
  const std::size_t m = parent.size();
  out.emplace_back(shifted_with_one_at(parent.word(), 0));
  out.emplace_back(shifted_with_one_at(parent.word(), m));
  for (std::size_t v : valley_positions(parent.word())) {
    out.emplace_back(shifted_with_one_at(parent.word(), v));
    out.emplace_back(shifted_with_one_at(parent.word(), v + 1));
  }
}

void append_growing_children(const Permutation& parent, std::vector<Permutation>& out) {
  const std::size_t m = parent.size();
  std::vector<bool> touches_valley(m + 1, false);
  for (std::size_t v : valley_positions(parent.word())) {
    touches_valley[v] = true;
    touches_valley[v + 1] = true;
  }
  for (std::size_t g = 1; g < m; ++g) {
    if (!touches_valley[g]) out.emplace_back(shifted_with_one_at(parent.word(), g));
  }
}

}  // namespace

std::vector<Permutation> generate_valleyless_permutations(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Permutation> level{Permutation::identity(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Permutation> next;
    next.reserve(level.size() * 2);
    for (const auto& p : level) {
      next.emplace_back(shifted_with_one_at(p.word(), 0));
      next.emplace_back(shifted_with_one_at(p.word(), p.size()));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Permutation> generate_k_valley_permutations(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || k > (n - 1) / 2) return {};
  // by_valleys[j] holds the current level's permutations with j valleys.
  // A level only needs j >= k - (remaining steps) since each step adds at
  // most one valley.
  std::vector<std::vector<Permutation>> by_valleys(static_cast<std::size_t>(k) + 1);
  by_valleys[0].push_back(Permutation::identity(1));
  for (int m = 2; m <= n; ++m) {
    const int lowest = std::max(0, k - (n - m));
    std::vector<std::vector<Permutation>> next(by_valleys.size());
    for (int j = lowest; j <= k; ++j) {
      auto& bucket = next[static_cast<std::size_t>(j)];
      for (const auto& p : by_valleys[static_cast<std::size_t>(j)]) {
        append_preserving_children(p, bucket);
      }
      if (j > 0) {
        for (const auto& p : by_valleys[static_cast<std::size_t>(j) - 1]) {
          append_growing_children(p, bucket);
        }
      }
    }
    by_valleys = std::move(next);
  }
  return std::move(by_valleys[static_cast<std::size_t>(k)]);
}

}  // namespace vls
