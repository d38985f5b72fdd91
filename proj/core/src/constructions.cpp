#include "chainprof/constructions.hpp"

#include <algorithm>
#include <set>

namespace chainprof {

namespace {

Poset chain_poset(std::uint64_t n) {
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return Poset::from_cover_edges(static_cast<int>(n), std::move(edges));
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Poset trivial_construction(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  std::uint64_t m = s.max_cardinality();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t i = 0; i + 1 < m; ++i)
    edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  int next = static_cast<int>(m);
  for (const auto& [j, mult] : s.counts()) {
    Nat copies = mult;
    if (j == m) --copies;  // exactly one copy of m is realized by the spine
    for (Nat c = 0; c < copies; ++c) {
      if (j >= 2) edges.emplace_back(static_cast<int>(j) - 2, next);
      ++next;
    }
  }
  return Poset::from_cover_edges(next, std::move(edges));
}

Poset sums_construction(const SumsDecomposition& d) {
  if (d.k == 0 || d.terms.size() != d.k)
    throw InvalidProfileError("sums decomposition needs k >= 1 terms");
  Poset result;
  for (std::uint64_t a : d.terms) {
    Poset chain = chain_poset(a + 1);
    Poset block = Poset::from_cover_edges(static_cast<int>(a) + 2, chain.cover_edges());
    result = ordinal_sum(result, block);
  }
  return result;
}

std::optional<std::vector<std::uint64_t>> reconstruct_subset_sums(
    std::vector<std::uint64_t> t) {
  if (!is_power_of_two(t.size()))
    throw SizeError("subset-sums multiset size must be a power of two");
  std::sort(t.begin(), t.end());
  int k = 0;
  while ((std::size_t{1} << k) < t.size()) ++k;

  std::vector<std::uint64_t> original = t;
  std::vector<std::uint64_t> terms;
  std::multiset<std::uint64_t> cur(t.begin(), t.end());
  for (int step = 0; step < k; ++step) {
    if (*cur.begin() != 0) return std::nullopt;
    std::uint64_t a = *std::next(cur.begin());
    terms.push_back(a);
    // Pair each unmatched sum s (ascending) with s + a; the unmatched half is
    // the subset-sums multiset of the remaining terms.
    std::multiset<std::uint64_t> rest;
    std::multiset<std::uint64_t> work = cur;
    while (!work.empty()) {
      std::uint64_t s = *work.begin();
      work.erase(work.begin());
      auto match = work.find(s + a);
      if (match == work.end()) return std::nullopt;
      work.erase(match);
      rest.insert(s);
    }
    cur = std::move(rest);
  }
  if (cur.size() != 1 || *cur.begin() != 0) return std::nullopt;

  // The greedy pairing can succeed spuriously; recompute sums(terms) in full.
  std::vector<std::uint64_t> sums{0};
  for (std::uint64_t a : terms) {
    std::size_t half = sums.size();
    for (std::size_t i = 0; i < half; ++i) sums.push_back(sums[i] + a);
  }
  std::sort(sums.begin(), sums.end());
  if (sums != original) return std::nullopt;
  std::sort(terms.begin(), terms.end());
  return terms;
}

std::optional<SumsDecomposition> as_shifted_sums(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  Nat n = s.total();
  if (n > (Nat{1} << 40)) return std::nullopt;  // not a desk-scale power of two
  auto count = static_cast<std::uint64_t>(n);
  if (count == 0 || (count & (count - 1)) != 0) return std::nullopt;
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < count) ++k;
  if (k == 0) return std::nullopt;  // the empty-sum member would have to be 0
  std::uint64_t lo = s.counts().begin()->first;
  if (lo != k) return std::nullopt;

  std::vector<std::uint64_t> shifted;
  for (const auto& [card, mult] : s.counts())
    for (Nat c = 0; c < mult; ++c) shifted.push_back(card - k);
  auto terms = reconstruct_subset_sums(std::move(shifted));
  if (!terms) return std::nullopt;
  return SumsDecomposition{k, std::move(*terms)};
}

}  // namespace chainprof
