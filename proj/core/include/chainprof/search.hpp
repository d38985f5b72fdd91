#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chainprof/profile.hpp"

namespace chainprof {

struct SearchResult {
  enum class Status { exact, budget_exhausted };
  Status status = Status::budget_exhausted;
  std::uint64_t size = 0;             // present when exact
  std::optional<Poset> witness;       // present when exact
  std::uint64_t explored = 0;         // isomorphism classes visited
  bool ceiling_used = false;          // witness is the trivial construction
};

/// One representative per isomorphism class of posets on n elements, in a
/// fixed deterministic order. Posets are grown one new maximal element at a
/// time, its lower covers ranging over the antichains of the parent;
/// canonical_form rejects duplicates.
std::vector<Poset> enumerate_posets(int n);

inline constexpr std::uint64_t kDefaultClassBudget = 10'000'000;

/// Smallest poset realizing profile S, by scanning target sizes upward from
/// lower_bound(S). When the target reaches upper_bound(S) the trivial
/// construction is returned directly (it always matches). Enumeration results
/// are cached across calls; identical inputs yield identical witnesses.
SearchResult minimal_poset(const ChainProfile& s, std::uint64_t size_cap,
                           std::uint64_t class_budget = kDefaultClassBudget);

/// Same, with size_cap defaulted to upper_bound(S).
SearchResult minimal_poset(const ChainProfile& s);

}  // namespace chainprof
