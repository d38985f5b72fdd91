#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chainprof/profile.hpp"

namespace chainprof {

enum class BoundRule { none, small_n, shifted_sums, sparse_condition };

std::string to_string(BoundRule rule);

struct BoundsReport {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;
  BoundRule rule = BoundRule::none;
};

/// m + ceil(log2 n).
std::uint64_t lower_bound(const ChainProfile& s);

/// m + n - 1.
std::uint64_t upper_bound(const ChainProfile& s);

/// True iff S has no repeated member and (m-a) >= (m-b) + (m-c) + n - 3 for
/// every triple a < b < c of members; under this condition the minimum poset
/// size is exactly m + n - 1.
bool sparse_condition(const ChainProfile& s);

/// Bounds plus the exact value when one of the known rules certifies it.
/// Rule precedence: small_n, shifted_sums, sparse_condition.
BoundsReport exact_bounds(const ChainProfile& s);

}  // namespace chainprof
