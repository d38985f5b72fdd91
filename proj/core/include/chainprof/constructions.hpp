#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chainprof/profile.hpp"

namespace chainprof {

/// k nonnegative terms whose 2^k subset sums, shifted by k, form a profile.
struct SumsDecomposition {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> terms;  // multiset, kept sorted ascending
};

/// The m + n - 1 witness: a spine chain x_1 < ... < x_m plus one pendant
/// element per member of S minus one copy of m, attached above x_{j-1}.
/// Elements 0..m-1 are the spine; pendants follow in ascending member order.
Poset trivial_construction(const ChainProfile& s);

/// Ordinal sum over i of (chain of terms[i]+1 elements plus one incomparable
/// element); realizes the profile {k + x : x in sums(terms)} with
/// m + ceil(log2 n) elements.
Poset sums_construction(const SumsDecomposition& d);

/// Inverse of the subset-sums map: finds a multiset A with sums(A) = T, or
/// nullopt. Requires |T| to be a power of two (SizeError otherwise). The
/// result is verified by recomputing sums(A) before it is returned.
std::optional<std::vector<std::uint64_t>> reconstruct_subset_sums(
    std::vector<std::uint64_t> t);

/// Decides whether S = {k + x : x in sums(A)} for some A; k is forced to be
/// both log2 |S| and min(S).
std::optional<SumsDecomposition> as_shifted_sums(const ChainProfile& s);

}  // namespace chainprof
