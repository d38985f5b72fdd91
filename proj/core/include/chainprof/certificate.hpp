#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chainprof/profile.hpp"

namespace chainprof {

/// A vertex of the compressed graph: either a retained position on the
/// distinguished maximum chain (1-based) or an extra element (0-based).
struct CertVertex {
  bool on_chain = false;
  std::uint64_t id = 0;

  auto operator<=>(const CertVertex&) const = default;
};

/// Succinct encoding of a poset relative to a maximum chain M: only the
/// chain endpoints and the chain elements incident to extra elements are
/// kept; skipped chain segments become implicit weighted edges between
/// consecutive retained positions. Size is polynomial in the profile
/// encoding, independent of the chain length.
struct CompressedPoset {
  std::uint64_t m = 0;                          // |M|
  std::vector<std::uint64_t> mprime_positions;  // ascending, starts 1, ends m
  std::uint64_t x_count = 0;                    // |X|
  std::vector<std::pair<CertVertex, CertVertex>> light_edges;  // weight 1

  bool operator==(const CompressedPoset&) const = default;
};

/// Sparse polynomial: path length (sum of edge weights) -> path count.
using LengthPolynomial = std::map<Nat, Nat>;

/// Compresses p relative to M, which must be a maximal chain of maximum
/// cardinality listed bottom to top (NotMaximumChainError otherwise).
CompressedPoset compress(const Poset& p, const ElementSet& m_chain);

/// Checks the certificate invariants, the cardinality claim m + |X| <= t,
/// and that the weighted path-length polynomial of the compressed graph
/// reproduces exactly the claimed profile. Malformed certificates yield
/// false with a diagnostic, never an exception. Runs in time polynomial in
/// the profile encoding size.
bool verify(const CompressedPoset& cert, const ChainProfile& s, std::uint64_t t,
            std::string* reason = nullptr);

/// size(S): sum over members (with multiplicity) of their binary digit count.
Nat size_of_profile(const ChainProfile& s);

}  // namespace chainprof
