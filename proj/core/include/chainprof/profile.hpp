#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <map>

#include "chainprof/poset.hpp"

namespace chainprof {

/// Arbitrary-precision nonnegative count. Maximal-chain counts grow
/// exponentially; silent overflow is unacceptable.
using Nat = boost::multiprecision::cpp_int;

/// Multiset of maximal-chain cardinalities, keyed by cardinality.
class ChainProfile {
 public:
  ChainProfile() = default;
  ChainProfile(std::initializer_list<std::uint64_t> values) {
    for (auto v : values) add(v);
  }

  void add(std::uint64_t cardinality, Nat multiplicity = 1) {
    if (cardinality == 0) throw InvalidProfileError("chain cardinality must be positive");
    if (multiplicity <= 0) throw InvalidProfileError("multiplicity must be positive");
    counts_[cardinality] += multiplicity;
  }

  const std::map<std::uint64_t, Nat>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  /// n = |S| counting multiplicities.
  Nat total() const {
    Nat t = 0;
    for (const auto& [c, mult] : counts_) t += mult;
    return t;
  }

  /// m = max(S). Throws on the empty profile.
  std::uint64_t max_cardinality() const {
    if (counts_.empty()) throw InvalidProfileError("empty profile");
    return counts_.rbegin()->first;
  }

  bool operator==(const ChainProfile&) const = default;

 private:
  std::map<std::uint64_t, Nat> counts_;
};

using CountMatrix = std::vector<std::vector<Nat>>;

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b);

/// 0/1 matrix of the covering relation.
CountMatrix adjacency_matrix(const Poset& p);

/// Chain profile via powers of the cover adjacency matrix: the (i, j) entry
/// of A^k counts chains of cardinality k+1 with minimum p_i and maximum p_j;
/// summing over minimal i and maximal j counts maximal chains.
ChainProfile profile_matrix(const Poset& p);

/// Chain profile via depth-first enumeration of all source-to-sink paths in
/// the cover DAG. Throws BudgetExceededError when more than path_budget
/// maximal chains exist.
ChainProfile profile_enumerate(const Poset& p, std::uint64_t path_budget);

/// A maximal chain of maximum cardinality, bottom to top; ties broken toward
/// the lexicographically least index sequence.
ElementSet max_chain(const Poset& p);

}  // namespace chainprof
