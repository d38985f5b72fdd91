#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainprof/errors.hpp"

namespace chainprof {

/// Ordered list of distinct element indices of a host Poset.
using ElementSet = std::vector<int>;

/// A finite poset represented by its covering-relation DAG.
///
/// The edge set handed to from_cover_edges must already be a valid covering
/// relation: acyclic, no duplicates, and every edge the unique directed path
/// between its endpoints. The constructor rejects anything else instead of
/// repairing it. Instances are immutable; all operations are pure.
class Poset {
 public:
  /// The empty poset (the identity of ordinal_sum).
  Poset() = default;

  static Poset from_cover_edges(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  /// Cover edges (i, j) with i covered-below j, sorted lexicographically.
  const std::vector<std::pair<int, int>>& cover_edges() const { return edges_; }

  std::span<const int> upper_covers(int x) const;
  std::span<const int> lower_covers(int x) const;

  /// x <= y in the order generated by the covering relation.
  bool leq(int x, int y) const;

  ElementSet minimal_elements() const;
  ElementSet maximal_elements() const;

  /// Restriction of the order to `subset`; the covering relation of the
  /// result is recomputed from the restricted reachability. Element i of the
  /// result corresponds to subset[i].
  Poset suborder(const ElementSet& subset) const;

  /// True iff both the down-set and the up-set suborder of x contain at
  /// least two maximal chains.
  bool is_splitting_element(int x) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;

  void check_index(int x) const;
};

/// Stacks `hi` on top of `lo`: internal orders kept, every element of `lo`
/// below every element of `hi`.
Poset ordinal_sum(const Poset& lo, const Poset& hi);

/// Exact canonical key: two posets produce the same byte string iff they are
/// isomorphic. Supports up to 16 elements.
std::string canonical_form(const Poset& p);

}  // namespace chainprof
