#include "chainprof/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "chainprof/bounds.hpp"
#include "chainprof/constructions.hpp"

namespace chainprof {

namespace {

// Strict-reachability masks of a small poset.
std::vector<std::uint32_t> reach_masks(const Poset& p) {
  int n = p.size();
  std::vector<std::uint32_t> reach(n, 0);
  // Process in reverse topological order via repeated relaxation (n is tiny).
  bool changed = true;
  for (auto [i, j] : p.cover_edges()) reach[i] |= 1u << j;
  while (changed) {
    changed = false;
    for (auto [i, j] : p.cover_edges()) {
      std::uint32_t merged = reach[i] | reach[j];
      if (merged != reach[i]) {
        reach[i] = merged;
        changed = true;
      }
    }
  }
  return reach;
}

std::vector<Poset> extend_level(const std::vector<Poset>& parents, int k,
                                std::uint64_t* explored, std::uint64_t budget) {
  std::vector<Poset> next;
  std::set<std::string> seen;
  int pn = k - 1;
  for (const Poset& parent : parents) {
    std::vector<std::uint32_t> reach = reach_masks(parent);
    std::vector<std::uint32_t> comparable(pn, 0);
    for (int a = 0; a < pn; ++a)
      for (int b = 0; b < pn; ++b)
        if (a != b && ((reach[a] >> b & 1u) || (reach[b] >> a & 1u)))
          comparable[a] |= 1u << b;
    for (std::uint32_t mask = 0; mask < (1u << pn); ++mask) {
      bool antichain = true;
      for (int a = 0; a < pn && antichain; ++a)
        if ((mask >> a & 1u) && (comparable[a] & mask)) antichain = false;
      if (!antichain) continue;
      std::vector<std::pair<int, int>> edges = parent.cover_edges();
      for (int a = 0; a < pn; ++a)
        if (mask >> a & 1u) edges.emplace_back(a, pn);
      Poset q = Poset::from_cover_edges(k, std::move(edges));
      if (seen.insert(canonical_form(q)).second) {
        if (explored && ++*explored > budget)
          throw BudgetExceededError("class budget exhausted while enumerating");
        next.push_back(std::move(q));
      }
    }
  }
  return next;
}

struct LevelCache {
  std::mutex mu;
  std::map<int, std::shared_ptr<const std::vector<Poset>>> levels;
};

LevelCache& cache() {
  static LevelCache c;
  return c;
}

std::shared_ptr<const std::vector<Poset>> cached_level(int n, std::uint64_t* explored,
                                                       std::uint64_t budget) {
  LevelCache& c = cache();
  std::scoped_lock lock(c.mu);
  auto it = c.levels.find(n);
  if (it != c.levels.end()) return it->second;
  std::shared_ptr<const std::vector<Poset>> prev;
  int have = 0;
  for (auto& [k, level] : c.levels) {
    if (k <= n && k > have) {
      have = k;
      prev = level;
    }
  }
  if (have == 0) {
    prev = std::make_shared<std::vector<Poset>>(
        std::vector<Poset>{Poset::from_cover_edges(1, {})});
    c.levels[1] = prev;
    have = 1;
  }
  while (have < n) {
    auto next = std::make_shared<std::vector<Poset>>(
        extend_level(*prev, have + 1, explored, budget));
    ++have;
    c.levels[have] = next;
    prev = next;
  }
  return prev;
}

int longest_chain_cardinality(const Poset& p) {
  int n = p.size();
  std::vector<int> height(n, 0);
  // Covers are emitted by enumerate with edges (a, b) implying a < b is not
  // guaranteed in general posets, so relax until stable (n is tiny).
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [i, j] : p.cover_edges()) {
      if (height[j] < height[i] + 1) {
        height[j] = height[i] + 1;
        changed = true;
      }
    }
  }
  int best = 0;
  for (int v = 0; v < n; ++v) best = std::max(best, height[v]);
  return best + 1;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) throw IndexError("enumerate_posets requires n >= 1");
  std::vector<Poset> level{Poset::from_cover_edges(1, {})};
  for (int k = 2; k <= n; ++k) level = extend_level(level, k, nullptr, 0);
  return level;
}

SearchResult minimal_poset(const ChainProfile& s, std::uint64_t size_cap,
                           std::uint64_t class_budget) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  std::uint64_t lo = lower_bound(s);
  std::uint64_t up = upper_bound(s);
  if (size_cap < lo) throw CapBelowLowerBoundError("size cap " + std::to_string(size_cap) +
                                                   " below lower bound " + std::to_string(lo));
  std::uint64_t m = s.max_cardinality();

  SearchResult result;
  for (std::uint64_t t = lo; t <= std::min(size_cap, up); ++t) {
    if (t == up) {
      Poset witness = trivial_construction(s);
      if (t <= 64 && profile_matrix(witness) != s)
        throw Error("trivial construction failed to realize the profile");
      result.status = SearchResult::Status::exact;
      result.size = t;
      result.ceiling_used = true;
      result.witness = std::move(witness);
      return result;
    }
    std::shared_ptr<const std::vector<Poset>> level;
    try {
      level = cached_level(static_cast<int>(t), &result.explored, class_budget);
    } catch (const BudgetExceededError&) {
      return result;
    } catch (const Error&) {
      // Enumeration infeasible at this size (too large to canonicalize).
      return result;
    }
    for (const Poset& q : *level) {
      if (++result.explored > class_budget) return result;
      if (static_cast<std::uint64_t>(longest_chain_cardinality(q)) != m) continue;
      if (profile_matrix(q) != s) continue;
      result.status = SearchResult::Status::exact;
      result.size = t;
      result.witness = q;
      return result;
    }
  }
  return result;
}

SearchResult minimal_poset(const ChainProfile& s) {
  return minimal_poset(s, upper_bound(s));
}

}  // namespace chainprof
