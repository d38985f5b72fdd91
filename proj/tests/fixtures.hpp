#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chainprof/poset.hpp"

namespace fixtures {

inline chainprof::Poset chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return chainprof::Poset::from_cover_edges(n, std::move(edges));
}

inline chainprof::Poset antichain(int n) {
  return chainprof::Poset::from_cover_edges(n, {});
}

inline chainprof::Poset diamond() {
  return chainprof::Poset::from_cover_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Spine x1..x5 (0..4) with pendants s21 (5), s31 (6), s32 (7), s51 (8);
// profile {2,3,3,5,5}.
inline chainprof::Poset pendant_witness() {
  return chainprof::Poset::from_cover_edges(
      9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 6}, {1, 7}, {3, 8}});
}

// Three stacked blocks (chain of a+1 plus an incomparable element) for
// a = 1, 2, 4; profile {3,4,5,6,7,8,9,10}.
inline chainprof::Poset block_witness() {
  return chainprof::Poset::from_cover_edges(
      13, {{0, 1},                           // block 1 chain
           {1, 3}, {1, 6}, {2, 3}, {2, 6},   // block 1 -> block 2
           {3, 4}, {4, 5},                   // block 2 chain
           {5, 7}, {5, 12}, {6, 7}, {6, 12}, // block 2 -> block 3
           {7, 8}, {8, 9}, {9, 10}, {10, 11}});
}

// Nine-element spine t1..t9 (0..8) with a (9), b (10), c (11), d (12);
// no splitting elements, profile {5,6,7,8,9}.
inline chainprof::Poset braided_spine() {
  return chainprof::Poset::from_cover_edges(
      13, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
           {9, 3}, {1, 10}, {10, 4}, {10, 11}, {11, 12}, {11, 7}});
}

// b (0) < {m1 (1), m2 (2)} < c (3) < {u1 (4), u2 (5)} < t (6);
// c is a splitting element, profile {5,5,5,5}.
inline chainprof::Poset stacked_double_diamond() {
  return chainprof::Poset::from_cover_edges(
      7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

// All isomorphism classes of posets on n elements by flat brute force over
// cover DAGs with upward-oriented edges (i < j); independent of the orderly
// generator in the library.
inline std::vector<chainprof::Poset> labeled_brute_force(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<chainprof::Poset> reps;
  std::set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::uint32_t> succ(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1u) succ[pairs[e].first] |= 1u << pairs[e].second;
    // reach[i] = strict up-set; vertices processed in decreasing order.
    std::vector<std::uint32_t> reach(n, 0);
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j)
        if (succ[i] >> j & 1u) reach[i] |= (1u << j) | reach[j];
    }
    bool reduced = true;
    for (int i = 0; i < n && reduced; ++i) {
      for (int j = i + 1; j < n && reduced; ++j) {
        if (!(succ[i] >> j & 1u)) continue;
        for (int k = i + 1; k < n; ++k) {
          if (k != j && (succ[i] >> k & 1u) && (reach[k] >> j & 1u)) {
            reduced = false;
            break;
          }
        }
      }
    }
    if (!reduced) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1u) edges.push_back(pairs[e]);
    chainprof::Poset p = chainprof::Poset::from_cover_edges(n, std::move(edges));
    if (seen.insert(chainprof::canonical_form(p)).second) reps.push_back(std::move(p));
  }
  return reps;
}

// Random transitively-reduced DAG on up to max_n elements.
inline chainprof::Poset random_poset(std::mt19937& rng, int max_n) {
  int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  std::vector<std::uint32_t> reach(n, 0);
  std::bernoulli_distribution coin(density);
  std::vector<std::uint32_t> rel(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel[i] |= 1u << j;
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (rel[i] >> j & 1u) reach[i] |= (1u << j) | reach[j];
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(reach[i] >> j & 1u)) continue;
      bool direct = true;
      for (int k = i + 1; k < j && direct; ++k)
        if ((reach[i] >> k & 1u) && (reach[k] >> j & 1u)) direct = false;
      if (direct) edges.emplace_back(i, j);
    }
  }
  return chainprof::Poset::from_cover_edges(n, std::move(edges));
}

}  // namespace fixtures
