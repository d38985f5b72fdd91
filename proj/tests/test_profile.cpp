#include <doctest.h>

#include <random>
#include <set>

#include "chainprof/profile.hpp"
#include "chainprof/search.hpp"
#include "fixtures.hpp"

using chainprof::ChainProfile;
using chainprof::ElementSet;
using chainprof::Nat;
using chainprof::Poset;

namespace {

bool is_zero(const chainprof::CountMatrix& m) {
  for (const auto& row : m)
    for (const Nat& e : row)
      if (e != 0) return false;
  return true;
}

// DFS over all maximal chains, reporting each as a set of elements.
std::vector<std::set<int>> all_maximal_chains(const Poset& p) {
  std::vector<std::set<int>> chains;
  std::vector<int> path;
  auto rec = [&](auto&& self, int v) -> void {
    path.push_back(v);
    auto ups = p.upper_covers(v);
    if (ups.empty()) {
      chains.emplace_back(path.begin(), path.end());
    } else {
      for (int w : ups) self(self, w);
    }
    path.pop_back();
  };
  for (int s : p.minimal_elements()) rec(rec, s);
  return chains;
}

}  // namespace

TEST_CASE("adjacency matrix") {
  auto a = chainprof::adjacency_matrix(fixtures::chain(2));
  CHECK(a[0][1] == 1);
  CHECK(a[0][0] == 0);
  CHECK(a[1][0] == 0);
  CHECK(is_zero(chainprof::adjacency_matrix(fixtures::antichain(2))));
  auto d = chainprof::adjacency_matrix(fixtures::diamond());
  CHECK(d[0][1] == 1);
  CHECK(d[0][2] == 1);
  CHECK(d[1][3] == 1);
  CHECK(d[2][3] == 1);
  CHECK_THROWS_AS(chainprof::adjacency_matrix(Poset{}), chainprof::EmptyPosetError);
}

TEST_CASE("profile of reference posets") {
  CHECK(chainprof::profile_matrix(fixtures::pendant_witness()) == ChainProfile{2, 3, 3, 5, 5});
  CHECK(chainprof::profile_matrix(fixtures::chain(6)) == ChainProfile{6});
  CHECK(chainprof::profile_matrix(fixtures::block_witness()) ==
        ChainProfile{3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(chainprof::profile_enumerate(fixtures::pendant_witness(), 100) == ChainProfile{2, 3, 3, 5, 5});
  CHECK(chainprof::profile_enumerate(fixtures::chain(1), 100) == ChainProfile{1});
  CHECK(chainprof::profile_enumerate(fixtures::stacked_double_diamond(), 100) ==
        ChainProfile{5, 5, 5, 5});
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(chainprof::profile_enumerate(fixtures::pendant_witness(), 4),
                  chainprof::BudgetExceededError);
  CHECK_NOTHROW(chainprof::profile_enumerate(fixtures::pendant_witness(), 5));
}

TEST_CASE("matrix and enumeration methods agree") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : chainprof::enumerate_posets(n))
      CHECK(chainprof::profile_matrix(p) == chainprof::profile_enumerate(p, 1u << 20));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = fixtures::random_poset(rng, 10);
    CHECK(chainprof::profile_matrix(p) == chainprof::profile_enumerate(p, 1u << 20));
  }
}

TEST_CASE("adjacency matrix is nilpotent at |P|") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    Poset p = fixtures::random_poset(rng, 9);
    auto a = chainprof::adjacency_matrix(p);
    auto power = a;
    for (int k = 2; k <= p.size(); ++k) power = chainprof::multiply(power, a);
    CHECK(is_zero(power));  // A^|P| = 0
  }
}

TEST_CASE("maximal chains are determined by their extra-element part") {
  for (int n = 1; n <= 6; ++n) {
    for (const Poset& p : chainprof::enumerate_posets(n)) {
      ElementSet m = chainprof::max_chain(p);
      std::set<int> on_chain(m.begin(), m.end());
      auto chains = all_maximal_chains(p);
      std::set<std::set<int>> x_parts;
      for (const auto& c : chains) {
        std::set<int> outside;
        for (int v : c)
          if (!on_chain.count(v)) outside.insert(v);
        x_parts.insert(outside);
      }
      CHECK(x_parts.size() == chains.size());  // C -> C \ M is injective
      // Corollary: at most 2^(|P|-m) maximal chains.
      CHECK(Nat{chains.size()} <= Nat{1} << (n - m.size()));
    }
  }
}

TEST_CASE("max_chain") {
  CHECK(chainprof::max_chain(fixtures::chain(4)) == ElementSet{0, 1, 2, 3});
  CHECK(chainprof::max_chain(fixtures::pendant_witness()) == ElementSet{0, 1, 2, 3, 4});
  CHECK(chainprof::max_chain(fixtures::antichain(3)) == ElementSet{0});
  CHECK_THROWS_AS(chainprof::max_chain(Poset{}), chainprof::EmptyPosetError);
}
