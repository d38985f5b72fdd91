#include <doctest.h>

#include <random>
#include <vector>

#include "chainprof/bounds.hpp"
#include "chainprof/profile.hpp"
#include "chainprof/search.hpp"
#include "fixtures.hpp"

using chainprof::BoundRule;
using chainprof::ChainProfile;
using chainprof::Nat;
using chainprof::Poset;

TEST_CASE("lower bound") {
  CHECK(chainprof::lower_bound(ChainProfile{3, 4, 5, 6, 7, 8, 9, 10}) == 13);
  CHECK(chainprof::lower_bound(ChainProfile{9}) == 9);
  CHECK(chainprof::lower_bound(ChainProfile{2, 3, 3, 5, 5}) == 8);
  CHECK_THROWS_AS(chainprof::lower_bound(ChainProfile{}), chainprof::InvalidProfileError);
}

TEST_CASE("upper bound") {
  CHECK(chainprof::upper_bound(ChainProfile{2, 3, 3, 5, 5}) == 9);
  CHECK(chainprof::upper_bound(ChainProfile{9}) == 9);
  CHECK(chainprof::upper_bound(ChainProfile{1, 4, 5, 6}) == 9);
}

TEST_CASE("sparse condition") {
  CHECK(chainprof::sparse_condition(ChainProfile{1, 4, 5, 6}));
  CHECK_FALSE(chainprof::sparse_condition(ChainProfile{2, 3, 3, 5, 5}));
  CHECK_FALSE(chainprof::sparse_condition(ChainProfile{3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST_CASE("sparse condition matches the consecutive-triple scan") {
  // The all-triples condition is binding on some consecutive triple of the
  // sorted distinct members; cross-check the implementation against that scan.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);
    ChainProfile s;
    for (int i = 0; i < n; ++i)
      s.add(std::uniform_int_distribution<std::uint64_t>(1, 20)(rng));
    bool scan = true;
    std::vector<std::uint64_t> members;
    for (const auto& [card, mult] : s.counts()) {
      if (mult > 1) scan = false;
      members.push_back(card);
    }
    if (scan) {
      Nat total = s.total();
      Nat m = s.max_cardinality();
      for (std::size_t i = 0; i + 2 < members.size(); ++i) {
        if (m - members[i] <
            (m - members[i + 1]) + (m - members[i + 2]) + total - 3) {
          scan = false;
          break;
        }
      }
    }
    CHECK(chainprof::sparse_condition(s) == scan);
  }
}

TEST_CASE("exact bounds") {
  auto small = chainprof::exact_bounds(ChainProfile{2, 3});
  CHECK(small.lower == 4);
  CHECK(small.upper == 4);
  CHECK(small.exact == 4);
  CHECK(small.rule == BoundRule::small_n);

  auto sums = chainprof::exact_bounds(ChainProfile{3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(sums.lower == 13);
  CHECK(sums.upper == 17);
  CHECK(sums.exact == 13);
  CHECK(sums.rule == BoundRule::shifted_sums);

  auto sparse = chainprof::exact_bounds(ChainProfile{1, 4, 5, 6});
  CHECK(sparse.lower == 8);
  CHECK(sparse.upper == 9);
  CHECK(sparse.exact == 9);
  CHECK(sparse.rule == BoundRule::sparse_condition);

  auto open = chainprof::exact_bounds(ChainProfile{2, 3, 3, 5, 5});
  CHECK_FALSE(open.exact.has_value());
  CHECK(open.rule == BoundRule::none);
}

TEST_CASE("every small poset satisfies the lower bound") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : chainprof::enumerate_posets(n))
      CHECK(static_cast<std::uint64_t>(p.size()) >=
            chainprof::lower_bound(chainprof::profile_matrix(p)));
}

TEST_CASE("report invariants on random profiles") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    ChainProfile s;
    for (int i = 0; i < n; ++i)
      s.add(std::uniform_int_distribution<std::uint64_t>(1, 15)(rng));
    auto report = chainprof::exact_bounds(s);
    CHECK(report.lower <= report.upper);
    CHECK((report.exact.has_value()) == (report.rule != BoundRule::none));
    if (report.exact) {
      CHECK(report.lower <= *report.exact);
      CHECK(*report.exact <= report.upper);
    }
  }
}
