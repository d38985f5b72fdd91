#include "chainprof/bounds.hpp"

#include <vector>

#include "chainprof/constructions.hpp"

namespace chainprof {

namespace {

std::uint64_t ceil_log2(const Nat& n) {
  if (n <= 1) return 0;
  std::uint64_t bit = boost::multiprecision::msb(n);
  Nat pow = Nat{1} << bit;
  return pow == n ? bit : bit + 1;
}

std::uint64_t to_u64(const Nat& n, const char* what) {
  if (n > Nat{UINT64_MAX}) throw SizeError(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

}  // namespace

std::string to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::small_n: return "small_n";
    case BoundRule::shifted_sums: return "shifted_sums";
    case BoundRule::sparse_condition: return "sparse_condition";
    case BoundRule::none: break;
  }
  return "none";
}

std::uint64_t lower_bound(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  return s.max_cardinality() + ceil_log2(s.total());
}

std::uint64_t upper_bound(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  return to_u64(Nat{s.max_cardinality()} + s.total() - 1, "upper bound");
}

bool sparse_condition(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  std::vector<std::uint64_t> members;
  for (const auto& [card, mult] : s.counts()) {
    if (mult > 1) return false;
    members.push_back(card);
  }
  Nat n = s.total();
  Nat m = s.max_cardinality();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (std::size_t k = j + 1; k < members.size(); ++k)
        if (m - members[i] < (m - members[j]) + (m - members[k]) + n - 3) return false;
  return true;
}

BoundsReport exact_bounds(const ChainProfile& s) {
  BoundsReport report;
  report.lower = lower_bound(s);
  report.upper = upper_bound(s);
  if (s.total() <= 3) {
    report.exact = report.upper;
    report.rule = BoundRule::small_n;
  } else if (as_shifted_sums(s)) {
    report.exact = report.lower;
    report.rule = BoundRule::shifted_sums;
  } else if (sparse_condition(s)) {
    report.exact = report.upper;
    report.rule = BoundRule::sparse_condition;
  }
  return report;
}

}  // namespace chainprof
