#include "chainprof/profile.hpp"

#include <algorithm>

namespace chainprof {

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
  std::size_t n = a.size();
  CountMatrix c(n, std::vector<Nat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j] == 0) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

CountMatrix adjacency_matrix(const Poset& p) {
  if (p.empty()) throw EmptyPosetError("adjacency_matrix of empty poset");
  std::size_t n = static_cast<std::size_t>(p.size());
  CountMatrix a(n, std::vector<Nat>(n, 0));
  for (auto [i, j] : p.cover_edges()) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return a;
}

ChainProfile profile_matrix(const Poset& p) {
  if (p.empty()) throw EmptyPosetError("profile of empty poset");
  int n = p.size();
  CountMatrix a = adjacency_matrix(p);
  std::vector<char> is_min(n, 0), is_max(n, 0);
  for (int v : p.minimal_elements()) is_min[v] = 1;
  for (int v : p.maximal_elements()) is_max[v] = 1;

  ChainProfile profile;
  // k = 0: identity matrix, i.e. isolated elements.
  Nat isolated = 0;
  for (int v = 0; v < n; ++v)
    if (is_min[v] && is_max[v]) ++isolated;
  if (isolated > 0) profile.add(1, isolated);

  CountMatrix power = a;  // A^k, multiplied once per k
  for (int k = 1; k < n; ++k) {
    Nat count = 0;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Nat& e = power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e == 0) continue;
        nonzero = true;
        if (is_min[i] && is_max[j]) count += e;
      }
    }
    if (count > 0) profile.add(static_cast<std::uint64_t>(k) + 1, count);
    if (!nonzero || k == n - 1) break;
    power = multiply(power, a);
  }
  return profile;
}

ChainProfile profile_enumerate(const Poset& p, std::uint64_t path_budget) {
  if (p.empty()) throw EmptyPosetError("profile of empty poset");
  ChainProfile profile;
  std::uint64_t found = 0;
  std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next upper-cover slot)
  for (int s : p.minimal_elements()) {
    stack.clear();
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      auto ups = p.upper_covers(v);
      if (ups.empty()) {
        if (++found > path_budget)
          throw BudgetExceededError("more than " + std::to_string(path_budget) +
                                    " maximal chains");
        profile.add(stack.size());
        stack.pop_back();
        continue;
      }
      if (slot == ups.size()) {
        stack.pop_back();
        continue;
      }
      int w = ups[slot++];
      stack.emplace_back(w, 0);
    }
  }
  return profile;
}

ElementSet max_chain(const Poset& p) {
  if (p.empty()) throw EmptyPosetError("max_chain of empty poset");
  int n = p.size();
  // height[v] = largest number of elements on a chain from v up to a sink.
  std::vector<int> height(n, 0);
  std::vector<int> order;  // reverse topological
  {
    std::vector<int> outdeg(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
      outdeg[v] = static_cast<int>(p.upper_covers(v).size());
      if (outdeg[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      order.push_back(v);
      for (int w : p.lower_covers(v))
        if (--outdeg[w] == 0) queue.push_back(w);
    }
  }
  for (int v : order) {
    int best = 0;
    for (int w : p.upper_covers(v)) best = std::max(best, height[w]);
    height[v] = best + 1;
  }
  int m = 0;
  for (int v : p.minimal_elements()) m = std::max(m, height[v]);

  ElementSet chain;
  int cur = -1;
  for (int v : p.minimal_elements()) {
    if (height[v] == m) {
      cur = v;
      break;
    }
  }
  chain.push_back(cur);
  while (height[cur] > 1) {
    int next = -1;
    auto ups = p.upper_covers(cur);
    std::vector<int> sorted(ups.begin(), ups.end());
    std::sort(sorted.begin(), sorted.end());
    for (int w : sorted) {
      if (height[w] == height[cur] - 1) {
        next = w;
        break;
      }
    }
    chain.push_back(next);
    cur = next;
  }
  return chain;
}

}  // namespace chainprof
