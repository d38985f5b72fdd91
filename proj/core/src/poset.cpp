#include "chainprof/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace chainprof {

namespace {

// Source-to-sink path count in a cover DAG, saturating at `cap`.
std::uint64_t count_maximal_chains_capped(const Poset& p, std::uint64_t cap) {
  int n = p.size();
  if (n == 0) return 0;
  // paths[v] = number of maximal chains starting at v, computed in reverse
  // topological order (any order works if we memoize by recursion).
  std::vector<std::uint64_t> paths(n, 0);
  std::vector<char> done(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (done[v]) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      for (int w : p.upper_covers(v)) {
        if (!done[w]) {
          stack.push_back(w);
          ready = false;
        }
      }
      if (!ready) continue;
      std::uint64_t total = 0;
      auto ups = p.upper_covers(v);
      if (ups.empty()) {
        total = 1;
      } else {
        for (int w : ups) {
          total += paths[w];
          if (total >= cap) {
            total = cap;
            break;
          }
        }
      }
      paths[v] = total;
      done[v] = 1;
      stack.pop_back();
    }
  }
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v) {
    if (!p.lower_covers(v).empty()) continue;
    total += paths[v];
    if (total >= cap) return cap;
  }
  return total;
}

}  // namespace

void Poset::check_index(int x) const {
  if (x < 0 || x >= n_)
    throw IndexError("element index " + std::to_string(x) + " out of range [0, " +
                     std::to_string(n_) + ")");
}

Poset Poset::from_cover_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw IndexError("negative element count");
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw IndexError("cover edge (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") out of range for " + std::to_string(n) + " elements");
    if (i == j) throw CycleError("self-loop on element " + std::to_string(i));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t e = 1; e < edges.size(); ++e) {
    if (edges[e] == edges[e - 1])
      throw DuplicateEdgeError("duplicate cover edge (" + std::to_string(edges[e].first) +
                               ", " + std::to_string(edges[e].second) + ")");
  }

  Poset p;
  p.n_ = n;
  p.edges_ = std::move(edges);
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (auto [i, j] : p.edges_) {
    p.up_[i].push_back(j);
    p.down_[j].push_back(i);
  }

  // Acyclicity (Kahn).
  std::vector<int> indeg(n, 0);
  for (auto [i, j] : p.edges_) {
    (void)i;
    ++indeg[j];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int processed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++processed;
    for (int w : p.up_[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (processed != n) throw CycleError("cover graph contains a directed cycle");

  // Transitive-reduction check. Edge (u, v) is redundant iff v is reachable
  // from another upper cover of u, so only vertices with out-degree >= 2 can
  // expose a redundant edge.
  std::vector<char> visited(n, 0);
  std::vector<char> target(n, 0);
  std::vector<int> touched;
  std::vector<int> dfs;
  for (int u = 0; u < n; ++u) {
    const auto& succ = p.up_[u];
    if (succ.size() < 2) continue;
    for (int w : succ) target[w] = 1;
    for (int w : succ) {
      for (int z : p.up_[w]) {
        if (!visited[z]) {
          visited[z] = 1;
          touched.push_back(z);
          dfs.push_back(z);
        }
      }
    }
    int redundant = -1;
    while (!dfs.empty()) {
      int v = dfs.back();
      dfs.pop_back();
      if (target[v]) {
        redundant = v;
        break;
      }
      for (int z : p.up_[v]) {
        if (!visited[z]) {
          visited[z] = 1;
          touched.push_back(z);
          dfs.push_back(z);
        }
      }
    }
    for (int w : succ) target[w] = 0;
    for (int z : touched) visited[z] = 0;
    touched.clear();
    dfs.clear();
    if (redundant >= 0) throw RedundantEdgeError(u, redundant);
  }
  return p;
}

std::span<const int> Poset::upper_covers(int x) const {
  check_index(x);
  return up_[x];
}

std::span<const int> Poset::lower_covers(int x) const {
  check_index(x);
  return down_[x];
}

bool Poset::leq(int x, int y) const {
  check_index(x);
  check_index(y);
  if (x == y) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : up_[v]) {
      if (w == y) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

ElementSet Poset::minimal_elements() const {
  ElementSet out;
  for (int v = 0; v < n_; ++v)
    if (down_[v].empty()) out.push_back(v);
  return out;
}

ElementSet Poset::maximal_elements() const {
  ElementSet out;
  for (int v = 0; v < n_; ++v)
    if (up_[v].empty()) out.push_back(v);
  return out;
}

Poset Poset::suborder(const ElementSet& subset) const {
  std::vector<char> member(n_, 0);
  for (int v : subset) {
    check_index(v);
    if (member[v]) throw IndexError("duplicate element " + std::to_string(v) + " in subset");
    member[v] = 1;
  }
  int k = static_cast<int>(subset.size());
  // Strict reachability restricted to the subset.
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a) {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{subset[a]};
    seen[subset[a]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : up_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int b = 0; b < k; ++b)
      if (b != a && seen[subset[b]]) below[a][b] = 1;
  }
  // Covering relation = transitive reduction of the restricted order.
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!below[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < k && direct; ++c)
        if (below[a][c] && below[c][b]) direct = false;
      if (direct) edges.emplace_back(a, b);
    }
  }
  return from_cover_edges(k, std::move(edges));
}

bool Poset::is_splitting_element(int x) const {
  check_index(x);
  ElementSet down, up;
  for (int v = 0; v < n_; ++v) {
    if (leq(v, x)) down.push_back(v);
    if (leq(x, v)) up.push_back(v);
  }
  if (count_maximal_chains_capped(suborder(down), 2) < 2) return false;
  return count_maximal_chains_capped(suborder(up), 2) >= 2;
}

Poset ordinal_sum(const Poset& lo, const Poset& hi) {
  int n1 = lo.size();
  int n2 = hi.size();
  std::vector<std::pair<int, int>> edges = lo.cover_edges();
  for (auto [i, j] : hi.cover_edges()) edges.emplace_back(i + n1, j + n1);
  for (int a : lo.maximal_elements())
    for (int b : hi.minimal_elements()) edges.emplace_back(a, b + n1);
  return Poset::from_cover_edges(n1 + n2, std::move(edges));
}

namespace {

constexpr int kCanonicalMax = 16;

// Iterated degree refinement; colors are assigned in sorted-signature order
// so the resulting coloring is invariant under relabeling.
std::vector<int> refine_colors(int n, const std::vector<std::uint32_t>& out,
                               const std::vector<std::uint32_t>& in) {
  std::vector<int> color(n, 0);
  int ncolors = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v], -1};
      for (int w = 0; w < n; ++w)
        if (out[v] >> w & 1u) s.push_back(color[w]);
      std::sort(s.begin() + 2, s.end());
      s.push_back(-2);
      std::size_t mark = s.size();
      for (int w = 0; w < n; ++w)
        if (in[v] >> w & 1u) s.push_back(color[w]);
      std::sort(s.begin() + static_cast<long>(mark), s.end());
      sig[v] = std::move(s);
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), sig[v]);
      color[v] = static_cast<int>(it - sorted.begin());
    }
    int next = static_cast<int>(sorted.size());
    if (next == ncolors) break;
    ncolors = next;
  }
  return color;
}

}  // namespace

std::string canonical_form(const Poset& p) {
  int n = p.size();
  if (n > kCanonicalMax) throw Error("canonical_form supports at most 16 elements");
  if (n == 0) return std::string(1, '\0');

  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (auto [i, j] : p.cover_edges()) {
    out[i] |= 1u << j;
    in[j] |= 1u << i;
  }
  std::vector<int> color = refine_colors(n, out, in);

  // Positions are consumed class by class in canonical color order.
  std::vector<int> class_at_pos;
  {
    std::vector<int> sizes(*std::max_element(color.begin(), color.end()) + 1, 0);
    for (int v = 0; v < n; ++v) ++sizes[color[v]];
    for (std::size_t c = 0; c < sizes.size(); ++c)
      for (int r = 0; r < sizes[c]; ++r) class_at_pos.push_back(static_cast<int>(c));
  }

  // Minimize the bit sequence s where level p contributes A(0,p)..A(p-1,p)
  // then A(p,0)..A(p,p), over all class-respecting vertex orders. 2 is a
  // sentinel larger than any bit, so a freshly improved prefix always wins.
  std::vector<std::uint8_t> best(static_cast<std::size_t>(n) * n, 2);
  std::vector<int> perm;
  perm.reserve(n);
  std::vector<char> used(n, 0);

  auto twin_skip = [&](int v) {
    // Interchangeable with an unused lower-indexed vertex: same color and
    // identical cover neighborhoods (an automorphic swap).
    for (int u = 0; u < v; ++u)
      if (!used[u] && color[u] == color[v] && out[u] == out[v] && in[u] == in[v]) return true;
    return false;
  };

  std::vector<std::uint8_t> seg;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) return;
    std::size_t off = static_cast<std::size_t>(pos) * pos;
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != class_at_pos[pos]) continue;
      if (twin_skip(v)) continue;
      seg.clear();
      for (int q = 0; q < pos; ++q) seg.push_back(static_cast<std::uint8_t>(out[perm[q]] >> v & 1u));
      for (int q = 0; q < pos; ++q) seg.push_back(static_cast<std::uint8_t>(out[v] >> perm[q] & 1u));
      seg.push_back(0);  // A(p,p)
      int cmp = 0;
      for (std::size_t i = 0; i < seg.size(); ++i) {
        if (seg[i] != best[off + i]) {
          cmp = seg[i] < best[off + i] ? -1 : 1;
          break;
        }
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        std::copy(seg.begin(), seg.end(), best.begin() + static_cast<long>(off));
        std::fill(best.begin() + static_cast<long>(off + seg.size()), best.end(),
                  static_cast<std::uint8_t>(2));
      }
      used[v] = 1;
      perm.push_back(v);
      self(self, pos + 1);
      perm.pop_back();
      used[v] = 0;
    }
  };
  rec(rec, 0);

  std::string key;
  key.push_back(static_cast<char>(n));
  std::uint8_t acc = 0;
  int bits = 0;
  for (std::uint8_t b : best) {
    acc = static_cast<std::uint8_t>(acc << 1 | b);
    if (++bits == 8) {
      key.push_back(static_cast<char>(acc));
      acc = 0;
      bits = 0;
    }
  }
  if (bits > 0) key.push_back(static_cast<char>(acc << (8 - bits)));
  return key;
}

}  // namespace chainprof
