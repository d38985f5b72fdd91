#include "chainprof/certificate.hpp"

#include <algorithm>
#include <set>

namespace chainprof {

namespace {

int longest_chain_cardinality(const Poset& p) {
  int n = p.size();
  std::vector<int> height(n, 0);
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
  return n == 0 ? 0 : best + 1;
}

bool fail(std::string* reason, const char* why) {
  if (reason) *reason = why;
  return false;
}

}  // namespace

CompressedPoset compress(const Poset& p, const ElementSet& m_chain) {
  if (p.empty() || m_chain.empty()) throw NotMaximumChainError("empty poset or chain");
  for (int v : m_chain)
    if (v < 0 || v >= p.size()) throw NotMaximumChainError("chain element out of range");
  for (std::size_t i = 0; i + 1 < m_chain.size(); ++i) {
    auto ups = p.upper_covers(m_chain[i]);
    if (std::find(ups.begin(), ups.end(), m_chain[i + 1]) == ups.end())
      throw NotMaximumChainError("consecutive chain elements must be covers");
  }
  if (!p.lower_covers(m_chain.front()).empty() || !p.upper_covers(m_chain.back()).empty())
    throw NotMaximumChainError("chain is not maximal");
  if (static_cast<int>(m_chain.size()) != longest_chain_cardinality(p))
    throw NotMaximumChainError("chain does not have maximum cardinality");

  std::uint64_t m = m_chain.size();
  std::vector<std::uint64_t> position(p.size(), 0);  // 1-based; 0 = not on chain
  for (std::size_t i = 0; i < m_chain.size(); ++i) position[m_chain[i]] = i + 1;

  std::vector<int> x_elements;
  for (int v = 0; v < p.size(); ++v)
    if (position[v] == 0) x_elements.push_back(v);
  std::vector<std::uint64_t> x_index(p.size(), 0);
  for (std::size_t i = 0; i < x_elements.size(); ++i)
    x_index[x_elements[i]] = i;

  std::set<std::uint64_t> retained{1, m};
  for (auto [u, v] : p.cover_edges()) {
    if (position[u] != 0 && position[v] == 0) retained.insert(position[u]);
    if (position[u] == 0 && position[v] != 0) retained.insert(position[v]);
  }

  CompressedPoset cert;
  cert.m = m;
  cert.mprime_positions.assign(retained.begin(), retained.end());
  cert.x_count = x_elements.size();
  auto vertex_of = [&](int v) -> CertVertex {
    if (position[v] != 0) return {true, position[v]};
    return {false, x_index[v]};
  };
  for (auto [u, v] : p.cover_edges()) {
    if (position[u] != 0 && position[v] != 0) {
      // Chain-internal covers join adjacent positions; keep only those with
      // both endpoints retained.
      if (!retained.count(position[u]) || !retained.count(position[v])) continue;
    }
    cert.light_edges.emplace_back(vertex_of(u), vertex_of(v));
  }
  std::sort(cert.light_edges.begin(), cert.light_edges.end());
  return cert;
}

bool verify(const CompressedPoset& cert, const ChainProfile& s, std::uint64_t t,
            std::string* reason) {
  if (s.empty()) return fail(reason, "empty profile claim");
  if (cert.m == 0) return fail(reason, "chain cardinality must be positive");
  const auto& pos = cert.mprime_positions;
  if (pos.empty() || pos.front() != 1 || pos.back() != cert.m)
    return fail(reason, "retained positions must start at 1 and end at m");
  for (std::size_t i = 0; i + 1 < pos.size(); ++i)
    if (pos[i] >= pos[i + 1]) return fail(reason, "retained positions must strictly increase");
  if (cert.m == 1 && pos.size() != 1) return fail(reason, "m = 1 admits a single position");

  Nat n = s.total();
  if (Nat{pos.size()} + cert.x_count > 3 * n - 1)
    return fail(reason, "vertex count exceeds succinctness bound");
  if (Nat{cert.m} + cert.x_count > t) return fail(reason, "cardinality claim violated");

  std::set<std::uint64_t> pos_set(pos.begin(), pos.end());
  std::set<std::pair<CertVertex, CertVertex>> edge_set;
  for (const auto& [u, v] : cert.light_edges) {
    if (u.on_chain && !pos_set.count(u.id)) return fail(reason, "edge references unknown vertex");
    if (!u.on_chain && u.id >= cert.x_count) return fail(reason, "edge references unknown vertex");
    if (v.on_chain && !pos_set.count(v.id)) return fail(reason, "edge references unknown vertex");
    if (!v.on_chain && v.id >= cert.x_count) return fail(reason, "edge references unknown vertex");
    if (u == v) return fail(reason, "self-loop edge");
    if (!edge_set.insert({u, v}).second) return fail(reason, "duplicate edge");
    if (u.on_chain && v.on_chain && v.id != u.id + 1)
      return fail(reason, "chain edge must join adjacent chain positions");
  }
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    if (pos[i + 1] == pos[i] + 1 &&
        !edge_set.count({CertVertex{true, pos[i]}, CertVertex{true, pos[i + 1]}}))
      return fail(reason, "missing cover edge between adjacent retained positions");
  }
  for (std::size_t i = 1; i + 1 < pos.size(); ++i) {
    bool touched = false;
    for (const auto& [u, v] : cert.light_edges) {
      if ((u == CertVertex{true, pos[i]} && !v.on_chain) ||
          (v == CertVertex{true, pos[i]} && !u.on_chain)) {
        touched = true;
        break;
      }
    }
    if (!touched) return fail(reason, "interior retained position has no extra-element edge");
  }

  // Weighted graph over retained positions followed by extra elements.
  std::size_t chain_count = pos.size();
  std::size_t vcount = chain_count + static_cast<std::size_t>(cert.x_count);
  auto vertex_id = [&](const CertVertex& v) -> std::size_t {
    if (v.on_chain) {
      auto it = std::lower_bound(pos.begin(), pos.end(), v.id);
      return static_cast<std::size_t>(it - pos.begin());
    }
    return chain_count + static_cast<std::size_t>(v.id);
  };
  struct Edge {
    std::size_t from, to;
    std::uint64_t weight;
  };
  std::vector<Edge> edges;
  for (const auto& [u, v] : cert.light_edges) edges.push_back({vertex_id(u), vertex_id(v), 1});
  for (std::size_t i = 0; i + 1 < pos.size(); ++i)
    if (pos[i + 1] > pos[i] + 1) edges.push_back({i, i + 1, pos[i + 1] - pos[i]});

  std::vector<std::vector<std::size_t>> adj(vcount);
  std::vector<int> indeg(vcount, 0), outdeg(vcount, 0);
  for (const Edge& e : edges) {
    adj[e.from].push_back(e.to);
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  {
    std::vector<int> deg = indeg;
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < vcount; ++v)
      if (deg[v] == 0) queue.push_back(v);
    std::size_t processed = 0;
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      ++processed;
      for (std::size_t w : adj[v])
        if (--deg[w] == 0) queue.push_back(w);
    }
    if (processed != vcount) return fail(reason, "cycle in certificate graph");
  }

  // Every weight-1 edge must be the unique path between its endpoints, or
  // the expanded covering relation would not be transitively reduced.
  for (const auto& [cu, cv] : cert.light_edges) {
    std::size_t u = vertex_id(cu), v = vertex_id(cv);
    std::vector<char> seen(vcount, 0);
    std::vector<std::size_t> stack;
    bool skipped_direct = false;
    for (std::size_t w : adj[u]) {
      if (w == v && !skipped_direct) {
        skipped_direct = true;
        continue;
      }
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    bool alternate = false;
    while (!stack.empty() && !alternate) {
      std::size_t w = stack.back();
      stack.pop_back();
      if (w == v) {
        alternate = true;
        break;
      }
      for (std::size_t z : adj[w]) {
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
      }
    }
    if (alternate) return fail(reason, "redundant weight-1 edge");
  }

  // L = sum of A^k for k = 1..V-1 with monomial entries x^w; the coefficient
  // of x^l in entry (i, j) counts weight-l paths from i to j. Any such path
  // extends to a distinct source-to-sink path, so in a certificate matching a
  // profile with n members no entry's path count can exceed n.
  std::vector<std::vector<LengthPolynomial>> a(vcount, std::vector<LengthPolynomial>(vcount));
  for (const Edge& e : edges) a[e.from][e.to][Nat{e.weight}] += 1;
  std::vector<std::vector<LengthPolynomial>> total = a;
  std::vector<std::vector<LengthPolynomial>> power = a;
  for (std::size_t k = 2; k < vcount; ++k) {
    std::vector<std::vector<LengthPolynomial>> next(vcount,
                                                    std::vector<LengthPolynomial>(vcount));
    bool nonzero = false;
    for (std::size_t i = 0; i < vcount; ++i) {
      for (std::size_t mid = 0; mid < vcount; ++mid) {
        if (power[i][mid].empty()) continue;
        for (std::size_t j = 0; j < vcount; ++j) {
          if (a[mid][j].empty()) continue;
          LengthPolynomial& out = next[i][j];
          for (const auto& [e1, c1] : power[i][mid])
            for (const auto& [e2, c2] : a[mid][j]) out[e1 + e2] += c1 * c2;
        }
      }
    }
    for (std::size_t i = 0; i < vcount; ++i) {
      for (std::size_t j = 0; j < vcount; ++j) {
        Nat entry_paths = 0;
        for (const auto& [exp, coeff] : next[i][j]) entry_paths += coeff;
        if (entry_paths > n) return fail(reason, "path count exceeds profile size");
        if (!next[i][j].empty()) {
          nonzero = true;
          for (const auto& [exp, coeff] : next[i][j]) total[i][j][exp] += coeff;
        }
      }
    }
    if (!nonzero) break;
    power = std::move(next);
  }

  LengthPolynomial lengths;
  for (std::size_t i = 0; i < vcount; ++i) {
    if (indeg[i] != 0) continue;
    if (outdeg[i] == 0) {
      lengths[0] += 1;  // isolated vertex: one maximal chain of cardinality 1
      continue;
    }
    for (std::size_t j = 0; j < vcount; ++j) {
      if (outdeg[j] != 0 || indeg[j] == 0) continue;
      for (const auto& [exp, coeff] : total[i][j]) lengths[exp] += coeff;
    }
  }

  ChainProfile computed;
  for (const auto& [exp, coeff] : lengths) {
    if (exp + 1 > Nat{UINT64_MAX}) return fail(reason, "path length out of range");
    computed.add(static_cast<std::uint64_t>(exp + 1), coeff);
  }
  if (computed != s) return fail(reason, "profile mismatch");
  if (reason) reason->clear();
  return true;
}

Nat size_of_profile(const ChainProfile& s) {
  if (s.empty()) throw InvalidProfileError("empty profile");
  Nat size = 0;
  for (const auto& [card, mult] : s.counts()) {
    std::uint64_t bits = 0;
    std::uint64_t v = card;
    while (v > 0) {
      ++bits;
      v >>= 1;
    }
    size += Nat{bits} * mult;
  }
  return size;
}

}  // namespace chainprof
