#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's canon, minor, homology or structure code; they share only Graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "rp3/graph.hpp"

namespace oracle {

using rp3::Edge;
using rp3::Graph;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order())));
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return a;
}

// Every permutation p (p[v] = image) with g's edges mapped onto h's edges,
// found by extending partial maps one vertex at a time.
template <class Visit>
void for_each_isomorphism(const Graph& g, const Graph& h, Visit&& visit) {
  if (g.order() != h.order() || g.size() != h.size()) return;
  const int n = g.order();
  const auto ag = adjacency(g);
  const auto ah = adjacency(h);
  std::vector<int> p(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n));
  bool stop = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      if (!visit(p)) stop = true;
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = ag[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
             ah[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])][static_cast<std::size_t>(w)];
      }
      if (!ok) continue;
      p[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
    p[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0);
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  bool found = false;
  for_each_isomorphism(g, h, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(g, g, [&](const std::vector<int>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

struct Orbits {
  int vertex_orbits = 0;
  int pair_orbits = 0;
  int vfn_one = 0;  // pair orbits without a swapping automorphism
  std::uint64_t group_order = 0;
};

inline Orbits orbit_counts(const Graph& g) {
  const auto auts = automorphisms(g);
  const int n = g.order();
  Orbits o;
  o.group_order = auts.size();
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++o.vertex_orbits;
    for (const auto& p : auts) seen[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = true;
  }
  std::set<std::pair<int, int>> done;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (done.contains({x, y})) continue;
      ++o.pair_orbits;
      bool swap = false;
      for (const auto& p : auts) {
        const int a = p[static_cast<std::size_t>(x)];
        const int b = p[static_cast<std::size_t>(y)];
        done.insert({std::min(a, b), std::max(a, b)});
        if (a == y && b == x) swap = true;
      }
      if (!swap) ++o.vfn_one;
    }
  }
  return o;
}

// Simple cycles as vertex sets with multiplicity: for every vertex subset S,
// the Hamiltonian cycles of g[S], counted by permutations of S fixing its
// lowest vertex and halved for direction.
inline std::map<int, int> cycle_length_counts(const Graph& g) {
  const int n = g.order();
  std::map<int, int> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) verts.push_back(v);
    }
    std::vector<int> rest(verts.begin() + 1, verts.end());
    int count = 0;
    do {
      int prev = verts[0];
      bool ok = true;
      for (int v : rest) {
        if (!g.adjacent(prev, v)) {
          ok = false;
          break;
        }
        prev = v;
      }
      if (ok && g.adjacent(prev, verts[0])) ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (count) out[k] += count / 2;
  }
  return out;
}

inline int total_cycles(const Graph& g) {
  int t = 0;
  for (const auto& [len, c] : cycle_length_counts(g)) t += c;
  return t;
}

// Vertex connectivity via Menger: the minimum, over non-adjacent pairs, of
// the number of internally disjoint paths, found by unit-capacity max flow on
// the split-vertex digraph.
inline int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  const int N = 2 * n;  // v_in = 2v, v_out = 2v + 1
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
  for (const Edge& e : g.edges()) {
    cap[static_cast<std::size_t>(2 * e.u + 1)][static_cast<std::size_t>(2 * e.v)] = n;
    cap[static_cast<std::size_t>(2 * e.v + 1)][static_cast<std::size_t>(2 * e.u)] = n;
  }
  const int src = 2 * s + 1;
  const int dst = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(N), -1);
    prev[static_cast<std::size_t>(src)] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[static_cast<std::size_t>(dst)] < 0) {
      const int x = q.front();
      q.pop();
      for (int y = 0; y < N; ++y) {
        if (prev[static_cast<std::size_t>(y)] < 0 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          prev[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
      }
    }
    if (prev[static_cast<std::size_t>(dst)] < 0) return flow;
    for (int y = dst; y != src; y = prev[static_cast<std::size_t>(y)]) {
      const int x = prev[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
}

inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

inline bool is_separator(const Graph& g, const std::vector<int>& cut) {
  rp3::VertexMask keep = g.all_vertices();
  for (int v : cut) keep &= ~rp3::bit(v);
  if (keep == 0) return false;
  const int start = std::countr_zero(keep);
  rp3::VertexMask seen = rp3::bit(start);
  rp3::VertexMask frontier = seen;
  while (frontier) {
    rp3::VertexMask next = 0;
    for (int v = 0; v < g.order(); ++v) {
      if ((frontier >> v) & 1U) next |= g.neighbors(v) & keep;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen != keep;
}

// Contracts u into v (u > v) or deletes, with no relabeling tricks beyond
// shifting indices down. Kept separate from rp3::contract_edge.
inline Graph merge(const Graph& g, int keep, int drop) {
  std::vector<Edge> edges;
  auto idx = [&](int x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    const int a = idx(e.u);
    const int b = idx(e.v);
    if (a == b) continue;
    if (seen.insert({std::min(a, b), std::max(a, b)}).second) edges.push_back(rp3::make_edge(a, b));
  }
  return Graph(g.order() - 1, edges);
}

// Canonical key by trying every permutation; only for tiny graphs.
inline std::vector<bool> brute_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> key(static_cast<std::size_t>(n * n));
    for (const Edge& e : g.edges()) {
      const int a = p[static_cast<std::size_t>(e.u)];
      const int b = p[static_cast<std::size_t>(e.v)];
      key[static_cast<std::size_t>(a * n + b)] = true;
      key[static_cast<std::size_t>(b * n + a)] = true;
    }
    if (best.empty() || key > best) best = key;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// h is a minor of g iff some graph reached from g by deletions and
// contractions is isomorphic to h. Explores the closure layer by layer,
// deduplicated by brute_key; practical up to about 7 vertices.
inline bool is_minor(const Graph& h, const Graph& g) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  std::set<std::pair<int, std::vector<bool>>> seen;
  std::vector<Graph> stack{g};
  seen.insert({g.order(), brute_key(g)});
  while (!stack.empty()) {
    Graph x = stack.back();
    stack.pop_back();
    if (x.order() == h.order() && x.size() >= h.size()) {
      // h is a spanning subgraph of x up to isomorphism.
      bool sub = false;
      std::vector<int> p(static_cast<std::size_t>(x.order()));
      std::iota(p.begin(), p.end(), 0);
      do {
        bool ok = true;
        for (const Edge& e : h.edges()) {
          if (!x.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
            ok = false;
            break;
          }
        }
        sub = ok;
      } while (!sub && std::next_permutation(p.begin(), p.end()));
      if (sub) return true;
    }
    if (x.order() <= h.order()) continue;
    std::vector<Graph> next;
    for (int v = 0; v < x.order(); ++v) {
      std::vector<Edge> edges;
      for (const Edge& e : x.edges()) {
        if (e.u != v && e.v != v) edges.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
      }
      next.emplace_back(x.order() - 1, edges);
    }
    for (const Edge& e : x.edges()) next.push_back(merge(x, e.u, e.v));
    for (auto& y : next) {
      if (y.size() < h.size()) continue;
      if (seen.insert({y.order(), brute_key(y)}).second) stack.push_back(std::move(y));
    }
  }
  return false;
}

// GF(2) solve: expresses `target` as a sum of `rows`, returning the chosen
// subset as a bitmask, or nullopt when target is outside their span.
inline std::optional<std::uint64_t> decompose(const std::vector<std::vector<bool>>& rows, const std::vector<bool>& target) {
  const std::size_t m = rows.size();
  const std::size_t w = target.size();
  // Augmented columns: each row carries its own identity tag.
  std::vector<std::vector<bool>> r = rows;
  std::vector<std::uint64_t> tag(m);
  for (std::size_t i = 0; i < m; ++i) tag[i] = std::uint64_t{1} << i;
  std::vector<bool> t = target;
  std::uint64_t t_tag = 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && !r[piv][col]) ++piv;
    if (piv == m) continue;
    std::swap(r[piv], r[rank]);
    std::swap(tag[piv], tag[rank]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != rank && r[i][col]) {
        for (std::size_t c = 0; c < w; ++c) r[i][c] = r[i][c] ^ r[rank][c];
        tag[i] ^= tag[rank];
      }
    }
    if (t[col]) {
      for (std::size_t c = 0; c < w; ++c) t[c] = t[c] ^ r[rank][c];
      t_tag ^= tag[rank];
    }
    ++rank;
  }
  if (std::any_of(t.begin(), t.end(), [](bool b) { return b; })) return std::nullopt;
  return t_tag;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
