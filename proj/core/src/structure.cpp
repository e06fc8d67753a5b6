#include "rp3/structure.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "rp3/minor.hpp"

namespace rp3 {

namespace {

bool connected_within(const Graph& g, VertexMask alive) {
  if (alive == 0) return true;
  VertexMask seen = bit(lowest_vertex(alive));
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) next |= g.neighbors(lowest_vertex(m));
    frontier = next & alive & ~seen;
    seen |= frontier;
  }
  return seen == alive;
}

}  // namespace

Connectivity connectivity(const Graph& g, const Limits& limits) {
  check_order(g, limits);
  const int n = g.order();
  const VertexMask all = g.all_vertices();
  if (n <= 1 || !connected_within(g, all)) return {};
  for (int s = 1; s <= n - 2; ++s) {
    // Gosper's hack over s-subsets of n vertices.
    for (VertexMask cut = bit(s) - 1; cut < bit(n); ) {
      if (!connected_within(g, all & ~cut)) {
        Connectivity out{s, {}};
        for (VertexMask m = cut; m != 0; m &= m - 1) out.cut.push_back(lowest_vertex(m));
        return out;
      }
      const VertexMask c = cut & (~cut + 1);
      const VertexMask r = cut + c;
      cut = (((r ^ cut) >> 2) / c) | r;
    }
  }
  return {n - 1, {}};
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar_by_minors(const Graph& g, const Limits& limits) {
  return !is_minor(complete_graph(5), g, limits) && !is_minor(complete_bipartite(3, 3), g, limits);
}

bool is_projective_planar(const Graph& g, std::span<const Graph> obstructions, const Limits& limits) {
  if (obstructions.empty()) throw Error(Errc::ObstructionDataMissing, "no projective-plane obstructions loaded");
  for (const Graph& h : obstructions) {
    if (h.order() <= g.order() && h.size() <= g.size() && is_minor(h, g, limits)) return false;
  }
  return true;
}

}  // namespace rp3
