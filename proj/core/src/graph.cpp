#include "rp3/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace rp3 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::BadVertex: return "BadVertex";
    case Errc::BadVertices: return "BadVertices";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::DimensionExceeded: return "DimensionExceeded";
    case Errc::NotACycle: return "NotACycle";
    case Errc::ModelInvalid: return "ModelInvalid";
    case Errc::NotK33: return "NotK33";
    case Errc::NotATriangle: return "NotATriangle";
    case Errc::NotDegree3: return "NotDegree3";
    case Errc::WouldCreateParallel: return "WouldCreateParallel";
    case Errc::MarksNotIndependent: return "MarksNotIndependent";
    case Errc::ParseError: return "ParseError";
    case Errc::ObstructionDataMissing: return "ObstructionDataMissing";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int popcount(VertexMask m) { return std::popcount(m); }
int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxOrder) {
    throw Error(Errc::SizeExceeded, "graph order " + std::to_string(n) + " outside 0.." +
                                        std::to_string(kMaxOrder));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(Errc::BadVertex, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(Errc::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
  }
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  for (VertexMask m = neighbors(v); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int Graph::edge_index_or_throw(int u, int v) const {
  auto idx = edge_index(u, v);
  if (!idx) {
    throw Error(Errc::MissingEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return *idx;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d.push_back(degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

int Graph::component_count() const {
  VertexMask unseen = all_vertices();
  int count = 0;
  while (unseen != 0) {
    VertexMask frontier = bit(lowest_vertex(unseen));
    VertexMask seen = frontier;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= neighbors(lowest_vertex(f));
      frontier = next & ~seen;
      seen |= next;
    }
    unseen &= ~seen;
    ++count;
  }
  return count;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(static_cast<std::size_t>(n_), -1);
  for (int s = 0; s < n_; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : neighbor_list(x)) {
        auto& sy = side[static_cast<std::size_t>(y)];
        if (sy < 0) {
          sy = 1 - side[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (sy == side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

MarkedGraph::MarkedGraph(Graph g, std::array<int, 3> m) : graph(std::move(g)), marks(m) {
  for (int v : marks) check_vertex(graph, v);
  if (marks[0] == marks[1] || marks[0] == marks[2] || marks[1] == marks[2]) {
    throw Error(Errc::BadVertices, "marked vertices must be distinct");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (graph.adjacent(marks[i], marks[j])) {
        throw Error(Errc::MarksNotIndependent, "marks " + std::to_string(marks[i]) + " and " +
                                                   std::to_string(marks[j]) + " are adjacent");
      }
    }
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::BadVertex,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(g.order() - 1));
  }
}

void check_order(const Graph& g, const Limits& limits) {
  if (g.order() > limits.max_vertices) {
    throw Error(Errc::SizeExceeded, std::to_string(g.order()) + " vertices exceeds bound " +
                                        std::to_string(limits.max_vertices));
  }
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return Graph(g.order(), std::move(edges));
}

Graph delete_edge(const Graph& g, Edge e) {
  const int idx = g.edge_index_or_throw(e.u, e.v);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + idx);
  return Graph(g.order(), std::move(edges));
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.all_vertices() & ~bit(v));
}

Graph contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  g.edge_index_or_throw(e.u, e.v);
  auto relabel_vertex = [&](int x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (const auto& f : g.edges()) {
    const int a = relabel_vertex(f.u);
    const int b = relabel_vertex(f.v);
    if (a != b) edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.order() - 1, std::move(edges));
}

Graph induced_subgraph(const Graph& g, VertexMask keep, std::vector<int>* old_of_new) {
  keep &= g.all_vertices();
  std::vector<int> new_of_old(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> olds;
  for (VertexMask m = keep; m != 0; m &= m - 1) {
    const int v = lowest_vertex(m);
    new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(olds.size());
    olds.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = new_of_old[static_cast<std::size_t>(e.u)];
    const int b = new_of_old[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  if (old_of_new != nullptr) *old_of_new = olds;
  return Graph(static_cast<int>(olds.size()), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& e : g.edges()) {
    edges.push_back(make_edge(perm[static_cast<std::size_t>(e.u)],
                              perm[static_cast<std::size_t>(e.v)]));
  }
  return Graph(g.order(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  const std::array<int, 2> parts{a, b};
  return complete_multipartite(parts);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer pentagon
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (const auto& e : g.edges()) {
    out << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  out << "])";
  return out.str();
}

}  // namespace rp3
