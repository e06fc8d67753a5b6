#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rp3/error.hpp"

namespace rp3 {

using VertexMask = std::uint64_t;

// Vertex masks are 64 bits wide, which is the hard ceiling on graph order.
inline constexpr int kMaxOrder = 64;

struct Limits {
  int max_vertices = 20;
  int max_dim = 24;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline VertexMask bit(int v) { return VertexMask{1} << v; }

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted so structurally equal graphs compare equal and
/// every edge has a stable index; cycle sets and homology assignments are
/// keyed to that index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  std::vector<int> neighbor_list(int v) const;
  VertexMask all_vertices() const { return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1; }

  std::optional<int> edge_index(int u, int v) const;
  int edge_index_or_throw(int u, int v) const;

  std::vector<int> degree_sequence() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  bool is_bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

/// A graph with three pairwise non-adjacent marked vertices.
struct MarkedGraph {
  MarkedGraph() = default;
  MarkedGraph(Graph g, std::array<int, 3> m);

  Graph graph;
  std::array<int, 3> marks{};

  VertexMask mark_mask() const { return bit(marks[0]) | bit(marks[1]) | bit(marks[2]); }
};

void check_vertex(const Graph& g, int v);
void check_order(const Graph& g, const Limits& limits);

Graph add_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, int v);

// Merges e.v into e.u (e.u < e.v); vertices above e.v shift down by one.
// Loops vanish and parallel edges merge.
Graph contract_edge(const Graph& g, Edge e);

/// Vertices of `keep` in increasing order become 0..k-1. When `old_of_new` is
/// given it receives the original index of each new vertex.
Graph induced_subgraph(const Graph& g, VertexMask keep, std::vector<int>* old_of_new = nullptr);

/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

std::string to_string(const Graph& g);

int popcount(VertexMask m);
int lowest_vertex(VertexMask m);

}  // namespace rp3
