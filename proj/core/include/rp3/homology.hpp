#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rp3/graph.hpp"
#include "rp3/minor.hpp"

namespace rp3 {

/// Edge-incidence vector over GF(2), indexed by the host's edge order.
using EdgeSet = boost::dynamic_bitset<>;

EdgeSet edge_set(const Graph& g, std::span<const int> edge_indices);
/// Closed walk v0 v1 ... v(k-1) v0 as an edge set; throws MissingEdge.
EdgeSet cycle_edges(const Graph& g, std::span<const int> vertices);
bool is_even(const Graph& g, const EdgeSet& c);

/// Cycle space of a graph with the fundamental-cycle basis of its BFS
/// spanning forest. Coordinate i belongs to the i-th non-tree edge, so the
/// coordinates of any cycle-space element are exactly its non-tree edges.
class CycleSpace {
 public:
  explicit CycleSpace(Graph g);

  const Graph& graph() const { return graph_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_tree_edge(int e) const { return coordinate_[static_cast<std::size_t>(e)] < 0; }
  int coordinate(int e) const { return coordinate_[static_cast<std::size_t>(e)]; }
  int edge_of_coordinate(int i) const { return non_tree_[static_cast<std::size_t>(i)]; }
  std::span<const EdgeSet> basis() const { return basis_; }

  /// Throws NotACycle when some vertex has odd degree in c.
  std::uint64_t coordinates(const EdgeSet& c) const;
  EdgeSet element(std::uint64_t coords) const;

 private:
  Graph graph_;
  std::vector<int> coordinate_;
  std::vector<int> non_tree_;
  std::vector<EdgeSet> basis_;
};

std::vector<EdgeSet> cycle_basis(const Graph& g);

struct SimpleCycle {
  std::vector<int> vertices;  // starts at its smallest vertex
  EdgeSet edges;
  VertexMask vertex_mask = 0;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Every simple cycle exactly once, rooted at its smallest vertex. Throws
/// SizeExceeded past `max_cycles`.
std::vector<SimpleCycle> all_simple_cycles(const Graph& g, const Limits& limits = {},
                                           std::size_t max_cycles = 2'000'000);
/// Simple cycles without chords.
std::vector<SimpleCycle> chordless_cycles(const Graph& g, const Limits& limits = {});

/// A GF(2)-linear functional on the cycle space, stored by its values on the
/// fundamental basis.
class HomologyAssignment {
 public:
  HomologyAssignment(std::shared_ptr<const CycleSpace> space, std::uint64_t values);

  const CycleSpace& space() const { return *space_; }
  std::shared_ptr<const CycleSpace> space_ptr() const { return space_; }
  const Graph& host() const { return space_->graph(); }
  int dim() const { return space_->dim(); }
  std::uint64_t values() const { return values_; }
  bool value(int i) const { return (values_ >> i) & 1U; }

  friend bool operator==(const HomologyAssignment& a, const HomologyAssignment& b) {
    return a.values_ == b.values_ && a.space_->graph() == b.space_->graph();
  }

 private:
  std::shared_ptr<const CycleSpace> space_;
  std::uint64_t values_;
};

/// 2^dim, after checking the dimension cap.
std::uint64_t assignment_count(const CycleSpace& space, const Limits& limits = {});

/// Streams all 2^dim assignments in index order; the index is the
/// basis-value vector. `visit` returns false to stop.
void enumerate_assignments(const std::shared_ptr<const CycleSpace>& space,
                           const std::function<bool(const HomologyAssignment&)>& visit,
                           const Limits& limits = {});

inline int parity(std::uint64_t x) { return __builtin_parityll(x); }

/// 0 or 1. Throws NotACycle.
int evaluate(const HomologyAssignment& phi, const EdgeSet& c);

/// The functional C -> |C & weights| mod 2.
HomologyAssignment from_edge_weights(const std::shared_ptr<const CycleSpace>& space, const EdgeSet& weights);
/// Edge weights supported on non-tree edges that induce phi.
EdgeSet edge_weights(const HomologyAssignment& phi);

/// Lift of a cycle-space element of the pattern: mapped edges plus, inside
/// each branch tree, the unique edge set joining the attachment points.
EdgeSet lift(const MinorModel& model, const EdgeSet& pattern_element);
HomologyAssignment pullback(const HomologyAssignment& phi, const MinorModel& model);

/// phi transported along perm (perm[old] = new) onto relabel(host, perm).
HomologyAssignment transport(const HomologyAssignment& phi, std::span<const int> perm);

/// Restriction to the subgraph induced by `keep`, relabeled as induced_subgraph does.
HomologyAssignment restrict_to(const HomologyAssignment& phi, VertexMask keep);

/// "<canonical code hex>:<basis values hex>", with the values taken on the
/// canonically relabeled host; deserialize replays it on that host.
std::string serialize(const HomologyAssignment& phi);
HomologyAssignment deserialize(const std::string& text);
std::string values_hex(std::uint64_t values, int dim);

}  // namespace rp3
