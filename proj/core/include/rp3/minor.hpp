#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rp3/graph.hpp"

namespace rp3 {

/// Witness that `pattern` is a minor of `host`: one connected branch set per
/// pattern vertex, a spanning tree of each branch set, and one host edge per
/// pattern edge. Host edges inside a branch set that are not tree edges, and
/// surplus edges between branch sets, count as deleted.
struct MinorModel {
  std::shared_ptr<const Graph> host;
  std::shared_ptr<const Graph> pattern;
  std::vector<VertexMask> branch_sets;         // indexed by pattern vertex
  std::vector<std::vector<int>> branch_trees;  // host edge indices
  std::vector<int> edge_map;                   // pattern edge index -> host edge index

  std::vector<int> branch_vertices(int pattern_vertex) const;
  /// Pattern vertex owning each host vertex, -1 if unused.
  std::vector<int> owner() const;
};

/// Throws Error(ModelInvalid) naming the first violated invariant.
void validate_model(const MinorModel& model);
bool is_valid_model(const MinorModel& model) noexcept;

/// BFS spanning tree of host[branch] rooted at its lowest vertex, as host edge
/// indices. Throws ModelInvalid if host[branch] is disconnected.
std::vector<int> bfs_tree(const Graph& host, VertexMask branch);

/// Completes branch sets into a model: BFS trees, and for each pattern edge the
/// lowest-index host edge joining the two branch sets.
MinorModel model_from_branch_sets(std::shared_ptr<const Graph> pattern, std::shared_ptr<const Graph> host,
                                  std::vector<VertexMask> branch_sets);

MinorModel identity_model(const Graph& g);
/// Model of contract_edge(g, e) inside g.
MinorModel contraction_model(const Graph& g, Edge e);

struct ModelSearchOptions {
  Limits limits;
  /// Pattern vertices with identical neighbourhoods are interchangeable; when
  /// set, only one labeling per interchange is produced.
  bool break_twin_symmetry = true;
};

/// Enumerates every minor model of `pattern` in `host` (one per assignment of
/// branch sets, modulo twin symmetry). `visit` returns false to stop early.
/// Returns the number of models visited.
std::size_t for_each_minor_model(const Graph& pattern, const Graph& host,
                                 const std::function<bool(const MinorModel&)>& visit,
                                 const ModelSearchOptions& options = {});

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host, const Limits& limits = {});
bool is_minor(const Graph& pattern, const Graph& host, const Limits& limits = {});

}  // namespace rp3
