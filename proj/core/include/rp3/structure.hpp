#pragma once

#include <span>
#include <vector>

#include "rp3/graph.hpp"

namespace rp3 {

struct Connectivity {
  int k = 0;
  /// A separating set of size k; empty when k = n - 1 (complete graphs) or
  /// the graph is already disconnected.
  std::vector<int> cut;
};

/// Vertex connectivity by exhaustive search over candidate cut sets, smallest
/// first and in colex order, so the witness is deterministic.
Connectivity connectivity(const Graph& g, const Limits& limits = {});

/// Boyer-Myrvold planarity test.
bool is_planar(const Graph& g);

/// Wagner's criterion: no K5 and no K_{3,3} minor.
bool is_planar_by_minors(const Graph& g, const Limits& limits = {});

/// True iff no graph of `obstructions` is a minor of g. Throws
/// ObstructionDataMissing for an empty list; the verdict is only as complete
/// as the list.
bool is_projective_planar(const Graph& g, std::span<const Graph> obstructions, const Limits& limits = {});

}  // namespace rp3
