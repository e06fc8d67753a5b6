#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rp3/graph.hpp"

namespace rp3 {

using Permutation = std::vector<int>;  // perm[v] = image of v
using CanonicalCode = std::vector<std::uint8_t>;

struct CanonicalForm {
  CanonicalCode code;
  Permutation labeling;  // labeling[old] = canonical position
};

/// Canonical labeling by colour refinement plus individualization search with
/// automorphism pruning. `colors` are vertex labels that isomorphisms must
/// preserve (empty = uncoloured). Equal codes iff isomorphic (as coloured
/// graphs).
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {},
                             const Limits& limits = {});
inline CanonicalCode canonical_code(const Graph& g, const Limits& limits = {}) {
  return canonical_form(g, {}, limits).code;
}
CanonicalCode canonical_code(const MarkedGraph& m, const Limits& limits = {});

/// The graph in canonical labeling, as determined by its code.
Graph graph_from_code(const CanonicalCode& code);
std::string to_hex(std::span<const std::uint8_t> bytes);
CanonicalCode from_hex(const std::string& hex);

/// Maps a to b: b has edge {map[x], map[y]} for every edge {x, y} of a.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b,
                                            std::span<const int> colors_a = {},
                                            std::span<const int> colors_b = {});
bool is_isomorphic(const Graph& a, const Graph& b);

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::vector<int> base;
  std::vector<int> basic_orbit_sizes;
  std::uint64_t order = 1;
};

/// Exact automorphism group via a stabilizer chain: each basic orbit is found
/// by direct isomorphism search, so the generators form a strong generating
/// set and `order` is exact. Orders are exact up to 20 vertices.
AutomorphismGroup automorphism_group(const Graph& g, std::span<const int> colors = {},
                                     const Limits& limits = {});

/// Group order of <gens> by Schreier-Sims; independent of automorphism_group.
std::uint64_t group_order(std::span<const Permutation> gens, int n);

bool is_automorphism(const Graph& g, std::span<const int> perm);

/// Orbits of <gens> on 0..n-1, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits_of(std::span<const Permutation> gens, int n);

struct OrbitTable {
  std::vector<std::vector<int>> vertex_orbits;
  std::vector<std::vector<Edge>> pair_orbits;  // all unordered distinct pairs
  std::vector<int> vfn;                         // per pair orbit: 0 iff a swap exists
};

OrbitTable orbits(const Graph& g, const Limits& limits = {});
OrbitTable orbits(const Graph& g, const AutomorphismGroup& group);

/// Edge orbits as lists of edge indices.
std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutomorphismGroup& group);

}  // namespace rp3
