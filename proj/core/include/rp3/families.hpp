#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rp3/canon.hpp"
#include "rp3/graph.hpp"

namespace rp3 {

std::vector<std::array<int, 3>> triangles(const Graph& g);

/// Removes the triangle's edges and joins a new vertex n to its corners.
/// Throws NotATriangle.
Graph delta_y(const Graph& g, const std::array<int, 3>& triangle);
/// Marks are kept; the new vertex is unmarked.
MarkedGraph delta_y(const MarkedGraph& m, const std::array<int, 3>& triangle);
/// Deletes a degree-3 vertex and joins its neighbours pairwise. Throws
/// NotDegree3 or WouldCreateParallel.
Graph y_delta(const Graph& g, int v);

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct PetersenFamily {
  /// K6, K331, P7, K44-e, P8, P9, Petersen.
  std::vector<NamedGraph> members;

  const NamedGraph& by_name(const std::string& name) const;
  /// The six members other than K44-e.
  std::vector<NamedGraph> projective_planar() const;
};

/// Closure of K6 under both exchanges, deduplicated by canonical code.
PetersenFamily petersen_family();
/// petersen_family(), computed once.
const PetersenFamily& default_family();

/// g2's vertices follow g1's; identified vertices take g1's labels.
Graph glue_vertex(const Graph& g1, int v1, const Graph& g2, int v2);
/// Identifies y1 with x1 and y2 with x2 (or crosswise when `swap`), then
/// removes the edge between the identified pair if there is one.
Graph glue_pair(const Graph& g1, Edge x, const Graph& g2, Edge y, bool swap);
/// Identifies m2.marks[i] with m1.marks[matching[i]].
Graph glue_therefore(const MarkedGraph& m1, const MarkedGraph& m2, const std::array<int, 3>& matching);

inline int gluing_count(int vfn1, int vfn2) { return vfn1 * vfn2 + 1; }

struct CatalogEntry {
  CanonicalCode code;
  Graph graph;
  std::string kind;        // "k0", "k1", "k2", "therefore", "sporadic"
  std::string provenance;  // replayable construction
  int connectivity = -1;
};

struct Catalog {
  int k = 0;
  int items = 0;              // gluing items (graphs, vertex orbits or pair orbits)
  long long formula_count = 0;
  long long constructed_count = 0;  // distinct canonical codes
  std::vector<CatalogEntry> entries;
  std::vector<std::string> findings;  // deviations from the expected arithmetic
};

/// Candidates are built by `jobs` workers and merged in pair order.
Catalog build_catalog(int k, const PetersenFamily& family, int jobs = 1);

struct ThereforeGluing {
  std::string name;  // e.g. "P7B∴P7B#2" for a second mark configuration
  Graph graph;
  CanonicalCode code;
  bool has_k44e_minor = false;
};

struct ThereforeFamily {
  std::vector<std::string> member_names;  // K6, P7A, P7B, ...
  std::vector<MarkedGraph> members;
  std::vector<ThereforeGluing> gluings;  // all distinct classes
  std::vector<std::string> findings;

  std::vector<const ThereforeGluing*> minimal_candidates() const;
  const ThereforeGluing& by_name(const std::string& name) const;
};

/// K_{3,1,1,1} with its independent triple marked.
MarkedGraph k6_therefore();

/// Marked Δ-Y closure of K6∴ and all pairwise gluings along the marks.
ThereforeFamily therefore_family(const PetersenFamily& family);

struct SporadicGraph {
  std::string name;
  Graph graph;
};

/// K44-e and the two K7-2e graphs.
std::vector<SporadicGraph> sporadic_graphs();
Graph k44_minus_e();
Graph k7_minus_adjacent();
Graph k7_minus_nonadjacent();

struct Reconciliation {
  long long k0 = 0;
  long long k1 = 0;
  long long k2 = 0;
  long long therefore_minimal = 0;
  long long sporadic = 0;
  long long total = 0;              // k0 + k1 + k2 + therefore
  long long total_with_sporadic = 0;
  long long k0_constructed = 0;
  long long k1_constructed = 0;
  long long k2_constructed = 0;
  std::vector<std::string> sporadic_names;
};

Reconciliation grand_total(const Catalog& k0, const Catalog& k1, const Catalog& k2, const ThereforeFamily& tf);

}  // namespace rp3
