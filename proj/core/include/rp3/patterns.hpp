#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rp3/homology.hpp"

namespace rp3 {

struct AllZero {
  friend bool operator==(const AllZero&, const AllZero&) = default;
};

/// 1-homologous 4-cycles are exactly those through `including`.
struct FourPattern {
  Edge including;
  friend bool operator==(const FourPattern&, const FourPattern&) = default;
};

/// `excluding` is a perfect matching; a 4-cycle is 0-homologous iff it uses two
/// of its edges. Edges are kept sorted.
struct SixPattern {
  std::array<Edge, 3> excluding;
  friend bool operator==(const SixPattern&, const SixPattern&) = default;
};

using Pattern = std::variant<AllZero, FourPattern, SixPattern>;

std::string pattern_name(const Pattern& p);
std::string to_string(const Pattern& p);

/// The nine 4-cycles of a labeled K_{3,3}, as vertex sequences a b a' b'.
/// Throws NotK33.
std::vector<std::array<int, 4>> k33_four_cycles(const Graph& g);

/// Number of 1-homologous 4-cycles. Throws NotK33.
int four_cycle_counts(const HomologyAssignment& phi);

/// The unique pattern whose 4-cycle profile matches phi, found by testing
/// every candidate against all nine 4-cycles. Throws NotK33, and Internal if
/// no candidate matches.
Pattern classify_k33(const HomologyAssignment& phi);

struct Census {
  std::map<std::string, int> counts;  // keyed by pattern_name
  int total = 0;
  /// Every assignment of K_{3,2}, and every K_{3,2} restriction of every
  /// K_{3,3} assignment, has an even number of 1-homologous 4-cycles.
  bool k32_parity = true;
  int k32_checked = 0;
};

Census k33_census();

}  // namespace rp3
