#pragma once

#include <string>

#include "rp3/families.hpp"
#include "rp3/io.hpp"

namespace testutil {

inline rp3::Graph fixture(const std::string& name) { return rp3::graph_of(rp3::load_graph(name)); }

inline rp3::MarkedGraph marked_fixture(const std::string& name) {
  return std::get<rp3::MarkedGraph>(rp3::load_graph(name));
}

// Vertex index of a_i and b_i in the bundled K44-e (parts 0..3 and 4..7,
// missing edge a1 b1).
inline int a(int i) { return i - 1; }
inline int b(int i) { return i + 3; }

// 1-based K7 vertex v_i.
inline int v(int i) { return i - 1; }

inline std::string obstruction_file() { return RP3_TEST_DATA_DIR "/projective_obstructions_partial.txt"; }

}  // namespace testutil
