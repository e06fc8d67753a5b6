#include "rp3/patterns.hpp"

#include <algorithm>

namespace rp3 {

namespace {

struct Sides {
  std::array<int, 3> a{};
  std::array<int, 3> b{};
};

Sides k33_sides(const Graph& g) {
  if (g.order() != 6 || g.size() != 9 || !g.is_connected() || !g.is_bipartite()) {
    throw Error(Errc::NotK33, "host is not K_{3,3}: " + to_string(g));
  }
  Sides s;
  const VertexMask right = g.neighbors(0);
  if (popcount(right) != 3) throw Error(Errc::NotK33, "vertex 0 does not have degree 3");
  int ia = 0;
  int ib = 0;
  for (int v = 0; v < 6; ++v) {
    if ((right >> v) & 1U) {
      s.b[static_cast<std::size_t>(ib++)] = v;
    } else {
      s.a[static_cast<std::size_t>(ia++)] = v;
    }
  }
  for (int x : s.a) {
    if (g.neighbors(x) != right) throw Error(Errc::NotK33, "sides are not completely joined");
  }
  return s;
}

EdgeSet four_cycle_set(const Graph& g, const std::array<int, 4>& c) { return cycle_edges(g, c); }


bool contains(const std::array<int, 4>& c, Edge e) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (make_edge(c[i], c[(i + 1) % 4]) == e) return true;
  }
  return false;
}

}  // namespace

std::string pattern_name(const Pattern& p) {
  switch (p.index()) {
    case 0: return "AllZero";
    case 1: return "FourPattern";
    default: return "SixPattern";
  }
}

std::string to_string(const Pattern& p) {
  auto edge = [](Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; };
  if (const auto* f = std::get_if<FourPattern>(&p)) return "FourPattern" + edge(f->including);
  if (const auto* s = std::get_if<SixPattern>(&p)) {
    return "SixPattern{" + edge(s->excluding[0]) + edge(s->excluding[1]) + edge(s->excluding[2]) + "}";
  }
  return "AllZero";
}

std::vector<std::array<int, 4>> k33_four_cycles(const Graph& g) {
  const Sides s = k33_sides(g);
  std::vector<std::array<int, 4>> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = k + 1; l < 3; ++l) {
          out.push_back({s.a[static_cast<std::size_t>(i)], s.b[static_cast<std::size_t>(k)],
                         s.a[static_cast<std::size_t>(j)], s.b[static_cast<std::size_t>(l)]});
        }
      }
    }
  }
  return out;
}

int four_cycle_counts(const HomologyAssignment& phi) {
  int count = 0;
  for (const auto& c : k33_four_cycles(phi.host())) count += evaluate(phi, four_cycle_set(phi.host(), c));
  return count;
}

Pattern classify_k33(const HomologyAssignment& phi) {
  const Graph& g = phi.host();
  const Sides s = k33_sides(g);
  const auto cycles = k33_four_cycles(g);
  std::vector<int> value;
  for (const auto& c : cycles) value.push_back(evaluate(phi, four_cycle_set(g, c)));

  std::vector<Pattern> matches;
  if (std::all_of(value.begin(), value.end(), [](int x) { return x == 0; })) matches.emplace_back(AllZero{});
  for (const Edge& e : g.edges()) {
    bool ok = true;
    for (std::size_t i = 0; i < cycles.size() && ok; ++i) ok = value[i] == (contains(cycles[i], e) ? 1 : 0);
    if (ok) matches.emplace_back(FourPattern{e});
  }
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<Edge, 3> matching{};
    for (std::size_t i = 0; i < 3; ++i) matching[i] = make_edge(s.a[i], s.b[static_cast<std::size_t>(perm[i])]);
    std::sort(matching.begin(), matching.end());
    bool ok = true;
    for (std::size_t i = 0; i < cycles.size() && ok; ++i) {
      int used = 0;
      for (const Edge& e : matching) used += contains(cycles[i], e) ? 1 : 0;
      ok = value[i] == (used == 2 ? 0 : 1);
    }
    if (ok) matches.emplace_back(SixPattern{matching});
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (matches.size() != 1) {
    throw Error(Errc::Internal, "assignment matches " + std::to_string(matches.size()) + " K_{3,3} patterns");
  }
  return matches.front();
}

Census k33_census() {
  Census census;
  const Graph k33 = complete_bipartite(3, 3);
  auto space = std::make_shared<const CycleSpace>(k33);
  auto k32_even = [&](const HomologyAssignment& psi) {
    const Graph& h = psi.host();
    int ones = 0;
    for (const auto& c : all_simple_cycles(h)) {
      if (c.length() == 4) ones += evaluate(psi, c.edges);
    }
    ++census.k32_checked;
    return ones % 2 == 0;
  };
  enumerate_assignments(space, [&](const HomologyAssignment& phi) {
    ++census.counts[pattern_name(classify_k33(phi))];
    ++census.total;
    for (int v = 0; v < 6; ++v) {
      census.k32_parity = census.k32_parity && k32_even(restrict_to(phi, k33.all_vertices() & ~bit(v)));
    }
    return true;
  });
  auto k32 = std::make_shared<const CycleSpace>(complete_bipartite(3, 2));
  enumerate_assignments(k32, [&](const HomologyAssignment& psi) {
    census.k32_parity = census.k32_parity && k32_even(psi);
    return true;
  });
  return census;
}

}  // namespace rp3
