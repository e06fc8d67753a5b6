#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "rp3/patterns.hpp"

using namespace rp3;

namespace {

std::shared_ptr<const CycleSpace> k33_space() { return std::make_shared<const CycleSpace>(complete_bipartite(3, 3)); }

HomologyAssignment weighted(const std::shared_ptr<const CycleSpace>& space, std::initializer_list<Edge> edges) {
  EdgeSet w(static_cast<std::size_t>(space->graph().size()));
  for (const Edge& e : edges) w.set(static_cast<std::size_t>(space->graph().edge_index_or_throw(e.u, e.v)));
  return from_edge_weights(space, w);
}

// Count of 1-homologous 4-cycles from all simple cycles, without k33_four_cycles.
int ones_on_four_cycles(const HomologyAssignment& phi) {
  int n = 0;
  for (const auto& c : all_simple_cycles(phi.host())) {
    if (c.length() == 4) n += evaluate(phi, c.edges);
  }
  return n;
}

Edge image(const std::vector<int>& p, Edge e) { return make_edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]); }

}  // namespace

TEST_SUITE("patterns") {

TEST_CASE("classification examples") {
  const auto space = k33_space();
  CHECK(classify_k33(HomologyAssignment(space, 0)) == Pattern{AllZero{}});

  // a1 = 0, b1 = 3.
  const auto four = weighted(space, {{0, 3}});
  CHECK(classify_k33(four) == Pattern{FourPattern{{0, 3}}});
  CHECK(four_cycle_counts(four) == 4);
  CHECK(ones_on_four_cycles(four) == 4);

  const auto six = weighted(space, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(classify_k33(six) == Pattern{SixPattern{{Edge{0, 3}, Edge{1, 4}, Edge{2, 5}}}});
  CHECK(four_cycle_counts(six) == 6);
  CHECK(ones_on_four_cycles(six) == 6);
  CHECK(pattern_name(classify_k33(six)) == "SixPattern");
}

TEST_CASE("the nine four-cycles") {
  const auto cycles = k33_four_cycles(complete_bipartite(3, 3));
  CHECK(cycles.size() == 9);
  int oracle_count = oracle::cycle_length_counts(complete_bipartite(3, 3))[4];
  CHECK(oracle_count == 9);
}

TEST_CASE("census over all sixteen assignments") {
  const Census c = k33_census();
  CHECK(c.total == 16);
  CHECK(c.counts.at("AllZero") == 1);
  CHECK(c.counts.at("FourPattern") == 9);
  CHECK(c.counts.at("SixPattern") == 6);
  CHECK(c.k32_parity);
  CHECK(c.k32_checked > 0);

  // Independently: each class has the 4-cycle count the Lemma predicts, and
  // the pattern predicts every 4-cycle value.
  const auto space = k33_space();
  const auto quads = k33_four_cycles(space->graph());
  std::set<std::string> distinct;
  enumerate_assignments(space, [&](const HomologyAssignment& phi) {
    const Pattern p = classify_k33(phi);
    distinct.insert(to_string(p));
    const int expected = std::holds_alternative<AllZero>(p) ? 0 : std::holds_alternative<FourPattern>(p) ? 4 : 6;
    CHECK(ones_on_four_cycles(phi) == expected);
    for (const auto& q : quads) {
      const EdgeSet c = cycle_edges(space->graph(), q);
      int predicted = 0;
      if (const auto* f = std::get_if<FourPattern>(&p)) {
        predicted = c[static_cast<std::size_t>(space->graph().edge_index_or_throw(f->including.u, f->including.v))];
      } else if (const auto* s = std::get_if<SixPattern>(&p)) {
        int hits = 0;
        for (const Edge& e : s->excluding) hits += c[static_cast<std::size_t>(space->graph().edge_index_or_throw(e.u, e.v))];
        predicted = hits == 2 ? 0 : 1;
      }
      CHECK(evaluate(phi, c) == predicted);
    }
    return true;
  });
  CHECK(distinct.size() == 16);
}

TEST_CASE("K32 restrictions have even counts") {
  const auto space = k33_space();
  enumerate_assignments(space, [&](const HomologyAssignment& phi) {
    for (int drop = 3; drop < 6; ++drop) {
      const auto r = restrict_to(phi, space->graph().all_vertices() & ~bit(drop));
      CHECK(ones_on_four_cycles(r) % 2 == 0);
    }
    return true;
  });
}

TEST_CASE("classification is equivariant under automorphisms") {
  const Graph g = complete_bipartite(3, 3);
  const auto space = k33_space();
  const auto auts = oracle::automorphisms(g);
  CHECK(auts.size() == 72);
  enumerate_assignments(space, [&](const HomologyAssignment& phi) {
    const Pattern p = classify_k33(phi);
    for (const auto& perm : auts) {
      const Pattern q = classify_k33(transport(phi, perm));
      if (const auto* f = std::get_if<FourPattern>(&p)) {
        CHECK(q == Pattern{FourPattern{image(perm, f->including)}});
      } else if (const auto* s = std::get_if<SixPattern>(&p)) {
        std::array<Edge, 3> ex{image(perm, s->excluding[0]), image(perm, s->excluding[1]), image(perm, s->excluding[2])};
        std::sort(ex.begin(), ex.end());
        CHECK(q == Pattern{SixPattern{ex}});
      } else {
        CHECK(q == p);
      }
    }
    return true;
  });
}

TEST_CASE("non-K33 hosts are rejected") {
  const auto space = std::make_shared<const CycleSpace>(complete_graph(6));
  try {
    classify_k33(HomologyAssignment(space, 0));
    FAIL("expected NotK33");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotK33);
  }
  CHECK_THROWS_AS(four_cycle_counts(HomologyAssignment(space, 0)), Error);
}

}
