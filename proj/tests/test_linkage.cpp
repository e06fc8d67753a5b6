#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rp3/linkage.hpp"
#include "rp3/patterns.hpp"
#include "rp3/report.hpp"
#include "util.hpp"

using namespace rp3;
using testutil::a;
using testutil::b;
using testutil::v;

namespace {

std::shared_ptr<const CycleSpace> space_of(const Graph& g) { return std::make_shared<const CycleSpace>(g); }

HomologyAssignment weighted(const std::shared_ptr<const CycleSpace>& space, const std::vector<Edge>& edges) {
  EdgeSet w(static_cast<std::size_t>(space->graph().size()));
  for (const Edge& e : edges) w.set(static_cast<std::size_t>(space->graph().edge_index_or_throw(e.u, e.v)));
  return from_edge_weights(space, w);
}

VertexMask mask_of(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int x : vs) m |= bit(x);
  return m;
}

bool passes_through(const std::vector<int>& cycle, Edge e) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (make_edge(cycle[i], cycle[(i + 1) % cycle.size()]) == make_edge(e.u, e.v)) return true;
  }
  return false;
}

const PetersenFamily& family() { return default_family(); }

}  // namespace

TEST_SUITE("linkage") {

TEST_CASE("rule sets") {
  CHECK(RuleSet::parse("ABC") == RuleSet{});
  CHECK(RuleSet::parse("ba").text() == "AB");
  CHECK(RuleSet::parse("none").text() == "none");
  CHECK(RuleSet::parse("").text() == "none");
  CHECK_THROWS_AS(RuleSet::parse("ABD"), Error);
}

TEST_CASE("rule A examples") {
  const auto k44 = space_of(k44_minus_e());
  CHECK_FALSE(rule_a(HomologyAssignment(k44, 0)));

  // Case 1: A carries no 1-homologous cycle, B has including edge a1 b2 and
  // C has including edge a2 b1.
  const auto phi = weighted(k44, {make_edge(a(1), b(2)), make_edge(a(2), b(1))});
  CHECK(classify_k33(restrict_to(phi, mask_of({a(2), a(3), a(4), b(2), b(3), b(4)}))) == Pattern{AllZero{}});
  CHECK(std::holds_alternative<FourPattern>(classify_k33(restrict_to(phi, mask_of({a(1), a(2), a(3), b(2), b(3), b(4)})))));
  CHECK(std::holds_alternative<FourPattern>(classify_k33(restrict_to(phi, mask_of({a(2), a(3), a(4), b(1), b(2), b(3)})))));

  // The two cycles named for this case are both 1-homologous, but they meet
  // in a2 and b2; the disjoint pair has to be found elsewhere.
  const Graph& g = k44->graph();
  const std::vector<int> named1{a(1), b(2), a(2), b(3)};
  const std::vector<int> named2{b(1), a(2), b(2), a(3)};
  CHECK(evaluate(phi, cycle_edges(g, named1)) == 1);
  CHECK(evaluate(phi, cycle_edges(g, named2)) == 1);
  CHECK((mask_of(named1) & mask_of(named2)) == (bit(a(2)) | bit(b(2))));

  const auto ev = rule_a(phi);
  REQUIRE(ev);
  const auto& pair = std::get<RuleAEvidence>(*ev);
  CHECK((mask_of(pair.first) & mask_of(pair.second)) == 0);
  CHECK(pair.first.size() == 4);
  CHECK(pair.second.size() == 4);
  CHECK(evaluate(phi, cycle_edges(g, pair.first)) == 1);
  CHECK(evaluate(phi, cycle_edges(g, pair.second)) == 1);
  // One cycle runs through each including edge.
  const bool first_has_b = passes_through(pair.first, make_edge(a(1), b(2)));
  CHECK(passes_through(first_has_b ? pair.first : pair.second, make_edge(a(1), b(2))));
  CHECK(passes_through(first_has_b ? pair.second : pair.first, make_edge(a(2), b(1))));
  CHECK_FALSE(check_evidence(phi, *ev, family()));

  // K4 has no two disjoint cycles.
  enumerate_assignments(space_of(complete_graph(4)), [&](const HomologyAssignment& psi) {
    CHECK_FALSE(rule_a(psi));
    return true;
  });
}

TEST_CASE("rule A is equivariant under automorphisms of K44-e") {
  const Graph g = k44_minus_e();
  const auto space = space_of(g);
  const auto auts = oracle::automorphisms(g);
  std::mt19937 rng(12);
  enumerate_assignments(space, [&](const HomologyAssignment& phi) {
    const bool fires = rule_a(phi).has_value();
    for (int k = 0; k < 4; ++k) {
      const auto& p = auts[rng() % auts.size()];
      CHECK(rule_a(transport(phi, p)).has_value() == fires);
    }
    return true;
  });
}

TEST_CASE("rule B examples") {
  // K6 with phi = 0: every apex works.
  const auto k6 = space_of(complete_graph(6));
  const auto ev = rule_b(HomologyAssignment(k6, 0), family());
  REQUIRE(ev);
  CHECK(std::get<RuleBEvidence>(*ev).member == "K6");
  CHECK_FALSE(check_evidence(HomologyAssignment(k6, 0), *ev, family()));

  // K44-e with every 1-homologous cycle through a4 b4.
  const auto k44 = space_of(k44_minus_e());
  const auto phi = weighted(k44, {make_edge(a(4), b(4))});
  CHECK_FALSE(rule_a(phi));
  const auto evb = rule_b(phi, family());
  REQUIRE(evb);
  const auto& rb = std::get<RuleBEvidence>(*evb);
  const VertexMask apex_set = rb.model.branch_sets[static_cast<std::size_t>(rb.apex)];
  CHECK((apex_set & (bit(a(4)) | bit(b(4)))) != 0);
  CHECK_FALSE(check_evidence(phi, *evb, family()));
  // The identity model with apex a4 is evidence too.
  const RuleBEvidence direct{"K44-e", identity_model(k44_minus_e()), a(4)};
  CHECK_FALSE(check_evidence(phi, ForcingEvidence{direct}, family()));

  // Two K6 glued along a pair with the shared edge removed; every 1-homologous
  // cycle lives among the second copy's private vertices.
  const Graph glued = glue_pair(complete_graph(6), {0, 1}, complete_graph(6), {0, 1}, false);
  const auto gs = space_of(glued);
  std::vector<Edge> private2;
  for (int x = 6; x < 10; ++x) {
    for (int y = x + 1; y < 10; ++y) private2.push_back({x, y});
  }
  const auto psi = weighted(gs, private2);
  const auto evg = rule_b(psi, family());
  REQUIRE(evg);
  CHECK_FALSE(check_evidence(psi, *evg, family()));
  const auto& rg = std::get<RuleBEvidence>(*evg);
  VertexMask covered = 0;
  for (const auto m : rg.model.branch_sets) covered |= m;
  CHECK((covered & 0b111100) == 0b111100);
}

TEST_CASE("rule C examples") {
  const auto k6 = space_of(complete_graph(6));
  const auto ev = rule_c(HomologyAssignment(k6, 0));
  REQUIRE(ev);
  CHECK_FALSE(check_evidence(HomologyAssignment(k6, 0), *ev, family()));

  std::mt19937 rng(13);
  // K7 minus two adjacent edges, K4 on v1..v4 all zero: the K6 left after
  // deleting v7 carries the evidence.
  {
    const Graph g = k7_minus_adjacent();
    const auto space = space_of(g);
    const auto k6 = std::make_shared<const Graph>(complete_graph(6));
    std::vector<VertexMask> sets;
    for (int i = 1; i <= 6; ++i) sets.push_back(bit(v(i)));
    const MinorModel model = model_from_branch_sets(k6, std::make_shared<const Graph>(g), sets);
    for (int k = 0; k < 30; ++k) {
      std::vector<Edge> w;
      for (const Edge& e : g.edges()) {
        const bool inside = e.v < v(5);
        if (!inside && rng() % 2) w.push_back(e);
      }
      const auto phi = weighted(space, w);
      const RuleCEvidence direct{model, {0, 1, 2, 3}};
      CHECK_FALSE(check_evidence(phi, ForcingEvidence{direct}, family()));
      const auto found = rule_c(phi);
      REQUIRE(found);
      CHECK_FALSE(check_evidence(phi, *found, family()));
    }
  }
  // K7 minus v4 v5 and v6 v7, everything on {v1, v4, v5, v6, v7} zero: the
  // K6 model merging v4 and v6 contracts that subgraph onto a K4.
  {
    const Graph g = k7_minus_nonadjacent();
    const auto space = space_of(g);
    const VertexMask quiet = mask_of({v(1), v(4), v(5), v(6), v(7)});
    const std::vector<VertexMask> sets{bit(v(2)), bit(v(3)), bit(v(1)), bit(v(4)) | bit(v(6)), bit(v(5)), bit(v(7))};
    const MinorModel model =
        model_from_branch_sets(std::make_shared<const Graph>(complete_graph(6)), std::make_shared<const Graph>(g), sets);
    validate_model(model);
    for (int k = 0; k < 30; ++k) {
      std::vector<Edge> w;
      for (const Edge& e : g.edges()) {
        const bool inside = ((quiet >> e.u) & 1U) && ((quiet >> e.v) & 1U);
        if (!inside && rng() % 2) w.push_back(e);
      }
      const auto phi = weighted(space, w);
      const RuleCEvidence direct{model, {2, 3, 4, 5}};
      CHECK_FALSE(check_evidence(phi, ForcingEvidence{direct}, family()));
      REQUIRE(rule_c(phi));
    }
  }
}

TEST_CASE("tampered evidence is rejected") {
  const auto k44 = space_of(k44_minus_e());
  const auto phi = weighted(k44, {make_edge(a(1), b(2)), make_edge(a(2), b(1))});
  auto ev = std::get<RuleAEvidence>(*rule_a(phi));
  RuleAEvidence zero_cycle = ev;
  zero_cycle.first = {a(2), b(3), a(3), b(4)};
  CHECK(check_evidence(phi, ForcingEvidence{zero_cycle}, family()));
  RuleAEvidence overlapping = ev;
  overlapping.second = {b(1), a(2), b(2), a(3)};
  overlapping.first = {a(1), b(2), a(2), b(3)};
  CHECK(check_evidence(phi, ForcingEvidence{overlapping}, family()));

  const RuleBEvidence wrong{"K44-e", identity_model(k44_minus_e()), a(1)};
  CHECK(check_evidence(weighted(k44, {make_edge(a(4), b(4))}), ForcingEvidence{wrong}, family()));
}

TEST_CASE("certify small cases") {
  const Certificate k44 = certify(k44_minus_e(), family(), {RuleSet::parse("AB"), 1, {}});
  CHECK(k44.verdict == Verdict::Certified);
  CHECK(k44.assignments == 256);
  CHECK(k44.dim == 8);
  CHECK(k44.counts.at('U') == 0);

  const Certificate k6 = certify(complete_graph(6), family());
  CHECK(k6.verdict == Verdict::Undecided);
  CHECK(k6.counts.at('U') >= 1);
  CHECK(k6.unforced_serialized.size() == k6.unforced.size());

  const Certificate tree = certify(path_graph(5), family());
  CHECK(tree.verdict == Verdict::Undecided);
  CHECK(tree.assignments == 1);

  Limits tight;
  tight.max_dim = 4;
  CHECK_THROWS_AS(certify(k44_minus_e(), family(), {RuleSet{}, 1, tight}), Error);
}

TEST_CASE("certificate evidence re-validates and does not depend on jobs") {
  const Engine engine(k44_minus_e(), family(), {RuleSet::parse("AB"), 1, {}});
  const Certificate one = certify(engine);
  std::string failure;
  CHECK(validate_certificate(one, engine, family(), &failure) == 0);
  CHECK(failure.empty());
  for (int jobs : {2, 4, 8}) {
    const Engine e2(k44_minus_e(), family(), {RuleSet::parse("AB"), jobs, {}});
    const Certificate c = certify(e2);
    CHECK(c.evidence == one.evidence);
    ReportOptions opts;
    opts.timing = false;
    CHECK(dump(certificate_json(c, opts)) == dump(certificate_json(one, opts)));
  }
}

TEST_CASE("engine and free rules agree") {
  const Graph g = k7_minus_adjacent();
  const Engine engine(g, family(), {});
  std::mt19937 rng(21);
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t x = rng() % (std::uint64_t{1} << engine.space()->dim());
    const HomologyAssignment phi(engine.space(), x);
    CHECK((engine.rule_a(x).rule != 0) == rule_a(phi).has_value());
    CHECK((engine.rule_c(x).rule != 0) == rule_c(phi).has_value());
    CHECK((engine.rule_b(x).rule != 0) == rule_b(phi, family()).has_value());
    const Engine::Ref r = engine.force(x);
    if (r.rule) CHECK_FALSE(check_evidence(phi, engine.materialize(r), family()));
  }
}

TEST_CASE("K44-e subcase agreement") {
  // Whenever A is a 4-pattern through a4 b4 and B, C carry nothing, the
  // engine forces by rule A or by rule B with the apex branch set on a4 or b4.
  const Graph g = k44_minus_e();
  const Engine engine(g, family(), {RuleSet::parse("AB"), 1, {}});
  const VertexMask A = mask_of({a(2), a(3), a(4), b(2), b(3), b(4)});
  const VertexMask B = mask_of({a(1), a(2), a(3), b(2), b(3), b(4)});
  const VertexMask C = mask_of({a(2), a(3), a(4), b(1), b(2), b(3)});
  // a4 b4 relabeled inside A: a2 a3 a4 b2 b3 b4 -> 0..5.
  const Pattern through{FourPattern{{2, 5}}};
  int matched = 0;
  enumerate_assignments(engine.space(), [&](const HomologyAssignment& phi) {
    if (classify_k33(restrict_to(phi, A)) != through) return true;
    if (classify_k33(restrict_to(phi, B)) != Pattern{AllZero{}}) return true;
    if (classify_k33(restrict_to(phi, C)) != Pattern{AllZero{}}) return true;
    ++matched;
    const Engine::Ref r = engine.force(phi.values());
    REQUIRE(r.rule != 0);
    const ForcingEvidence ev = engine.materialize(r);
    if (const auto* rb = std::get_if<RuleBEvidence>(&ev)) {
      const VertexMask apex = rb->model.branch_sets[static_cast<std::size_t>(rb->apex)];
      CHECK((apex & (bit(a(4)) | bit(b(4)))) != 0);
    } else {
      CHECK(std::holds_alternative<RuleAEvidence>(ev));
    }
    return true;
  });
  CHECK(matched > 0);
}

TEST_CASE("minimality scan of K6") {
  const MinimalityReport r = minimality_scan(complete_graph(6), family());
  CHECK(r.edge_orbits == 1);
  CHECK(r.engine_minimal);
  for (const auto& item : r.items) CHECK(item.verdict == Verdict::Undecided);
}

}
