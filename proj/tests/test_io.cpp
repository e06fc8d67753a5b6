#include <filesystem>

#include "doctest.h"
#include "rp3/canon.hpp"
#include "rp3/io.hpp"
#include "rp3/report.hpp"
#include "util.hpp"

using namespace rp3;

TEST_SUITE("io_cli") {

TEST_CASE("edge lists") {
  CHECK(graph_of(parse_edge_list("2 1\n0 1")) == complete_graph(2));
  const Graph k44 = testutil::fixture("k44_minus_e.txt");
  CHECK(k44.order() == 8);
  CHECK(k44.size() == 15);
  CHECK(k44 == k44_minus_e());

  const auto marked = parse_edge_list("# a comment\n4 2\n0 3  # trailing\n1 3\nmarks: 0 1 2\n");
  REQUIRE(std::holds_alternative<MarkedGraph>(marked));
  CHECK(std::get<MarkedGraph>(marked).marks == std::array<int, 3>{0, 1, 2});
  CHECK(graph_of(parse_edge_list(write_edge_list(std::get<MarkedGraph>(marked)))) == graph_of(marked));
}

TEST_CASE("edge list errors") {
  try {
    parse_edge_list("3 1\n0 0");
    FAIL("expected LoopEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LoopEdge);
  }
  try {
    parse_edge_list("3 2\n0 1\n1 0");
    FAIL("expected DuplicateEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateEdge);
  }
  try {
    parse_edge_list("3 1\n0 x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5"), Error);
  CHECK_THROWS_AS(parse_edge_list("4 1\n0 1\nmarks: 0 1 2"), Error);
}

TEST_CASE("graph6") {
  CHECK(to_graph6(complete_graph(6)) == "E~~w");
  CHECK(to_graph6(petersen_graph()).size() == 9);
  CHECK(parse_graph6("E~~w") == complete_graph(6));
  CHECK(graph_of(parse_graph(">>graph6<<E~~w\n")) == complete_graph(6));
  CHECK_THROWS_AS(parse_graph6("E~~"), Error);
}

TEST_CASE("round trips over the catalog") {
  const auto bundle = build_all_catalogs(default_family(), 4);
  std::size_t n = 0;
  for (const Catalog* c : {&bundle.k0, &bundle.k1, &bundle.k2}) {
    for (const auto& e : c->entries) {
      CHECK(parse_graph6(to_graph6(e.graph)) == e.graph);
      CHECK(graph_of(parse_edge_list(write_edge_list(e.graph))) == e.graph);
      CHECK(graph_from_code(e.code) == relabel(e.graph, canonical_form(e.graph, {}, {64, 64}).labeling));
      ++n;
    }
  }
  CHECK(n == 581);
}

TEST_CASE("graph records") {
  const auto records = read_graph_records(testutil::obstruction_file());
  CHECK(records.size() == 10);
  const auto dir = std::filesystem::temp_directory_path() / "rp3_records_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "g6.txt", "E~~w\nI?LRCecq?\n");
  const auto g6 = read_graph_records(dir / "g6.txt");
  REQUIRE(g6.size() == 2);
  CHECK(g6[1] == parse_graph6("I?LRCecq?"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("fixture lookup") {
  CHECK_NOTHROW(load_graph("petersen"));
  CHECK_NOTHROW(load_graph("therefore_p7b_p7b_config2"));
  CHECK_THROWS_AS(load_graph("no_such_graph"), Error);
}

TEST_CASE("manifest carries both totals") {
  const auto bundle = build_all_catalogs(default_family());
  const Json m = manifest_json(bundle, {"0", "1", "2", "deltawye"});
  CHECK(m["entry_count"] == 594);
  CHECK(m["totals"]["total"] == 594);
  CHECK(m["totals"]["total_with_sporadic"] == 597);
  CHECK(dump(m) == dump(manifest_json(build_all_catalogs(default_family(), 8), {"0", "1", "2", "deltawye"})));
}

}
