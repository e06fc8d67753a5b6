#include "rp3/report.hpp"

#include "rp3/io.hpp"
#include "rp3/structure.hpp"

namespace rp3 {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_json(const Graph& g) {
  const Limits wide{kMaxOrder, 64};
  return Json{{"order", g.order()}, {"size", g.size()}, {"graph6", to_graph6(g)}, {"code", to_hex(canonical_code(g, wide))}};
}

Json certificate_json(const Certificate& cert, const ReportOptions& options) {
  Json j;
  j["graph"] = Json{{"order", cert.graph.order()}, {"size", cert.graph.size()}, {"graph6", to_graph6(cert.graph)},
                    {"code", to_hex(cert.code)}};
  j["rules"] = cert.rules.text();
  j["verdict"] = to_string(cert.verdict);
  j["dim"] = cert.dim;
  j["assignments"] = cert.assignments;
  j["counts"] = Json{{"A", cert.counts.at('A')}, {"B", cert.counts.at('B')}, {"C", cert.counts.at('C')},
                     {"unforced", cert.counts.at('U')}};
  j["unforced"] = cert.unforced_serialized;
  if (cert.verdict == Verdict::Undecided) {
    j["note"] = "UNDECIDED is not a proof of linklessness: the search ranges over all functionals, not only realizable ones";
  }
  Json stats;
  stats["chordless_cycles"] = cert.stats.cycles;
  stats["disjoint_pairs"] = cert.stats.disjoint_pairs;
  Json models = Json::object();
  for (const auto& [name, count] : cert.stats.models) models[name] = count;
  stats["models"] = models;
  stats["rule_b_subspaces"] = cert.stats.b_subspaces;
  stats["rule_c_subspaces"] = cert.stats.c_subspaces;
  j["stats"] = stats;
  if (options.evidence_from != nullptr) {
    Json ev = Json::array();
    for (std::uint64_t phi = 0; phi < cert.evidence.size(); ++phi) {
      const auto r = cert.evidence[phi];
      ev.push_back(r.rule ? describe(options.evidence_from->materialize(r)) : std::string("unforced"));
    }
    j["evidence"] = ev;
  }
  if (options.timing) j["timing"] = Json{{"jobs", cert.jobs}, {"wall_seconds", cert.seconds}};
  return j;
}

Json minimality_json(const MinimalityReport& report) {
  Json items = Json::array();
  for (const auto& i : report.items) {
    items.push_back(Json{{"edge", {i.edge.u, i.edge.v}},
                         {"orbit_size", i.orbit_size},
                         {"operation", i.operation},
                         {"verdict", to_string(i.verdict)},
                         {"unforced", i.unforced},
                         {"assignments", i.assignments}});
  }
  return Json{{"code", to_hex(report.code)},
              {"edge_orbits", report.edge_orbits},
              {"engine_minimal", report.engine_minimal},
              {"items", items}};
}

Json census_json(const Census& census) {
  Json counts = Json::object();
  for (const char* name : {"AllZero", "FourPattern", "SixPattern"}) {
    const auto it = census.counts.find(name);
    counts[name] = it == census.counts.end() ? 0 : it->second;
  }
  return Json{{"total", census.total},
              {"counts", counts},
              {"k32_parity_even", census.k32_parity},
              {"k32_assignments_checked", census.k32_checked}};
}

Json orbits_json(const Graph& g, const OrbitTable& table) {
  Json pairs = Json::array();
  int vfn1 = 0;
  for (std::size_t o = 0; o < table.pair_orbits.size(); ++o) {
    Json cell = Json::array();
    for (const Edge& e : table.pair_orbits[o]) cell.push_back({e.u, e.v});
    pairs.push_back(Json{{"vfn", table.vfn[o]}, {"pairs", cell}});
    vfn1 += table.vfn[o];
  }
  return Json{{"graph", graph_json(g)},
              {"vertex_orbits", table.vertex_orbits},
              {"vertex_orbit_count", table.vertex_orbits.size()},
              {"pair_orbit_count", table.pair_orbits.size()},
              {"vfn1_count", vfn1},
              {"pair_orbits", pairs}};
}

Json family_json(const PetersenFamily& family) {
  Json members = Json::array();
  for (const auto& m : family.members) {
    Json g = graph_json(m.graph);
    g["name"] = m.name;
    g["projective_planar"] = m.name != "K44-e";
    members.push_back(g);
  }
  return Json{{"count", family.members.size()}, {"members", members}};
}

Json catalog_json(const Catalog& catalog) {
  return Json{{"k", catalog.k},
              {"items", catalog.items},
              {"formula_count", catalog.formula_count},
              {"constructed_count", catalog.constructed_count},
              {"findings", catalog.findings}};
}

Json therefore_json(const ThereforeFamily& tf) {
  Json members = Json::array();
  for (std::size_t i = 0; i < tf.members.size(); ++i) {
    Json g = graph_json(tf.members[i].graph);
    g["name"] = tf.member_names[i] + "∴";
    g["marks"] = tf.members[i].marks;
    members.push_back(g);
  }
  Json gluings = Json::array();
  int with_k44 = 0;
  for (const auto& g : tf.gluings) {
    Json e = graph_json(g.graph);
    e["name"] = g.name;
    e["k44e_minor"] = g.has_k44e_minor;
    with_k44 += g.has_k44e_minor ? 1 : 0;
    gluings.push_back(e);
  }
  return Json{{"marked_members", members},
              {"classes", tf.gluings.size()},
              {"with_k44e_minor", with_k44},
              {"minimal_candidates", tf.minimal_candidates().size()},
              {"gluings", gluings},
              {"findings", tf.findings}};
}

Json reconciliation_json(const Reconciliation& r) {
  return Json{
      {"components", Json{{"k0", r.k0}, {"k1", r.k1}, {"k2", r.k2}, {"therefore_minimal", r.therefore_minimal}}},
      {"constructed", Json{{"k0", r.k0_constructed}, {"k1", r.k1_constructed}, {"k2", r.k2_constructed}}},
      {"total", r.total},
      {"total_provenance", "k0 + k1 + k2 formula counts + minimal ∴ gluings"},
      {"sporadic", r.sporadic_names},
      {"total_with_sporadic", r.total_with_sporadic},
      {"total_with_sporadic_provenance", "total + K44-e + both K7-2e graphs"},
      {"note", "both totals are reported; neither is preferred"}};
}

CatalogBundle build_all_catalogs(const PetersenFamily& family, int jobs) {
  CatalogBundle b{build_catalog(0, family, jobs), build_catalog(1, family, jobs), build_catalog(2, family, jobs),
                  therefore_family(family), {}};
  b.totals = grand_total(b.k0, b.k1, b.k2, b.therefore);
  return b;
}

namespace {

bool wants(const std::vector<std::string>& parts, const std::string& p) {
  return std::find(parts.begin(), parts.end(), p) != parts.end();
}

Json entry_json(const CatalogEntry& e) {
  return Json{{"code", to_hex(e.code)},
              {"file", to_hex(e.code) + ".txt"},
              {"kind", e.kind},
              {"provenance", e.provenance},
              {"order", e.graph.order()},
              {"size", e.graph.size()},
              {"connectivity", e.connectivity},
              {"graph6", to_graph6(e.graph)}};
}

std::vector<CatalogEntry> therefore_entries(const ThereforeFamily& tf) {
  std::vector<CatalogEntry> out;
  for (const auto* g : tf.minimal_candidates()) {
    out.push_back({g->code, g->graph, "therefore", g->name, connectivity(g->graph).k});
  }
  return out;
}

}  // namespace

Json manifest_json(const CatalogBundle& bundle, const std::vector<std::string>& parts) {
  Json j;
  Json catalogs = Json::object();
  Json entries = Json::array();
  for (const Catalog* c : {&bundle.k0, &bundle.k1, &bundle.k2}) {
    const std::string key = std::to_string(c->k);
    if (!wants(parts, key)) continue;
    catalogs["k" + key] = catalog_json(*c);
    for (const auto& e : c->entries) entries.push_back(entry_json(e));
  }
  if (wants(parts, "deltawye")) {
    catalogs["deltawye"] = therefore_json(bundle.therefore);
    for (const auto& e : therefore_entries(bundle.therefore)) entries.push_back(entry_json(e));
  }
  j["catalogs"] = catalogs;
  j["entry_count"] = entries.size();
  j["entries"] = entries;
  j["totals"] = reconciliation_json(bundle.totals);
  return j;
}

void write_catalog_directory(const std::filesystem::path& dir, const CatalogBundle& bundle,
                             const std::vector<std::string>& parts) {
  std::filesystem::create_directories(dir);
  auto write = [&](const CatalogEntry& e) {
    write_text_file(dir / (to_hex(e.code) + ".txt"), "# " + e.kind + " " + e.provenance + "\n" + write_edge_list(e.graph));
  };
  for (const Catalog* c : {&bundle.k0, &bundle.k1, &bundle.k2}) {
    if (!wants(parts, std::to_string(c->k))) continue;
    for (const auto& e : c->entries) write(e);
  }
  if (wants(parts, "deltawye")) {
    for (const auto& e : therefore_entries(bundle.therefore)) write(e);
  }
  write_text_file(dir / "manifest.json", dump(manifest_json(bundle, parts)));
}

}  // namespace rp3
