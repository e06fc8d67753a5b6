// rp3link: command-line front end for the RP^3 linking engine.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rp3/canon.hpp"
#include "rp3/families.hpp"
#include "rp3/io.hpp"
#include "rp3/linkage.hpp"
#include "rp3/minor.hpp"
#include "rp3/patterns.hpp"
#include "rp3/report.hpp"
#include "rp3/structure.hpp"

namespace {

struct RunConfig {
  std::string rules = "ABC";
  int jobs = 1;
  std::string format = "text";
  std::string expect = "none";
  std::string obstructions;
  std::string out;
  bool evidence = false;
  bool timing = true;
  rp3::Limits limits;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return std::stoi(v);
}

// Exit status: 0 on success, 2 on a failed --expect.
int expectation(const RunConfig& cfg, bool certified) {
  if (cfg.expect == "none") return 0;
  return (cfg.expect == "certified") == certified ? 0 : 2;
}

rp3::EngineOptions engine_options(const RunConfig& cfg) {
  rp3::EngineOptions o;
  o.rules = rp3::RuleSet::parse(cfg.rules);
  o.jobs = cfg.jobs;
  o.limits = cfg.limits;
  return o;
}

std::vector<rp3::Graph> obstructions(const RunConfig& cfg) {
  if (cfg.obstructions.empty()) return {};
  return rp3::read_graph_records(cfg.obstructions);
}

int cmd_petersen(const RunConfig& cfg) {
  const auto& family = rp3::default_family();
  const auto obs = obstructions(cfg);
  if (cfg.format == "json") {
    rp3::Json j = rp3::family_json(family);
    if (!obs.empty()) {
      for (std::size_t i = 0; i < family.members.size(); ++i) {
        j["members"][i]["projective_planar_by_obstructions"] = rp3::is_projective_planar(family.members[i].graph, obs, cfg.limits);
      }
    }
    std::cout << rp3::dump(j);
    return 0;
  }
  for (const auto& m : family.members) {
    std::cout << rp3::to_graph6(m.graph) << "  " << m.name;
    if (!obs.empty()) std::cout << (rp3::is_projective_planar(m.graph, obs, cfg.limits) ? "  projective-planar" : "  not projective-planar");
    std::cout << '\n';
  }
  return 0;
}

int cmd_orbits(const RunConfig& cfg, const std::string& input) {
  const rp3::Graph g = rp3::graph_of(rp3::load_graph(input));
  const auto table = rp3::orbits(g, cfg.limits);
  if (cfg.format == "json") {
    std::cout << rp3::dump(rp3::orbits_json(g, table));
    return 0;
  }
  int vfn1 = 0;
  for (int x : table.vfn) vfn1 += x;
  std::cout << "vertex orbits: " << table.vertex_orbits.size() << "\n";
  for (const auto& o : table.vertex_orbits) {
    std::cout << " ";
    for (int v : o) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << "pair orbits: " << table.pair_orbits.size() << " (VFN=1: " << vfn1 << ")\n";
  for (std::size_t i = 0; i < table.pair_orbits.size(); ++i) {
    const auto& e = table.pair_orbits[i].front();
    std::cout << "  VFN=" << table.vfn[i] << " size " << table.pair_orbits[i].size() << " e.g. " << e.u << '-' << e.v << '\n';
  }
  return 0;
}

int cmd_patterns(const RunConfig& cfg) {
  const auto census = rp3::k33_census();
  if (cfg.format == "json") {
    std::cout << rp3::dump(rp3::census_json(census));
    return 0;
  }
  std::cout << "pattern       count\n";
  for (const auto& [name, count] : census.counts) std::cout << name << std::string(14 - name.size(), ' ') << count << '\n';
  std::cout << "total         " << census.total << '\n';
  std::cout << "K_{3,2} parity even: " << (census.k32_parity ? "yes" : "NO") << " (" << census.k32_checked << " assignments)\n";
  return 0;
}

int cmd_minor(const RunConfig& cfg, const std::string& h_in, const std::string& g_in) {
  const rp3::Graph h = rp3::graph_of(rp3::load_graph(h_in));
  const rp3::Graph g = rp3::graph_of(rp3::load_graph(g_in));
  const auto model = rp3::find_minor(h, g, cfg.limits);
  if (cfg.format == "json") {
    rp3::Json j{{"minor", model.has_value()}};
    if (model) {
      rp3::Json sets = rp3::Json::array();
      for (int p = 0; p < h.order(); ++p) sets.push_back(model->branch_vertices(p));
      j["branch_sets"] = sets;
      j["edge_map"] = model->edge_map;
    }
    std::cout << rp3::dump(j);
  } else {
    std::cout << (model ? "minor" : "not a minor") << '\n';
    if (model) {
      for (int p = 0; p < h.order(); ++p) {
        std::cout << "  " << p << " <-";
        for (int v : model->branch_vertices(p)) std::cout << ' ' << v;
        std::cout << '\n';
      }
    }
  }
  return 0;
}

int cmd_certify(const RunConfig& cfg, const std::string& input) {
  const rp3::Graph g = rp3::graph_of(rp3::load_graph(input));
  const rp3::Engine engine(g, rp3::default_family(), engine_options(cfg));
  const rp3::Certificate cert = rp3::certify(engine);
  if (cfg.format == "json") {
    rp3::ReportOptions ro;
    ro.timing = cfg.timing;
    ro.evidence_from = cfg.evidence ? &engine : nullptr;
    std::cout << rp3::dump(rp3::certificate_json(cert, ro));
  } else {
    std::cout << rp3::to_string(cert.verdict) << "  rules " << cert.rules.text() << "  dim " << cert.dim << "  assignments "
              << cert.assignments << '\n';
    std::cout << "  forced by A " << cert.counts.at('A') << ", C " << cert.counts.at('C') << ", B " << cert.counts.at('B')
              << "; unforced " << cert.counts.at('U') << '\n';
    for (const auto& s : cert.unforced_serialized) std::cout << "  unforced " << s << '\n';
    if (cfg.evidence) {
      for (std::uint64_t phi = 0; phi < cert.evidence.size(); ++phi) {
        if (cert.evidence[phi].rule) std::cout << "  " << phi << ": " << rp3::describe(engine.materialize(cert.evidence[phi])) << '\n';
      }
    }
    if (cert.verdict == rp3::Verdict::Undecided) {
      std::cout << "  note: UNDECIDED does not show the graph has a linkless embedding\n";
    }
    if (cfg.timing) std::cout << "  " << cert.seconds << " s with " << cert.jobs << " worker(s)\n";
  }
  return expectation(cfg, cert.verdict == rp3::Verdict::Certified);
}

int cmd_minimality(const RunConfig& cfg, const std::string& input) {
  const rp3::Graph g = rp3::graph_of(rp3::load_graph(input));
  const auto report = rp3::minimality_scan(g, rp3::default_family(), engine_options(cfg));
  const auto obs = obstructions(cfg);
  rp3::Json j = rp3::minimality_json(report);
  if (!obs.empty()) {
    for (std::size_t i = 0; i < report.items.size(); ++i) {
      const auto& it = report.items[i];
      const rp3::Graph minor = it.operation == "delete" ? rp3::delete_edge(g, it.edge) : rp3::contract_edge(g, it.edge);
      j["items"][i]["projective_planar_by_obstructions"] = rp3::is_projective_planar(minor, obs, cfg.limits);
    }
  }
  if (cfg.format == "json") {
    std::cout << rp3::dump(j);
  } else {
    std::cout << "edge orbits: " << report.edge_orbits << "  engine-minimal: " << (report.engine_minimal ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < report.items.size(); ++i) {
      const auto& it = report.items[i];
      std::cout << "  " << it.operation << ' ' << it.edge.u << '-' << it.edge.v << " (orbit of " << it.orbit_size
                << "): " << rp3::to_string(it.verdict) << ", " << it.unforced << '/' << it.assignments << " unforced";
      if (j["items"][i].contains("projective_planar_by_obstructions")) {
        std::cout << (j["items"][i]["projective_planar_by_obstructions"].get<bool>() ? ", projective-planar" : ", not projective-planar");
      }
      std::cout << '\n';
    }
  }
  // Minimal means every one-step minor stays undecided.
  return expectation(cfg, !report.engine_minimal);
}

int cmd_catalog(const RunConfig& cfg, const std::string& which) {
  std::vector<std::string> parts;
  if (which == "all") {
    parts = {"0", "1", "2", "deltawye"};
  } else if (which == "0" || which == "1" || which == "2" || which == "deltawye") {
    parts = {which};
  } else {
    throw rp3::Error(rp3::Errc::ParseError, "catalog expects 0, 1, 2, deltawye or all");
  }
  const auto bundle = rp3::build_all_catalogs(rp3::default_family(), cfg.jobs);
  if (!cfg.out.empty()) rp3::write_catalog_directory(cfg.out, bundle, parts);
  const rp3::Json manifest = rp3::manifest_json(bundle, parts);
  if (cfg.format == "json") {
    std::cout << rp3::dump(manifest);
    return 0;
  }
  for (const auto& [key, c] : manifest["catalogs"].items()) {
    if (key == "deltawye") {
      std::cout << "deltawye: " << c["classes"] << " classes, " << c["with_k44e_minor"] << " with a K44-e minor, "
                << c["minimal_candidates"] << " remaining\n";
    } else {
      std::cout << key << ": formula " << c["formula_count"] << ", constructed " << c["constructed_count"] << " from "
                << c["items"] << " items, " << c["findings"].size() << " findings\n";
    }
  }
  if (!cfg.out.empty()) std::cout << "wrote " << manifest["entry_count"] << " entries to " << cfg.out << '\n';
  return 0;
}

int cmd_reconcile(const RunConfig& cfg) {
  const auto bundle = rp3::build_all_catalogs(rp3::default_family(), cfg.jobs);
  const auto& r = bundle.totals;
  if (cfg.format == "json") {
    std::cout << rp3::dump(rp3::reconciliation_json(r));
    return 0;
  }
  std::cout << r.k0 << " + " << r.k1 << " + " << r.k2 << " + " << r.therefore_minimal << " = " << r.total << '\n';
  std::cout << r.total << " + " << r.sporadic << " sporadic (";
  for (std::size_t i = 0; i < r.sporadic_names.size(); ++i) std::cout << (i ? ", " : "") << r.sporadic_names[i];
  std::cout << ") = " << r.total_with_sporadic << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify intrinsic linking in RP^3 and rebuild the related graph catalogs"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.limits.max_vertices = env_int("RP3_MAX_VERTICES", cfg.limits.max_vertices);
  cfg.limits.max_dim = env_int("RP3_MAX_DIM", cfg.limits.max_dim);
  cfg.jobs = env_int("RP3_JOBS", cfg.jobs);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-vertices", cfg.limits.max_vertices, "Graph order bound")->check(CLI::PositiveNumber);
  };
  auto add_engine = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--rules", cfg.rules, "Forcing rules, e.g. ABC, AB or none");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", cfg.limits.max_dim, "Cycle-space dimension bound")->check(CLI::Range(0, 40));
    sub->add_option("--expect", cfg.expect, "Exit 2 unless the verdict matches")
        ->check(CLI::IsMember({"certified", "undecided", "none"}));
    sub->add_flag("!--no-timing", cfg.timing, "Omit wall time from reports");
  };

  std::string input;
  std::string input2;
  std::string which;

  auto* petersen = app.add_subcommand("petersen", "Print the Petersen family as graph6");
  add_common(petersen);
  petersen->add_option("--obstructions", cfg.obstructions, "Projective-plane obstruction file");

  auto* orbits_cmd = app.add_subcommand("orbits", "Vertex and pair orbits with VFN");
  add_common(orbits_cmd);
  orbits_cmd->add_option("graph", input, "Graph file or fixture name")->required();

  auto* patterns = app.add_subcommand("patterns", "K_{3,3} homology pattern census");
  add_common(patterns);

  auto* minor = app.add_subcommand("minor", "Is H a minor of G?");
  add_common(minor);
  minor->add_option("pattern", input, "Pattern graph H")->required();
  minor->add_option("host", input2, "Host graph G")->required();

  auto* certify = app.add_subcommand("certify", "Enumerate all assignments against the forcing rules");
  add_engine(certify);
  certify->add_option("graph", input, "Graph file or fixture name")->required();
  certify->add_flag("--evidence", cfg.evidence, "Print evidence for every assignment");

  auto* minimality = app.add_subcommand("minimality", "Certify every one-step minor, one edge per orbit");
  add_engine(minimality);
  minimality->add_option("graph", input, "Graph file or fixture name")->required();
  minimality->add_option("--obstructions", cfg.obstructions, "Projective-plane obstruction file");

  auto* catalog = app.add_subcommand("catalog", "Build gluing catalogs");
  add_common(catalog);
  catalog->add_option("which", which, "0, 1, 2, deltawye or all")->required();
  catalog->add_option("--out", cfg.out, "Directory for edge lists and manifest.json");
  catalog->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* reconcile = app.add_subcommand("reconcile", "Report both grand totals");
  add_common(reconcile);
  reconcile->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*petersen) return cmd_petersen(cfg);
    if (*orbits_cmd) return cmd_orbits(cfg, input);
    if (*patterns) return cmd_patterns(cfg);
    if (*minor) return cmd_minor(cfg, input, input2);
    if (*certify) return cmd_certify(cfg, input);
    if (*minimality) return cmd_minimality(cfg, input);
    if (*catalog) return cmd_catalog(cfg, which);
    if (*reconcile) return cmd_reconcile(cfg);
  } catch (const std::exception& e) {
    std::cerr << "rp3link: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
