// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Time limits and counts are pinned below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rp3/canon.hpp"
#include "rp3/families.hpp"
#include "rp3/linkage.hpp"
#include "rp3/patterns.hpp"
#include "rp3/report.hpp"

using namespace rp3;

namespace {

constexpr double kPetersenSeconds = 5.0;
constexpr double kK44Seconds = 10.0;
constexpr double kK7Seconds = 300.0;  // each
constexpr double kK6ThereforeSeconds = 300.0;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

int jobs() {
  const char* env = std::getenv("RP3_JOBS");
  return env ? std::max(1, std::atoi(env)) : 8;
}

EngineOptions options(const std::string& rules, int workers = jobs()) {
  EngineOptions o;
  o.rules = RuleSet::parse(rules);
  o.jobs = workers;
  return o;
}

// Certifies g and re-validates every piece of evidence.
Certificate certify_checked(const Graph& g, const std::string& rules, Outcome& out, const std::string& label) {
  const Engine engine(g, default_family(), options(rules));
  Certificate cert = certify(engine);
  std::string failure;
  const std::size_t bad = validate_certificate(cert, engine, default_family(), &failure);
  out.require(bad == 0, label + ": " + std::to_string(bad) + " evidence items fail re-validation, first: " + failure);
  out.note(label + ": " + to_string(cert.verdict) + " over " + std::to_string(cert.assignments) + " assignments (A " +
           std::to_string(cert.counts['A']) + ", C " + std::to_string(cert.counts['C']) + ", B " +
           std::to_string(cert.counts['B']) + ", unforced " + std::to_string(cert.counts['U']) + ") in " +
           fixed(cert.seconds) + " s");
  return cert;
}

void emit_unforced(const Certificate& cert, Outcome& out, const std::string& label) {
  for (const auto& s : cert.unforced_serialized) out.note("finding: " + label + " unforced assignment " + s);
}

Outcome petersen_closure() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const PetersenFamily f = petersen_family();
  const double secs = since(t0);
  out.require(f.members.size() == 7, "expected 7 classes, got " + std::to_string(f.members.size()));
  int bipartite8 = 0;
  for (const auto& m : f.members) {
    if (m.graph.order() == 8 && m.graph.is_bipartite()) {
      ++bipartite8;
      out.require(is_isomorphic(m.graph, k44_minus_e()), "8-vertex bipartite member is not K44-e");
    }
  }
  out.require(bipartite8 == 1, "expected one 8-vertex bipartite member");
  out.require(secs < kPetersenSeconds, "closure took " + fixed(secs) + " s");
  out.note("7 classes in " + fixed(secs) + " s");
  return out;
}

Outcome table1() {
  Outcome out;
  const std::vector<std::string> names{"K6", "K331", "P7", "P8", "P9", "Petersen"};
  const std::vector<std::size_t> expected{1, 2, 3, 4, 2, 1};
  std::string got;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto n = orbits(default_family().by_name(names[i]).graph).vertex_orbits.size();
    got += (i ? "," : "") + std::to_string(n);
    out.require(n == expected[i], names[i] + " vertex orbits " + std::to_string(n));
  }
  out.note("vertex orbits (" + got + ")");
  return out;
}

Outcome table2() {
  Outcome out;
  const std::vector<std::string> names{"K6", "K331", "P7", "P8", "P9", "Petersen"};
  const std::vector<int> pairs{1, 3, 5, 10, 6, 2};
  const std::vector<int> ones{0, 1, 3, 7, 2, 0};
  std::string got_p, got_v;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const OrbitTable t = orbits(default_family().by_name(names[i]).graph);
    int v1 = 0;
    for (int x : t.vfn) v1 += x;
    got_p += (i ? "," : "") + std::to_string(t.pair_orbits.size());
    got_v += (i ? "," : "") + std::to_string(v1);
    out.require(static_cast<int>(t.pair_orbits.size()) == pairs[i], names[i] + " pair orbits");
    out.require(v1 == ones[i], names[i] + " VFN=1 count");
  }
  out.note("pair orbits (" + got_p + "), VFN=1 (" + got_v + ")");
  return out;
}

Outcome catalogs() {
  Outcome out;
  const long long expected[] = {21, 91, 469};
  for (int k = 0; k <= 2; ++k) {
    const Catalog c = build_catalog(k, default_family(), jobs());
    out.require(c.formula_count == expected[k], "k=" + std::to_string(k) + " formula " + std::to_string(c.formula_count));
    out.note("k=" + std::to_string(k) + ": formula " + std::to_string(c.formula_count) + ", constructed " +
             std::to_string(c.constructed_count));
    for (const auto& f : c.findings) out.note("finding: " + f);
  }
  return out;
}

Outcome census() {
  Outcome out;
  const Census c = k33_census();
  out.require(c.total == 16, "total");
  out.require(c.counts.at("AllZero") == 1 && c.counts.at("FourPattern") == 9 && c.counts.at("SixPattern") == 6,
              "partition is not 1/9/6");
  out.require(c.k32_parity, "a K32 restriction has an odd count");
  out.note("1/9/6, " + std::to_string(c.k32_checked) + " K32 parity checks");
  return out;
}

Outcome k44e() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const Certificate c = certify_checked(k44_minus_e(), "AB", out, "K44-e");
  const double secs = since(t0);
  out.require(c.verdict == Verdict::Certified, "K44-e not certified");
  out.require(c.assignments == 256, "assignment count " + std::to_string(c.assignments));
  out.require(secs < kK44Seconds, "took " + fixed(secs) + " s");
  emit_unforced(c, out, "K44-e");
  return out;
}

Outcome k7() {
  Outcome out;
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K7-2e adjacent", k7_minus_adjacent()},
                                                                          {"K7-2e non-adjacent", k7_minus_nonadjacent()}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate c = certify_checked(g, "ABC", out, name);
    const double secs = since(t0);
    out.require(c.assignments == 8192, name + " assignment count");
    out.require(c.verdict == Verdict::Certified, name + " has unforced assignments");
    out.require(secs < kK7Seconds, name + " took " + fixed(secs) + " s");
    emit_unforced(c, out, name);
  }
  return out;
}

Outcome k6_therefore_pair() {
  Outcome out;
  const MarkedGraph k6t = k6_therefore();
  const auto t0 = std::chrono::steady_clock::now();
  const Certificate c = certify_checked(glue_therefore(k6t, k6t, {0, 1, 2}), "ABC", out, "K6∴K6");
  const double secs = since(t0);
  out.require(c.assignments == 65536, "assignment count");
  out.require(c.verdict == Verdict::Certified, "not certified");
  out.require(secs < kK6ThereforeSeconds, "took " + fixed(secs) + " s");
  emit_unforced(c, out, "K6∴K6");
  return out;
}

Outcome therefore_family_check() {
  Outcome out;
  const ThereforeFamily tf = therefore_family(default_family());
  out.require(tf.gluings.size() == 18, "classes " + std::to_string(tf.gluings.size()));
  int with_minor = 0;
  for (const auto& g : tf.gluings) with_minor += g.has_k44e_minor;
  out.require(with_minor == 5, "K44-e minors " + std::to_string(with_minor));
  const auto minimal = tf.minimal_candidates();
  out.require(minimal.size() == 13, "remaining " + std::to_string(minimal.size()));
  int certified = 0;
  for (const auto* g : minimal) {
    Outcome inner;
    const Certificate c = certify_checked(g->graph, "ABC", inner, g->name);
    out.ok = out.ok && inner.ok;
    for (auto& n : inner.notes) out.notes.push_back(n);
    if (c.verdict == Verdict::Certified) {
      ++certified;
    } else {
      out.require(false, g->name + " undecided");
      emit_unforced(c, out, g->name);
    }
  }
  out.note("18 classes, " + std::to_string(with_minor) + " with K44-e minor, " + std::to_string(certified) + " of " +
           std::to_string(minimal.size()) + " certified");
  return out;
}

Outcome negative_controls() {
  Outcome out;
  const std::vector<std::string> subsets{"none", "A", "B", "C", "AB", "AC", "BC", "ABC"};
  for (const auto& m : default_family().projective_planar()) {
    std::uint64_t least = ~std::uint64_t{0};
    for (const auto& rules : subsets) {
      const Certificate c = certify(m.graph, default_family(), options(rules));
      out.require(c.verdict == Verdict::Undecided && c.counts.at('U') >= 1, m.name + " certified under " + rules);
      least = std::min(least, c.counts.at('U'));
    }
    out.note(m.name + ": at least " + std::to_string(least) + " unforced under every rule subset");
  }
  return out;
}

Outcome minimality() {
  Outcome out;
  const auto tf = therefore_family(default_family());
  const std::vector<std::pair<std::string, Graph>> graphs{{"K44-e", k44_minus_e()},
                                                          {"K7-2e adjacent", k7_minus_adjacent()},
                                                          {"K7-2e non-adjacent", k7_minus_nonadjacent()},
                                                          {"P9B∴P9B", tf.by_name("P9B∴P9B").graph}};
  for (const auto& [name, g] : graphs) {
    const auto t0 = std::chrono::steady_clock::now();
    const MinimalityReport r = minimality_scan(g, default_family(), options("ABC"));
    int undecided = 0;
    for (const auto& item : r.items) {
      undecided += item.verdict == Verdict::Undecided;
      out.require(item.verdict == Verdict::Undecided, name + " " + item.operation + " of edge " + std::to_string(item.edge.u) +
                                                           "-" + std::to_string(item.edge.v) + " is certified");
    }
    out.note(name + ": " + std::to_string(r.edge_orbits) + " edge orbits, " + std::to_string(undecided) + "/" +
             std::to_string(r.items.size()) + " one-step minors undecided in " + fixed(since(t0)) + " s");
  }
  return out;
}

Outcome reconciliation() {
  Outcome out;
  const CatalogBundle bundle = build_all_catalogs(default_family(), jobs());
  const Json m = manifest_json(bundle, {"0", "1", "2", "deltawye"});
  const auto& t = m["totals"];
  out.require(t["components"]["k0"] == 21 && t["components"]["k1"] == 91 && t["components"]["k2"] == 469 &&
                  t["components"]["therefore_minimal"] == 13,
              "components");
  out.require(t["total"] == 594, "total " + t["total"].dump());
  out.require(t["total_with_sporadic"] == 597, "alternative total " + t["total_with_sporadic"].dump());
  out.require(m["entry_count"] == 594, "manifest entries " + m["entry_count"].dump());
  out.note("21 + 91 + 469 + 13 = " + t["total"].dump() + "; with 3 sporadic graphs " + t["total_with_sporadic"].dump());
  return out;
}

Outcome determinism() {
  Outcome out;
  const MarkedGraph k6t = k6_therefore();
  const auto tf = therefore_family(default_family());
  const std::vector<std::pair<std::string, Graph>> graphs{{"K44-e", k44_minus_e()},
                                                          {"K7-2e adjacent", k7_minus_adjacent()},
                                                          {"K6∴K6", glue_therefore(k6t, k6t, {0, 1, 2})},
                                                          {"P7B∴P8B", tf.by_name("P7B∴P8B").graph}};
  ReportOptions plain;
  plain.timing = false;
  for (const auto& [name, g] : graphs) {
    std::string first;
    std::string first_evidence;
    for (int w : {1, 4, 8}) {
      const Engine engine(g, default_family(), options("ABC", w));
      const Certificate c = certify(engine);
      ReportOptions with_evidence = plain;
      with_evidence.evidence_from = &engine;
      const std::string text = dump(certificate_json(c, plain));
      const std::string full = dump(certificate_json(c, with_evidence));
      if (w == 1) {
        first = text;
        first_evidence = full;
      } else {
        out.require(text == first, name + " certificate differs at " + std::to_string(w) + " workers");
        out.require(full == first_evidence, name + " evidence differs at " + std::to_string(w) + " workers");
      }
    }
  }
  std::string manifest;
  for (int w : {1, 4, 8}) {
    const std::string text = dump(manifest_json(build_all_catalogs(default_family(), w), {"0", "1", "2", "deltawye"}));
    if (w == 1) {
      manifest = text;
    } else {
      out.require(text == manifest, "manifest differs at " + std::to_string(w) + " workers");
    }
  }
  out.note(std::to_string(graphs.size()) + " certificates and the full manifest compared at 1, 4, 8 workers");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Petersen family closure", petersen_closure},
      {"Table 1 vertex orbits", table1},
      {"Table 2 pair orbits and VFN", table2},
      {"catalog counts 21/91/469", catalogs},
      {"K33 census and K32 parity", census},
      {"K44-e certified with rules AB", k44e},
      {"both K7-2e graphs certified with rules ABC", k7},
      {"K6∴K6 certified", k6_therefore_pair},
      {"∴-family 18/5/13", therefore_family_check},
      {"projective-planar members stay undecided", negative_controls},
      {"minimality scans", minimality},
      {"reconciliation 594 and 597", reconciliation},
      {"determinism across 1, 4, 8 workers", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    failed += !out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  (" << fixed(since(t0))
              << " s)\n";
    for (const auto& n : out.notes) std::cout << "        " << n << '\n';
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
