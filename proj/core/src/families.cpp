#include "rp3/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "rp3/minor.hpp"
#include "rp3/structure.hpp"

namespace rp3 {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const Edge& e : g.edges()) {
    for (VertexMask common = g.neighbors(e.u) & g.neighbors(e.v) & ~(bit(e.v + 1) - 1); common != 0; common &= common - 1) {
      out.push_back({e.u, e.v, lowest_vertex(common)});
    }
  }
  return out;
}

Graph delta_y(const Graph& g, const std::array<int, 3>& t) {
  for (int v : t) check_vertex(g, v);
  if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) || !g.adjacent(t[1], t[2])) {
    throw Error(Errc::NotATriangle, "vertices " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                        std::to_string(t[2]) + " do not form a triangle");
  }
  const int w = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool inside = std::count(t.begin(), t.end(), e.u) + std::count(t.begin(), t.end(), e.v) == 2;
    if (!inside) edges.push_back(e);
  }
  for (int v : t) edges.push_back(make_edge(v, w));
  return Graph(w + 1, std::move(edges));
}

MarkedGraph delta_y(const MarkedGraph& m, const std::array<int, 3>& triangle) {
  return MarkedGraph(delta_y(m.graph, triangle), m.marks);
}

Graph y_delta(const Graph& g, int v) {
  check_vertex(g, v);
  if (g.degree(v) != 3) throw Error(Errc::NotDegree3, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  const auto nb = g.neighbor_list(v);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (g.adjacent(nb[i], nb[j])) {
        throw Error(Errc::WouldCreateParallel,
                    "neighbours " + std::to_string(nb[i]) + " and " + std::to_string(nb[j]) + " are already adjacent");
      }
    }
  }
  Graph out = delete_vertex(g, v);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  out = add_edge(out, make_edge(shift(nb[0]), shift(nb[1])));
  out = add_edge(out, make_edge(shift(nb[0]), shift(nb[2])));
  return add_edge(out, make_edge(shift(nb[1]), shift(nb[2])));
}

const NamedGraph& PetersenFamily::by_name(const std::string& name) const {
  for (const auto& m : members) {
    if (m.name == name) return m;
  }
  throw Error(Errc::Internal, "no Petersen family member named " + name);
}

std::vector<NamedGraph> PetersenFamily::projective_planar() const {
  std::vector<NamedGraph> out;
  for (const auto& m : members) {
    if (m.name != "K44-e") out.push_back(m);
  }
  return out;
}

namespace {

std::string member_name(const Graph& g) {
  const auto degrees = g.degree_sequence();
  const bool has_full = std::find(degrees.begin(), degrees.end(), g.order() - 1) != degrees.end();
  switch (g.order()) {
    case 6: return "K6";
    case 7: return has_full ? "K331" : "P7";
    case 8: return g.is_bipartite() ? "K44-e" : "P8";
    case 9: return "P9";
    case 10: return "Petersen";
    default: return "P" + std::to_string(g.order()) + "?";
  }
}

int name_rank(const std::string& name) {
  static const std::vector<std::string> order{"K6", "K331", "P7", "K44-e", "P8", "P9", "Petersen"};
  const auto it = std::find(order.begin(), order.end(), name);
  return static_cast<int>(it - order.begin());
}

}  // namespace

PetersenFamily petersen_family() {
  std::map<CanonicalCode, Graph> seen;
  std::deque<Graph> queue{complete_graph(6)};
  seen.emplace(canonical_code(queue.front()), queue.front());
  auto offer = [&](const Graph& h) {
    const Graph canon = graph_from_code(canonical_code(h));
    if (seen.emplace(canonical_code(h), canon).second) queue.push_back(canon);
  };
  while (!queue.empty()) {
    const Graph g = queue.front();
    queue.pop_front();
    for (const auto& t : triangles(g)) offer(delta_y(g, t));
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) continue;
      try {
        offer(y_delta(g, v));
      } catch (const Error& e) {
        if (e.code() != Errc::WouldCreateParallel) throw;
      }
    }
  }
  PetersenFamily family;
  for (const auto& [code, g] : seen) family.members.push_back({member_name(g), g});
  std::stable_sort(family.members.begin(), family.members.end(),
                   [](const NamedGraph& a, const NamedGraph& b) { return name_rank(a.name) < name_rank(b.name); });
  return family;
}

const PetersenFamily& default_family() {
  static const PetersenFamily family = petersen_family();
  return family;
}

Graph glue_vertex(const Graph& g1, int v1, const Graph& g2, int v2) {
  check_vertex(g1, v1);
  check_vertex(g2, v2);
  std::vector<int> map(static_cast<std::size_t>(g2.order()));
  int next = g1.order();
  for (int v = 0; v < g2.order(); ++v) map[static_cast<std::size_t>(v)] = v == v2 ? v1 : next++;
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back(make_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
  return Graph(next, std::move(edges));
}

Graph glue_pair(const Graph& g1, Edge x, const Graph& g2, Edge y, bool swap) {
  check_vertex(g1, x.u);
  check_vertex(g1, x.v);
  check_vertex(g2, y.u);
  check_vertex(g2, y.v);
  if (x.u == x.v || y.u == y.v) throw Error(Errc::BadVertices, "identified vertices must be distinct");
  std::vector<int> map(static_cast<std::size_t>(g2.order()));
  int next = g1.order();
  for (int v = 0; v < g2.order(); ++v) {
    if (v == y.u) {
      map[static_cast<std::size_t>(v)] = swap ? x.v : x.u;
    } else if (v == y.v) {
      map[static_cast<std::size_t>(v)] = swap ? x.u : x.v;
    } else {
      map[static_cast<std::size_t>(v)] = next++;
    }
  }
  const Edge removed = make_edge(x.u, x.v);
  std::set<Edge> edges;
  for (const Edge& e : g1.edges()) edges.insert(e);
  for (const Edge& e : g2.edges()) edges.insert(make_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
  edges.erase(removed);
  return Graph(next, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph glue_therefore(const MarkedGraph& m1, const MarkedGraph& m2, const std::array<int, 3>& matching) {
  for (const MarkedGraph* m : {&m1, &m2}) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (m->graph.adjacent(m->marks[i], m->marks[j])) throw Error(Errc::MarksNotIndependent, "marked vertices are adjacent");
      }
    }
  }
  std::array<int, 3> sorted = matching;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw Error(Errc::BadVertices, "mark matching is not a bijection");
  std::vector<int> map(static_cast<std::size_t>(m2.graph.order()), -1);
  for (std::size_t i = 0; i < 3; ++i) map[static_cast<std::size_t>(m2.marks[i])] = m1.marks[static_cast<std::size_t>(matching[i])];
  int next = m1.graph.order();
  for (auto& x : map) {
    if (x < 0) x = next++;
  }
  std::vector<Edge> edges(m1.graph.edges().begin(), m1.graph.edges().end());
  for (const Edge& e : m2.graph.edges()) edges.push_back(make_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
  return Graph(next, std::move(edges));
}

namespace {

struct Item {
  std::string member;
  const Graph* graph;
  int orbit;  // index within the member's orbit list
  Edge pair;  // representative pair (k = 2) or vertex in pair.u (k = 1)
  int vfn = 0;
};

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string base_of(const std::string& provenance) { return provenance.substr(0, provenance.rfind('/')); }

}  // namespace

Catalog build_catalog(int k, const PetersenFamily& family, int jobs) {
  if (k < 0 || k > 2) throw Error(Errc::BadVertices, "catalog connectivity must be 0, 1 or 2");
  const auto members = family.projective_planar();
  std::vector<Item> items;
  for (const auto& m : members) {
    if (k == 0) {
      items.push_back({m.name, &m.graph, 0, {}, 0});
      continue;
    }
    const OrbitTable table = orbits(m.graph);
    if (k == 1) {
      for (std::size_t o = 0; o < table.vertex_orbits.size(); ++o) {
        items.push_back({m.name, &m.graph, static_cast<int>(o), Edge{table.vertex_orbits[o].front(), 0}, 0});
      }
    } else {
      for (std::size_t o = 0; o < table.pair_orbits.size(); ++o) {
        items.push_back({m.name, &m.graph, static_cast<int>(o), table.pair_orbits[o].front(), table.vfn[o]});
      }
    }
  }
  Catalog cat;
  cat.k = k;
  cat.items = static_cast<int>(items.size());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i; j < items.size(); ++j) pairs.emplace_back(i, j);
  }
  // Each pair yields its candidates independently; the merge below runs in
  // pair order, so the catalog does not depend on `jobs`.
  struct Candidate {
    Graph graph;
    std::string provenance;
    CanonicalCode code;
    int connectivity = -1;
  };
  struct Outcome {
    int count = 1;
    std::vector<Candidate> candidates;
    std::optional<std::string> finding;
  };
  std::vector<Outcome> outcomes(pairs.size());
  const Limits wide{kMaxOrder, 64};
  auto finish = [&](Candidate& c) {
    c.code = canonical_code(c.graph, wide);
    c.connectivity = connectivity(c.graph, wide).k;
  };
  auto run = [&](std::size_t p) {
    const Item& a = items[pairs[p].first];
    const Item& b = items[pairs[p].second];
    Outcome& out = outcomes[p];
    if (k == 0) {
      out.candidates.push_back({disjoint_union(*a.graph, *b.graph), a.member + "+" + b.member, {}, -1});
    } else if (k == 1) {
      out.candidates.push_back({glue_vertex(*a.graph, a.pair.u, *b.graph, b.pair.u),
                                a.member + "[v" + std::to_string(a.pair.u) + "]." + b.member + "[v" +
                                    std::to_string(b.pair.u) + "]",
                                {},
                                -1});
    } else {
      out.count = gluing_count(a.vfn, b.vfn);
      const std::string base = a.member + "[" + edge_text(a.pair) + "]:" + b.member + "[" + edge_text(b.pair) + "]";
      out.candidates.push_back({glue_pair(*a.graph, a.pair, *b.graph, b.pair, false), base + "/straight", {}, -1});
      out.candidates.push_back({glue_pair(*a.graph, a.pair, *b.graph, b.pair, true), base + "/crossed", {}, -1});
    }
    for (auto& c : out.candidates) finish(c);
    if (k == 2) {
      const bool same = out.candidates[0].code == out.candidates[1].code;
      if (same != (out.count == 1)) {
        out.finding = base_of(out.candidates[0].provenance) + ": orientations are " +
                      (same ? "isomorphic" : "distinct") + " although the VFN product is " +
                      std::to_string(out.count - 1);
      }
      if (out.count == 1) out.candidates.pop_back();
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), pairs.size());
  if (workers <= 1) {
    for (std::size_t p = 0; p < pairs.size(); ++p) run(p);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t p = t; p < pairs.size(); p += workers) run(p);
      });
    }
  }

  std::map<CanonicalCode, std::size_t> index;
  for (auto& out : outcomes) {
    cat.formula_count += out.count;
    if (out.finding) cat.findings.push_back(*out.finding);
    for (auto& c : out.candidates) {
      if (auto it = index.find(c.code); it != index.end()) {
        cat.findings.push_back("duplicate class: " + c.provenance + " repeats " + cat.entries[it->second].provenance);
        continue;
      }
      index.emplace(c.code, cat.entries.size());
      if (c.connectivity != k) {
        cat.findings.push_back(c.provenance + " has connectivity " + std::to_string(c.connectivity));
      }
      cat.entries.push_back({std::move(c.code), std::move(c.graph), "k" + std::to_string(k), std::move(c.provenance),
                             c.connectivity});
    }
  }
  cat.constructed_count = static_cast<long long>(cat.entries.size());
  return cat;
}

std::vector<const ThereforeGluing*> ThereforeFamily::minimal_candidates() const {
  std::vector<const ThereforeGluing*> out;
  for (const auto& g : gluings) {
    if (!g.has_k44e_minor) out.push_back(&g);
  }
  return out;
}

const ThereforeGluing& ThereforeFamily::by_name(const std::string& name) const {
  for (const auto& g : gluings) {
    if (g.name == name) return g;
  }
  throw Error(Errc::Internal, "no ∴ gluing named " + name);
}

MarkedGraph k6_therefore() {
  const std::vector<int> parts{3, 1, 1, 1};
  return MarkedGraph(complete_multipartite(parts), {0, 1, 2});
}

ThereforeFamily therefore_family(const PetersenFamily& family) {
  ThereforeFamily tf;
  std::map<CanonicalCode, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto offer = [&](const MarkedGraph& m, const std::string& name) {
    if (seen.emplace(canonical_code(m), tf.members.size()).second) {
      if (std::find(tf.member_names.begin(), tf.member_names.end(), name) != tf.member_names.end()) {
        tf.findings.push_back("two marked classes share the name " + name);
      }
      queue.push_back(tf.members.size());
      tf.members.push_back(m);
      tf.member_names.push_back(name);
    }
  };
  offer(k6_therefore(), "K6");
  while (!queue.empty()) {
    const MarkedGraph m = tf.members[queue.front()];
    queue.pop_front();
    for (const auto& t : triangles(m.graph)) {
      const bool marked = std::any_of(t.begin(), t.end(), [&](int v) { return (m.mark_mask() >> v) & 1U; });
      offer(delta_y(m, t), "P" + std::to_string(m.graph.order() + 1) + (marked ? "B" : "A"));
    }
  }

  {
    std::vector<std::size_t> order(tf.members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(tf.members[a].graph.order(), tf.member_names[a]) <
             std::pair(tf.members[b].graph.order(), tf.member_names[b]);
    });
    std::vector<MarkedGraph> members;
    std::vector<std::string> names;
    for (std::size_t i : order) {
      members.push_back(tf.members[i]);
      names.push_back(tf.member_names[i]);
    }
    tf.members = std::move(members);
    tf.member_names = std::move(names);
  }

  const Graph& k44e = family.by_name("K44-e").graph;
  std::map<CanonicalCode, std::size_t> classes;
  const std::array<std::array<int, 3>, 6> bijections{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (std::size_t i = 0; i < tf.members.size(); ++i) {
    for (std::size_t j = i; j < tf.members.size(); ++j) {
      int config = 0;
      for (const auto& matching : bijections) {
        Graph g = glue_therefore(tf.members[i], tf.members[j], matching);
        CanonicalCode code = canonical_code(g);
        if (classes.contains(code)) continue;
        classes.emplace(code, tf.gluings.size());
        std::string name = tf.member_names[i] + "∴" + tf.member_names[j];
        if (++config > 1) name += "#" + std::to_string(config);
        const bool k44 = is_minor(k44e, g);
        tf.gluings.push_back({std::move(name), std::move(g), std::move(code), k44});
      }
    }
  }
  return tf;
}

Graph k44_minus_e() { return delete_edge(complete_bipartite(4, 4), Edge{0, 4}); }

Graph k7_minus_adjacent() { return delete_edge(delete_edge(complete_graph(7), Edge{4, 6}), Edge{5, 6}); }

Graph k7_minus_nonadjacent() { return delete_edge(delete_edge(complete_graph(7), Edge{3, 4}), Edge{5, 6}); }

std::vector<SporadicGraph> sporadic_graphs() {
  return {{"K44-e", k44_minus_e()}, {"K7-2e-adjacent", k7_minus_adjacent()}, {"K7-2e-nonadjacent", k7_minus_nonadjacent()}};
}

Reconciliation grand_total(const Catalog& k0, const Catalog& k1, const Catalog& k2, const ThereforeFamily& tf) {
  Reconciliation r;
  r.k0 = k0.formula_count;
  r.k1 = k1.formula_count;
  r.k2 = k2.formula_count;
  r.k0_constructed = k0.constructed_count;
  r.k1_constructed = k1.constructed_count;
  r.k2_constructed = k2.constructed_count;
  r.therefore_minimal = static_cast<long long>(tf.minimal_candidates().size());
  for (const auto& s : sporadic_graphs()) r.sporadic_names.push_back(s.name);
  r.sporadic = static_cast<long long>(r.sporadic_names.size());
  r.total = r.k0 + r.k1 + r.k2 + r.therefore_minimal;
  r.total_with_sporadic = r.total + r.sporadic;
  return r;
}

}  // namespace rp3
