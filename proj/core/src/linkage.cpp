#include "rp3/linkage.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <thread>

namespace rp3 {

RuleSet RuleSet::parse(const std::string& text) {
  RuleSet r{false, false, false};
  if (text == "none") return r;
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'A': r.a = true; break;
      case 'B': r.b = true; break;
      case 'C': r.c = true; break;
      default: throw Error(Errc::ParseError, std::string("unknown rule '") + ch + "'");
    }
  }
  return r;
}

std::string RuleSet::text() const {
  std::string out;
  if (a) out += 'A';
  if (b) out += 'B';
  if (c) out += 'C';
  return out.empty() ? "none" : out;
}

char rule_letter(const ForcingEvidence& e) { return "ABC"[e.index()]; }

namespace {

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string branch_text(const MinorModel& m) {
  std::string out;
  for (std::size_t p = 0; p < m.branch_sets.size(); ++p) {
    if (p) out += '|';
    out += join(m.branch_vertices(static_cast<int>(p)), ',');
  }
  return out;
}

}  // namespace

std::string describe(const ForcingEvidence& e) {
  if (const auto* a = std::get_if<RuleAEvidence>(&e)) return "A " + join(a->first, '-') + " / " + join(a->second, '-');
  if (const auto* b = std::get_if<RuleBEvidence>(&e)) {
    return "B " + b->member + " apex " + std::to_string(b->apex) + " branches " + branch_text(b->model);
  }
  const auto& c = std::get<RuleCEvidence>(e);
  return "C K6 subset " + join({c.subset.begin(), c.subset.end()}, ',') + " branches " + branch_text(c.model);
}

namespace {

// Independent re-evaluation: a cycle is 1-homologous iff it meets the edge
// weights of phi an odd number of times.
struct WeightEvaluator {
  const Graph& g;
  EdgeSet weights;

  explicit WeightEvaluator(const HomologyAssignment& phi) : g(phi.host()), weights(edge_weights(phi)) {}

  int value(const EdgeSet& c) const { return static_cast<int>((c & weights).count() % 2); }
};

std::optional<std::string> simple_cycle_edges(const Graph& g, const std::vector<int>& cyc, EdgeSet& out) {
  if (cyc.size() < 3) return "cycle shorter than 3";
  VertexMask seen = 0;
  for (int v : cyc) {
    if (v < 0 || v >= g.order()) return "cycle vertex out of range";
    if ((seen >> v) & 1U) return "cycle repeats vertex " + std::to_string(v);
    seen |= bit(v);
  }
  out = EdgeSet(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto idx = g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (!idx) return "cycle uses a missing edge";
    out.set(static_cast<std::size_t>(*idx));
  }
  return std::nullopt;
}

std::vector<int> tree_path(const Graph& host, const std::vector<int>& tree, int from, int to) {
  std::vector<int> prev_edge(static_cast<std::size_t>(host.order()), -1);
  std::vector<int> prev(static_cast<std::size_t>(host.order()), -1);
  std::vector<int> queue{from};
  VertexMask seen = bit(from);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (int idx : tree) {
      const Edge& e = host.edge(idx);
      const int y = e.u == x ? e.v : (e.v == x ? e.u : -1);
      if (y < 0 || ((seen >> y) & 1U)) continue;
      seen |= bit(y);
      prev[static_cast<std::size_t>(y)] = x;
      prev_edge[static_cast<std::size_t>(y)] = idx;
      queue.push_back(y);
    }
  }
  std::vector<int> out;
  if (((seen >> to) & 1U) == 0) throw Error(Errc::ModelInvalid, "branch tree does not connect its attachment points");
  for (int v = to; v != from; v = prev[static_cast<std::size_t>(v)]) out.push_back(prev_edge[static_cast<std::size_t>(v)]);
  return out;
}

// Lift of a pattern cycle given as a vertex sequence: each pattern edge
// becomes its mapped host edge, and consecutive attachment points inside a
// branch set are joined by their branch-tree path.
EdgeSet walk_lift(const MinorModel& m, const std::vector<int>& pattern_cycle) {
  const Graph& host = *m.host;
  const Graph& pattern = *m.pattern;
  const std::size_t k = pattern_cycle.size();
  std::vector<int> mapped(k);
  EdgeSet out(static_cast<std::size_t>(host.size()));
  for (std::size_t i = 0; i < k; ++i) {
    const int j = pattern.edge_index_or_throw(pattern_cycle[i], pattern_cycle[(i + 1) % k]);
    mapped[i] = m.edge_map[static_cast<std::size_t>(j)];
    out.flip(static_cast<std::size_t>(mapped[i]));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const int p = pattern_cycle[i];
    const VertexMask b = m.branch_sets[static_cast<std::size_t>(p)];
    auto inside = [&](int idx) {
      const Edge& e = host.edge(idx);
      return ((b >> e.u) & 1U) ? e.u : e.v;
    };
    const int entry = inside(mapped[(i + k - 1) % k]);
    const int exit = inside(mapped[i]);
    if (entry == exit) continue;
    for (int idx : tree_path(host, m.branch_trees[static_cast<std::size_t>(p)], entry, exit)) {
      out.flip(static_cast<std::size_t>(idx));
    }
  }
  return out;
}

std::optional<std::string> check_model_kills(const WeightEvaluator& eval, const MinorModel& m, VertexMask pattern_keep) {
  const Graph& pattern = *m.pattern;
  std::vector<int> old_of_new;
  const Graph sub = induced_subgraph(pattern, pattern_keep, &old_of_new);
  for (const auto& c : all_simple_cycles(sub, Limits{kMaxOrder, 64})) {
    std::vector<int> cyc;
    for (int v : c.vertices) cyc.push_back(old_of_new[static_cast<std::size_t>(v)]);
    if (eval.value(walk_lift(m, cyc)) != 0) return "lifted cycle " + join(cyc, '-') + " is 1-homologous";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_evidence(const HomologyAssignment& phi, const ForcingEvidence& evidence,
                                          const PetersenFamily& family) {
  const WeightEvaluator eval(phi);
  const Graph& g = phi.host();
  if (const auto* a = std::get_if<RuleAEvidence>(&evidence)) {
    EdgeSet c1;
    EdgeSet c2;
    if (auto err = simple_cycle_edges(g, a->first, c1)) return "rule A first cycle: " + *err;
    if (auto err = simple_cycle_edges(g, a->second, c2)) return "rule A second cycle: " + *err;
    for (int x : a->first) {
      if (std::find(a->second.begin(), a->second.end(), x) != a->second.end()) return "rule A cycles share a vertex";
    }
    if (eval.value(c1) != 1 || eval.value(c2) != 1) return "rule A cycle is not 1-homologous";
    return std::nullopt;
  }
  const MinorModel& model =
      std::holds_alternative<RuleBEvidence>(evidence) ? std::get<RuleBEvidence>(evidence).model : std::get<RuleCEvidence>(evidence).model;
  if (!model.host || !(*model.host == g)) return "model host differs from the assignment's host";
  try {
    validate_model(model);
  } catch (const Error& e) {
    return e.what();
  }
  if (const auto* b = std::get_if<RuleBEvidence>(&evidence)) {
    const Graph* member = nullptr;
    for (const auto& m : family.members) {
      if (m.name == b->member) member = &m.graph;
    }
    if (member == nullptr) return "unknown family member " + b->member;
    if (!is_isomorphic(*member, *model.pattern)) return "pattern is not " + b->member;
    if (b->apex < 0 || b->apex >= model.pattern->order()) return "apex out of range";
    try {
      return check_model_kills(eval, model, model.pattern->all_vertices() & ~bit(b->apex));
    } catch (const Error& e) {
      return e.what();
    }
  }
  const auto& c = std::get<RuleCEvidence>(evidence);
  if (!(*model.pattern == complete_graph(6))) return "rule C pattern is not K6";
  VertexMask keep = 0;
  for (int v : c.subset) {
    if (v < 0 || v >= 6) return "rule C subset vertex out of range";
    keep |= bit(v);
  }
  if (popcount(keep) != 4) return "rule C subset does not have 4 vertices";
  try {
    return check_model_kills(eval, model, keep);
  } catch (const Error& e) {
    return e.what();
  }
}

namespace {

// Fully reduced row echelon form, rows in decreasing pivot order; equal
// subspaces give equal vectors.
std::vector<std::uint64_t> reduced_basis(std::vector<std::uint64_t> rows) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t r : rows) {
    for (std::uint64_t b : basis) {
      const int pivot = 63 - std::countl_zero(b);
      if ((r >> pivot) & 1U) r ^= b;
    }
    if (r == 0) continue;
    const int pivot = 63 - std::countl_zero(r);
    for (auto& b : basis) {
      if ((b >> pivot) & 1U) b ^= r;
    }
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

}  // namespace

Engine::Engine(const Graph& g, const PetersenFamily& family, const EngineOptions& options)
    : space_(std::make_shared<const CycleSpace>(g)), family_(family), options_(options) {
  check_order(g, options_.limits);
  if (options_.rules.a) build_rule_a();
  if (options_.rules.b || options_.rules.c) build_rules_bc();
}

void Engine::build_rule_a() {
  const Graph& g = graph();
  auto cycles = chordless_cycles(g, options_.limits);
  std::sort(cycles.begin(), cycles.end(), [](const SimpleCycle& x, const SimpleCycle& y) {
    return std::pair(x.length(), x.vertices) < std::pair(y.length(), y.vertices);
  });
  std::vector<VertexMask> masks;
  for (const auto& c : cycles) {
    cycles_.push_back(c.vertices);
    cycle_coords_.push_back(space_->coordinates(c.edges));
    masks.push_back(c.vertex_mask);
  }
  for (std::uint32_t i = 0; i < cycles_.size(); ++i) {
    for (std::uint32_t j = i + 1; j < cycles_.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) pairs_.emplace_back(i, j);
    }
  }
  std::stable_sort(pairs_.begin(), pairs_.end(), [&](const auto& x, const auto& y) {
    return cycles_[x.first].size() + cycles_[x.second].size() < cycles_[y.first].size() + cycles_[y.second].size();
  });
  stats_.cycles = cycles_.size();
  stats_.disjoint_pairs = pairs_.size();
}

void Engine::build_rules_bc() {
  const Graph& g = graph();
  auto host = std::make_shared<const Graph>(g);
  std::map<std::vector<std::uint64_t>, bool> seen_b;
  std::map<std::vector<std::uint64_t>, bool> seen_c;
  ModelSearchOptions search;
  search.limits = options_.limits;
  for (std::size_t mi = 0; mi < family_.members.size(); ++mi) {
    const auto& member = family_.members[mi];
    const bool is_k6 = member.name == "K6";
    if (!options_.rules.b && !(options_.rules.c && is_k6)) continue;
    const Graph& pattern = member.graph;
    // Cycle bases of P - v, and K4 triangle bases, as pattern edge lists.
    std::vector<std::vector<std::vector<int>>> apex_bases;
    if (options_.rules.b) {
      for (int v = 0; v < pattern.order(); ++v) {
        std::vector<int> old_of_new;
        const Graph sub = induced_subgraph(pattern, pattern.all_vertices() & ~bit(v), &old_of_new);
        std::vector<std::vector<int>> basis;
        for (const auto& c : cycle_basis(sub)) {
          std::vector<int> edges;
          for (auto e = c.find_first(); e != EdgeSet::npos; e = c.find_next(e)) {
            const Edge& se = sub.edge(static_cast<int>(e));
            edges.push_back(pattern.edge_index_or_throw(old_of_new[static_cast<std::size_t>(se.u)],
                                                        old_of_new[static_cast<std::size_t>(se.v)]));
          }
          basis.push_back(std::move(edges));
        }
        apex_bases.push_back(std::move(basis));
      }
    }
    std::vector<std::array<int, 4>> subsets;
    std::vector<std::vector<std::vector<int>>> subset_triangles;
    if (options_.rules.c && is_k6) {
      auto tri = [&](int x, int y, int z) {
        return std::vector<int>{pattern.edge_index_or_throw(x, y), pattern.edge_index_or_throw(x, z),
                                pattern.edge_index_or_throw(y, z)};
      };
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          for (int c = b + 1; c < 6; ++c)
            for (int d = c + 1; d < 6; ++d) {
              subsets.push_back({a, b, c, d});
              subset_triangles.push_back({tri(a, b, c), tri(a, b, d), tri(a, c, d)});
            }
    }
    auto rows_of = [](const std::vector<std::vector<int>>& basis, const std::vector<std::uint64_t>& edge_coords) {
      std::vector<std::uint64_t> rows;
      for (const auto& c : basis) {
        std::uint64_t r = 0;
        for (int j : c) r ^= edge_coords[static_cast<std::size_t>(j)];
        rows.push_back(r);
      }
      return reduced_basis(std::move(rows));
    };
    std::size_t count = 0;
    for_each_minor_model(
        pattern, g,
        [&](const MinorModel& model) {
          ++count;
          bool stored = false;
          auto store_model = [&]() {
            if (!stored) {
              models_.push_back(model);
              models_.back().host = host;
              stored = true;
            }
            return static_cast<std::uint32_t>(models_.size() - 1);
          };
          const auto edge_coords = lifted_edge_coordinates(model);
          for (int v = 0; v < static_cast<int>(apex_bases.size()); ++v) {
            auto key = rows_of(apex_bases[static_cast<std::size_t>(v)], edge_coords);
            if (seen_b.emplace(key, true).second) {
              b_table_.push_back({std::move(key), store_model(), static_cast<int>(mi), v, {}});
            }
          }
          for (std::size_t s = 0; s < subsets.size(); ++s) {
            auto key = rows_of(subset_triangles[s], edge_coords);
            if (seen_c.emplace(key, true).second) {
              c_table_.push_back({std::move(key), store_model(), static_cast<int>(mi), -1, subsets[s]});
            }
          }
          return true;
        },
        search);
    stats_.models[member.name] = count;
  }
  stats_.b_subspaces = b_table_.size();
  stats_.c_subspaces = c_table_.size();
}

// Lifting is linear: a pattern edge contributes its mapped host edge plus the
// root paths of both endpoints in their branch trees, and root paths cancel in
// pairs along a cycle. Each contribution is kept in cycle-space coordinates.
std::vector<std::uint64_t> Engine::lifted_edge_coordinates(const MinorModel& model) const {
  const Graph& host = graph();
  auto coord_bit = [&](int idx) {
    const int c = space_->coordinate(idx);
    return c < 0 ? std::uint64_t{0} : std::uint64_t{1} << c;
  };
  std::vector<std::uint64_t> root_path(static_cast<std::size_t>(host.order()), 0);
  for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
    const auto& tree = model.branch_trees[p];
    VertexMask reached = bit(lowest_vertex(model.branch_sets[p]));
    for (std::size_t round = 0; round < tree.size(); ++round) {
      for (int idx : tree) {
        const Edge& e = host.edge(idx);
        const bool has_u = (reached >> e.u) & 1U;
        const bool has_v = (reached >> e.v) & 1U;
        if (has_u == has_v) continue;
        const int from = has_u ? e.u : e.v;
        const int to = has_u ? e.v : e.u;
        root_path[static_cast<std::size_t>(to)] = root_path[static_cast<std::size_t>(from)] ^ coord_bit(idx);
        reached |= bit(to);
      }
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(model.edge_map.size());
  for (int h : model.edge_map) {
    const Edge& e = host.edge(h);
    out.push_back(coord_bit(h) ^ root_path[static_cast<std::size_t>(e.u)] ^ root_path[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

bool Engine::killed(const Subspace& s, std::uint64_t phi) {
  for (std::uint64_t r : s.rows) {
    if (parity(phi & r)) return false;
  }
  return true;
}

Engine::Ref Engine::rule_a(std::uint64_t phi) const {
  if (!options_.rules.a) return {};
  std::vector<bool> one(cycles_.size());
  for (std::size_t i = 0; i < cycles_.size(); ++i) one[i] = parity(phi & cycle_coords_[i]) != 0;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (one[pairs_[p].first] && one[pairs_[p].second]) return {'A', static_cast<std::uint32_t>(p)};
  }
  return {};
}

Engine::Ref Engine::rule_b(std::uint64_t phi) const {
  if (!options_.rules.b) return {};
  for (std::size_t i = 0; i < b_table_.size(); ++i) {
    if (killed(b_table_[i], phi)) return {'B', static_cast<std::uint32_t>(i)};
  }
  return {};
}

Engine::Ref Engine::rule_c(std::uint64_t phi) const {
  if (!options_.rules.c) return {};
  for (std::size_t i = 0; i < c_table_.size(); ++i) {
    if (killed(c_table_[i], phi)) return {'C', static_cast<std::uint32_t>(i)};
  }
  return {};
}

Engine::Ref Engine::force(std::uint64_t phi) const {
  if (Ref r = rule_a(phi); r.rule) return r;
  if (Ref r = rule_c(phi); r.rule) return r;
  return rule_b(phi);
}

ForcingEvidence Engine::materialize(Ref ref) const {
  switch (ref.rule) {
    case 'A': {
      const auto& [i, j] = pairs_.at(ref.index);
      return RuleAEvidence{cycles_[i], cycles_[j]};
    }
    case 'B': {
      const Subspace& s = b_table_.at(ref.index);
      return RuleBEvidence{family_.members[static_cast<std::size_t>(s.member)].name, models_[s.model], s.apex};
    }
    case 'C': {
      const Subspace& s = c_table_.at(ref.index);
      return RuleCEvidence{models_[s.model], s.subset};
    }
    default: throw Error(Errc::Internal, "no evidence for an unforced assignment");
  }
}

std::string to_string(Verdict v) { return v == Verdict::Certified ? "CERTIFIED" : "UNDECIDED"; }

Certificate certify(const Engine& engine) {
  const auto start = std::chrono::steady_clock::now();
  const auto& options = engine.options();
  const std::uint64_t n = assignment_count(*engine.space(), options.limits);
  Certificate cert;
  const Limits wide{kMaxOrder, 64};
  const CanonicalForm canon = canonical_form(engine.graph(), {}, wide);
  cert.code = canon.code;
  cert.graph = engine.graph();
  cert.rules = options.rules;
  cert.dim = engine.space()->dim();
  cert.assignments = n;
  cert.jobs = std::max(1, options.jobs);
  cert.evidence.resize(n);

  const auto jobs = static_cast<std::uint64_t>(cert.jobs);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t phi = lo; phi < hi; ++phi) cert.evidence[phi] = engine.force(phi);
  };
  if (jobs == 1 || n < 2 * jobs) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < jobs; ++t) pool.emplace_back(work, n * t / jobs, n * (t + 1) / jobs);
  }

  for (char r : {'A', 'B', 'C', 'U'}) cert.counts[r] = 0;
  // Values on the canonical host's basis are a fixed linear map of phi.
  const Graph target = relabel(engine.graph(), canon.labeling);
  const CycleSpace target_space(target);
  std::vector<int> old_of_new(canon.labeling.size());
  for (std::size_t v = 0; v < canon.labeling.size(); ++v) old_of_new[static_cast<std::size_t>(canon.labeling[v])] = static_cast<int>(v);
  std::vector<std::uint64_t> rows;
  for (const auto& c : target_space.basis()) {
    EdgeSet host_c(static_cast<std::size_t>(engine.graph().size()));
    for (auto e = c.find_first(); e != EdgeSet::npos; e = c.find_next(e)) {
      const Edge& te = target.edge(static_cast<int>(e));
      host_c.set(static_cast<std::size_t>(engine.graph().edge_index_or_throw(old_of_new[static_cast<std::size_t>(te.u)],
                                                                              old_of_new[static_cast<std::size_t>(te.v)])));
    }
    rows.push_back(engine.space()->coordinates(host_c));
  }
  const std::string prefix = to_hex(canon.code) + ":";
  for (std::uint64_t phi = 0; phi < n; ++phi) {
    const Engine::Ref r = cert.evidence[phi];
    if (r.rule) {
      ++cert.counts[r.rule];
      continue;
    }
    ++cert.counts['U'];
    cert.unforced.push_back(phi);
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) moved |= static_cast<std::uint64_t>(parity(phi & rows[i])) << i;
    cert.unforced_serialized.push_back(prefix + values_hex(moved, cert.dim));
  }
  cert.verdict = cert.unforced.empty() ? Verdict::Certified : Verdict::Undecided;
  cert.stats = engine.stats();
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

Certificate certify(const Graph& g, const PetersenFamily& family, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Engine engine(g, family, options);
  Certificate cert = certify(engine);
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::size_t validate_certificate(const Certificate& cert, const Engine& engine, const PetersenFamily& family,
                                 std::string* first_failure) {
  std::size_t failures = 0;
  for (std::uint64_t phi = 0; phi < cert.evidence.size(); ++phi) {
    const Engine::Ref r = cert.evidence[phi];
    if (!r.rule) continue;
    const HomologyAssignment a(engine.space(), phi);
    if (auto err = check_evidence(a, engine.materialize(r), family)) {
      if (failures++ == 0 && first_failure) *first_failure = "assignment " + std::to_string(phi) + ": " + *err;
    }
  }
  return failures;
}

namespace {

std::optional<ForcingEvidence> single(const HomologyAssignment& phi, const PetersenFamily& family, RuleSet rules) {
  EngineOptions options;
  options.rules = rules;
  options.limits = Limits{kMaxOrder, 64};
  Engine engine(phi.host(), family, options);
  // The engine builds its own space for the same graph, so basis values carry over.
  const Engine::Ref r = engine.force(phi.values());
  if (!r.rule) return std::nullopt;
  return engine.materialize(r);
}

}  // namespace

std::optional<ForcingEvidence> rule_a(const HomologyAssignment& phi) {
  return single(phi, default_family(), RuleSet{true, false, false});
}

std::optional<ForcingEvidence> rule_b(const HomologyAssignment& phi, const PetersenFamily& family) {
  return single(phi, family, RuleSet{false, true, false});
}

std::optional<ForcingEvidence> rule_c(const HomologyAssignment& phi) {
  return single(phi, default_family(), RuleSet{false, false, true});
}

MinimalityReport minimality_scan(const Graph& g, const PetersenFamily& family, const EngineOptions& options) {
  MinimalityReport report;
  report.code = canonical_code(g, options.limits);
  const auto group = automorphism_group(g, {}, options.limits);
  const auto orbits = edge_orbits(g, group);
  report.edge_orbits = static_cast<int>(orbits.size());
  for (const auto& orbit : orbits) {
    const Edge e = g.edge(orbit.front());
    for (const char* op : {"delete", "contract"}) {
      const Graph minor = std::string(op) == "delete" ? delete_edge(g, e) : contract_edge(g, e);
      const Certificate cert = certify(minor, family, options);
      MinimalityItem item{e, static_cast<int>(orbit.size()), op, cert.verdict, cert.counts.at('U'), cert.assignments};
      report.engine_minimal = report.engine_minimal && item.verdict == Verdict::Undecided;
      report.items.push_back(item);
    }
  }
  return report;
}

}  // namespace rp3
