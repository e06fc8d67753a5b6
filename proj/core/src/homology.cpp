#include "rp3/homology.hpp"

#include <algorithm>

#include "rp3/canon.hpp"

namespace rp3 {

EdgeSet edge_set(const Graph& g, std::span<const int> edge_indices) {
  EdgeSet out(static_cast<std::size_t>(g.size()));
  for (int e : edge_indices) out.flip(static_cast<std::size_t>(e));
  return out;
}

EdgeSet cycle_edges(const Graph& g, std::span<const int> vertices) {
  EdgeSet out(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int a = vertices[i];
    const int b = vertices[(i + 1) % vertices.size()];
    out.flip(static_cast<std::size_t>(g.edge_index_or_throw(a, b)));
  }
  return out;
}

bool is_even(const Graph& g, const EdgeSet& c) {
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (auto i = c.find_first(); i != EdgeSet::npos; i = c.find_next(i)) {
    const Edge& e = g.edge(static_cast<int>(i));
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; });
}

CycleSpace::CycleSpace(Graph g) : graph_(std::move(g)) {
  const int n = graph_.order();
  const auto m = static_cast<std::size_t>(graph_.size());
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> tree(m, false);
  VertexMask seen = 0;
  for (int root = 0; root < n; ++root) {
    if ((seen >> root) & 1U) continue;
    seen |= bit(root);
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (VertexMask nb = graph_.neighbors(x) & ~seen; nb != 0; nb &= nb - 1) {
        const int y = lowest_vertex(nb);
        seen |= bit(y);
        parent[static_cast<std::size_t>(y)] = x;
        parent_edge[static_cast<std::size_t>(y)] = graph_.edge_index_or_throw(x, y);
        tree[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(y)])] = true;
        queue.push_back(y);
      }
    }
  }
  coordinate_.assign(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    if (tree[e]) continue;
    coordinate_[e] = static_cast<int>(non_tree_.size());
    non_tree_.push_back(static_cast<int>(e));
  }
  if (non_tree_.size() > 64) {
    throw Error(Errc::DimensionExceeded,
                "cycle space dimension " + std::to_string(non_tree_.size()) + " exceeds 64-bit coordinates");
  }
  auto root_path = [&](int v) {
    EdgeSet path(m);
    for (; parent[static_cast<std::size_t>(v)] >= 0; v = parent[static_cast<std::size_t>(v)]) {
      path.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)]));
    }
    return path;
  };
  for (int e : non_tree_) {
    const Edge& edge = graph_.edge(e);
    EdgeSet c = root_path(edge.u) ^ root_path(edge.v);
    c.set(static_cast<std::size_t>(e));
    basis_.push_back(std::move(c));
  }
}

std::uint64_t CycleSpace::coordinates(const EdgeSet& c) const {
  if (c.size() != static_cast<std::size_t>(graph_.size())) throw Error(Errc::NotACycle, "edge set sized for another graph");
  if (!is_even(graph_, c)) throw Error(Errc::NotACycle, "some vertex has odd degree");
  std::uint64_t coords = 0;
  for (auto i = c.find_first(); i != EdgeSet::npos; i = c.find_next(i)) {
    const int k = coordinate_[i];
    if (k >= 0) coords |= std::uint64_t{1} << k;
  }
  return coords;
}

EdgeSet CycleSpace::element(std::uint64_t coords) const {
  EdgeSet out(static_cast<std::size_t>(graph_.size()));
  for (int i = 0; i < dim(); ++i) {
    if ((coords >> i) & 1U) out ^= basis_[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<EdgeSet> cycle_basis(const Graph& g) {
  CycleSpace space(g);
  return {space.basis().begin(), space.basis().end()};
}

std::vector<SimpleCycle> all_simple_cycles(const Graph& g, const Limits& limits, std::size_t max_cycles) {
  check_order(g, limits);
  std::vector<SimpleCycle> out;
  std::vector<int> path;
  const int n = g.order();
  for (int start = 0; start < n; ++start) {
    const VertexMask allowed = g.all_vertices() & ~(bit(start + 1) - 1);
    path.assign(1, start);
    auto extend = [&](auto&& self, VertexMask on_path) -> void {
      const int tail = path.back();
      for (VertexMask nb = g.neighbors(tail); nb != 0; nb &= nb - 1) {
        const int next = lowest_vertex(nb);
        if (next == start) {
          if (path.size() >= 3 && path[1] < path.back()) {
            if (out.size() >= max_cycles) throw Error(Errc::SizeExceeded, "simple cycle count exceeds cutoff");
            SimpleCycle c;
            c.vertices = path;
            c.edges = cycle_edges(g, path);
            c.vertex_mask = on_path;
            out.push_back(std::move(c));
          }
          continue;
        }
        if (((allowed >> next) & 1U) == 0 || ((on_path >> next) & 1U) != 0) continue;
        path.push_back(next);
        self(self, on_path | bit(next));
        path.pop_back();
      }
    };
    extend(extend, bit(start));
  }
  return out;
}

std::vector<SimpleCycle> chordless_cycles(const Graph& g, const Limits& limits) {
  auto cycles = all_simple_cycles(g, limits);
  std::vector<SimpleCycle> out;
  for (auto& c : cycles) {
    int induced = 0;
    for (int v : c.vertices) induced += popcount(g.neighbors(v) & c.vertex_mask);
    if (induced / 2 == c.length()) out.push_back(std::move(c));
  }
  return out;
}

HomologyAssignment::HomologyAssignment(std::shared_ptr<const CycleSpace> space, std::uint64_t values)
    : space_(std::move(space)), values_(values) {
  const int d = space_->dim();
  if (d < 64 && (values_ >> d) != 0) throw Error(Errc::DimensionExceeded, "assignment has bits beyond the cycle-space dimension");
}

std::uint64_t assignment_count(const CycleSpace& space, const Limits& limits) {
  if (space.dim() > limits.max_dim || space.dim() >= 63) {
    throw Error(Errc::DimensionExceeded, "cycle space dimension " + std::to_string(space.dim()) + " exceeds cap " +
                                             std::to_string(limits.max_dim));
  }
  return std::uint64_t{1} << space.dim();
}

void enumerate_assignments(const std::shared_ptr<const CycleSpace>& space,
                           const std::function<bool(const HomologyAssignment&)>& visit, const Limits& limits) {
  const std::uint64_t count = assignment_count(*space, limits);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!visit(HomologyAssignment(space, i))) return;
  }
}

int evaluate(const HomologyAssignment& phi, const EdgeSet& c) {
  return parity(phi.values() & phi.space().coordinates(c));
}

HomologyAssignment from_edge_weights(const std::shared_ptr<const CycleSpace>& space, const EdgeSet& weights) {
  std::uint64_t values = 0;
  for (int i = 0; i < space->dim(); ++i) {
    if ((space->basis()[static_cast<std::size_t>(i)] & weights).count() % 2 == 1) values |= std::uint64_t{1} << i;
  }
  return HomologyAssignment(space, values);
}

EdgeSet edge_weights(const HomologyAssignment& phi) {
  EdgeSet w(static_cast<std::size_t>(phi.host().size()));
  for (int i = 0; i < phi.dim(); ++i) {
    if (phi.value(i)) w.set(static_cast<std::size_t>(phi.space().edge_of_coordinate(i)));
  }
  return w;
}

EdgeSet lift(const MinorModel& model, const EdgeSet& pattern_element) {
  const Graph& host = *model.host;
  const Graph& pattern = *model.pattern;
  if (pattern_element.size() != static_cast<std::size_t>(pattern.size())) {
    throw Error(Errc::ModelInvalid, "pattern edge set sized for another graph");
  }
  EdgeSet out(static_cast<std::size_t>(host.size()));
  // Attachment points per branch set, with multiplicity mod 2.
  VertexMask terminals = 0;
  for (auto j = pattern_element.find_first(); j != EdgeSet::npos; j = pattern_element.find_next(j)) {
    const int h = model.edge_map[j];
    out.flip(static_cast<std::size_t>(h));
    const Edge& he = host.edge(h);
    terminals ^= bit(he.u) ^ bit(he.v);
  }
  for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
    const VertexMask in_branch = terminals & model.branch_sets[p];
    if (in_branch == 0) continue;
    const auto& tree = model.branch_trees[p];
    // Root the tree at the lowest vertex; the T-join is the XOR of root paths.
    const int root = lowest_vertex(model.branch_sets[p]);
    std::vector<int> parent(static_cast<std::size_t>(host.order()), -1);
    std::vector<int> via(static_cast<std::size_t>(host.order()), -1);
    std::vector<int> queue{root};
    VertexMask seen = bit(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (int idx : tree) {
        const Edge& e = host.edge(idx);
        int y = -1;
        if (e.u == x) y = e.v;
        if (e.v == x) y = e.u;
        if (y < 0 || ((seen >> y) & 1U)) continue;
        seen |= bit(y);
        parent[static_cast<std::size_t>(y)] = x;
        via[static_cast<std::size_t>(y)] = idx;
        queue.push_back(y);
      }
    }
    for (VertexMask t = in_branch; t != 0; t &= t - 1) {
      for (int v = lowest_vertex(t); v != root; v = parent[static_cast<std::size_t>(v)]) {
        out.flip(static_cast<std::size_t>(via[static_cast<std::size_t>(v)]));
      }
    }
  }
  return out;
}

HomologyAssignment pullback(const HomologyAssignment& phi, const MinorModel& model) {
  validate_model(model);
  if (!(*model.host == phi.host())) throw Error(Errc::ModelInvalid, "model host differs from the assignment's host");
  auto space = std::make_shared<const CycleSpace>(*model.pattern);
  std::uint64_t values = 0;
  for (int i = 0; i < space->dim(); ++i) {
    if (evaluate(phi, lift(model, space->basis()[static_cast<std::size_t>(i)]))) values |= std::uint64_t{1} << i;
  }
  return HomologyAssignment(space, values);
}

namespace {

HomologyAssignment evaluate_on_basis_of(const HomologyAssignment& phi, const Graph& target,
                                        std::span<const int> host_vertex_of) {
  auto space = std::make_shared<const CycleSpace>(target);
  const Graph& host = phi.host();
  std::uint64_t values = 0;
  for (int i = 0; i < space->dim(); ++i) {
    EdgeSet c(static_cast<std::size_t>(host.size()));
    const auto& basis_cycle = space->basis()[static_cast<std::size_t>(i)];
    for (auto e = basis_cycle.find_first(); e != EdgeSet::npos; e = basis_cycle.find_next(e)) {
      const Edge& te = target.edge(static_cast<int>(e));
      c.flip(static_cast<std::size_t>(host.edge_index_or_throw(host_vertex_of[static_cast<std::size_t>(te.u)],
                                                               host_vertex_of[static_cast<std::size_t>(te.v)])));
    }
    if (evaluate(phi, c)) values |= std::uint64_t{1} << i;
  }
  return HomologyAssignment(space, values);
}

}  // namespace

HomologyAssignment transport(const HomologyAssignment& phi, std::span<const int> perm) {
  const Graph target = relabel(phi.host(), perm);
  std::vector<int> old_of_new(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) old_of_new[static_cast<std::size_t>(perm[v])] = static_cast<int>(v);
  return evaluate_on_basis_of(phi, target, old_of_new);
}

HomologyAssignment restrict_to(const HomologyAssignment& phi, VertexMask keep) {
  std::vector<int> old_of_new;
  const Graph sub = induced_subgraph(phi.host(), keep, &old_of_new);
  return evaluate_on_basis_of(phi, sub, old_of_new);
}

std::string values_hex(std::uint64_t values, int dim) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = std::max(1, (dim + 3) / 4);
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int i = 0; i < digits; ++i) {
    out[static_cast<std::size_t>(digits - 1 - i)] = kDigits[(values >> (4 * i)) & 15U];
  }
  return out;
}

std::string serialize(const HomologyAssignment& phi) {
  const Limits wide{kMaxOrder, 64};
  const auto canon = canonical_form(phi.host(), {}, wide);
  const auto moved = transport(phi, canon.labeling);
  return to_hex(canon.code) + ":" + values_hex(moved.values(), moved.dim());
}

HomologyAssignment deserialize(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::ParseError, "assignment needs '<code>:<values>'");
  auto space = std::make_shared<const CycleSpace>(graph_from_code(from_hex(text.substr(0, colon))));
  const std::string hex = text.substr(colon + 1);
  if (hex.empty() || hex.size() > 16) throw Error(Errc::ParseError, "bad assignment value field");
  std::uint64_t values = 0;
  for (char c : hex) {
    int d = 0;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else {
      throw Error(Errc::ParseError, std::string("bad hex digit '") + c + "'");
    }
    values = (values << 4) | static_cast<std::uint64_t>(d);
  }
  return HomologyAssignment(space, values);
}

}  // namespace rp3
