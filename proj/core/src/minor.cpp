#include "rp3/minor.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace rp3 {

std::vector<int> MinorModel::branch_vertices(int pattern_vertex) const {
  std::vector<int> out;
  for (VertexMask m = branch_sets[static_cast<std::size_t>(pattern_vertex)]; m != 0; m &= m - 1) {
    out.push_back(lowest_vertex(m));
  }
  return out;
}

std::vector<int> MinorModel::owner() const {
  std::vector<int> out(static_cast<std::size_t>(host->order()), -1);
  for (std::size_t p = 0; p < branch_sets.size(); ++p) {
    for (VertexMask m = branch_sets[p]; m != 0; m &= m - 1) out[static_cast<std::size_t>(lowest_vertex(m))] = static_cast<int>(p);
  }
  return out;
}

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(Errc::ModelInvalid, why); }

VertexMask neighborhood(const Graph& g, VertexMask set) {
  VertexMask out = 0;
  for (VertexMask m = set; m != 0; m &= m - 1) out |= g.neighbors(lowest_vertex(m));
  return out & ~set;
}

}  // namespace

std::vector<int> bfs_tree(const Graph& host, VertexMask branch) {
  std::vector<int> tree;
  if (branch == 0) invalid("empty branch set");
  const int root = lowest_vertex(branch);
  VertexMask seen = bit(root);
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (VertexMask m = host.neighbors(x) & branch & ~seen; m != 0; m &= m - 1) {
      const int y = lowest_vertex(m);
      seen |= bit(y);
      queue.push_back(y);
      tree.push_back(host.edge_index_or_throw(x, y));
    }
  }
  if (seen != branch) invalid("branch set is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

void validate_model(const MinorModel& m) {
  if (!m.host || !m.pattern) invalid("missing host or pattern");
  const Graph& host = *m.host;
  const Graph& pattern = *m.pattern;
  const auto k = static_cast<std::size_t>(pattern.order());
  if (m.branch_sets.size() != k || m.branch_trees.size() != k) invalid("one branch set and tree per pattern vertex required");
  if (m.edge_map.size() != static_cast<std::size_t>(pattern.size())) invalid("one mapped edge per pattern edge required");
  VertexMask used = 0;
  for (std::size_t p = 0; p < k; ++p) {
    const VertexMask b = m.branch_sets[p];
    if (b == 0) invalid("branch set " + std::to_string(p) + " is empty");
    if ((b & ~host.all_vertices()) != 0) invalid("branch set " + std::to_string(p) + " leaves the host");
    if ((b & used) != 0) invalid("branch sets overlap at pattern vertex " + std::to_string(p));
    used |= b;
    const auto& tree = m.branch_trees[p];
    if (static_cast<int>(tree.size()) != popcount(b) - 1) invalid("tree of branch set " + std::to_string(p) + " has wrong size");
    VertexMask touched = 0;
    // Union-find over the branch vertices: |B|-1 edges without a cycle span B.
    std::vector<int> parent(static_cast<std::size_t>(host.order()));
    for (int v = 0; v < host.order(); ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int idx : tree) {
      if (idx < 0 || idx >= host.size()) invalid("tree edge index out of range");
      const Edge& e = host.edge(idx);
      if (((b >> e.u) & 1U) == 0 || ((b >> e.v) & 1U) == 0) invalid("tree edge leaves branch set " + std::to_string(p));
      const int ru = find(e.u);
      const int rv = find(e.v);
      if (ru == rv) invalid("tree of branch set " + std::to_string(p) + " has a cycle");
      parent[static_cast<std::size_t>(ru)] = rv;
      touched |= bit(e.u) | bit(e.v);
    }
    if (popcount(b) > 1 && touched != b) invalid("tree does not span branch set " + std::to_string(p));
  }
  std::vector<int> seen_host_edges;
  for (int j = 0; j < pattern.size(); ++j) {
    const int idx = m.edge_map[static_cast<std::size_t>(j)];
    if (idx < 0 || idx >= host.size()) invalid("mapped edge index out of range");
    const Edge& pe = pattern.edge(j);
    const Edge& he = host.edge(idx);
    const VertexMask bu = m.branch_sets[static_cast<std::size_t>(pe.u)];
    const VertexMask bv = m.branch_sets[static_cast<std::size_t>(pe.v)];
    const bool forward = ((bu >> he.u) & 1U) && ((bv >> he.v) & 1U);
    const bool backward = ((bu >> he.v) & 1U) && ((bv >> he.u) & 1U);
    if (!forward && !backward) invalid("mapped edge for pattern edge " + std::to_string(j) + " does not join its branch sets");
    seen_host_edges.push_back(idx);
  }
  std::sort(seen_host_edges.begin(), seen_host_edges.end());
  if (std::adjacent_find(seen_host_edges.begin(), seen_host_edges.end()) != seen_host_edges.end()) {
    invalid("two pattern edges share a mapped host edge");
  }
}

bool is_valid_model(const MinorModel& model) noexcept {
  try {
    validate_model(model);
    return true;
  } catch (const Error&) {
    return false;
  }
}

MinorModel model_from_branch_sets(std::shared_ptr<const Graph> pattern, std::shared_ptr<const Graph> host,
                                  std::vector<VertexMask> branch_sets) {
  MinorModel m;
  m.pattern = std::move(pattern);
  m.host = std::move(host);
  m.branch_sets = std::move(branch_sets);
  if (m.branch_sets.size() != static_cast<std::size_t>(m.pattern->order())) invalid("one branch set per pattern vertex required");
  for (VertexMask b : m.branch_sets) m.branch_trees.push_back(bfs_tree(*m.host, b));
  const auto owner = m.owner();
  m.edge_map.assign(static_cast<std::size_t>(m.pattern->size()), -1);
  for (int i = 0; i < m.host->size(); ++i) {
    const Edge& e = m.host->edge(i);
    const int a = owner[static_cast<std::size_t>(e.u)];
    const int b = owner[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0 || a == b) continue;
    if (auto j = m.pattern->edge_index(a, b); j && m.edge_map[static_cast<std::size_t>(*j)] < 0) {
      m.edge_map[static_cast<std::size_t>(*j)] = i;
    }
  }
  for (int j = 0; j < m.pattern->size(); ++j) {
    if (m.edge_map[static_cast<std::size_t>(j)] < 0) invalid("no host edge realizes pattern edge " + std::to_string(j));
  }
  return m;
}

MinorModel identity_model(const Graph& g) {
  auto shared = std::make_shared<const Graph>(g);
  std::vector<VertexMask> sets;
  for (int v = 0; v < g.order(); ++v) sets.push_back(bit(v));
  return model_from_branch_sets(shared, shared, std::move(sets));
}

MinorModel contraction_model(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  auto pattern = std::make_shared<const Graph>(contract_edge(g, e));
  std::vector<VertexMask> sets;
  for (int p = 0; p < pattern->order(); ++p) {
    const int old = p < e.v ? p : p + 1;
    sets.push_back(old == e.u ? (bit(e.u) | bit(e.v)) : bit(old));
  }
  return model_from_branch_sets(std::move(pattern), std::make_shared<const Graph>(g), std::move(sets));
}

namespace {

class ModelSearch {
 public:
  ModelSearch(const Graph& pattern, const Graph& host, const std::function<bool(const MinorModel&)>& visit,
              const ModelSearchOptions& options)
      : pattern_(std::make_shared<const Graph>(pattern)),
        host_(std::make_shared<const Graph>(host)),
        visit_(visit),
        k_(pattern.order()) {
    check_order(pattern, options.limits);
    check_order(host, options.limits);
    plan_order();
    plan_bounds();
    if (options.break_twin_symmetry) plan_twins();
    branch_.assign(static_cast<std::size_t>(k_), 0);
  }

  std::size_t run() {
    if (k_ > host_->order() || pattern_->size() > host_->size()) return 0;
    place(0, 0);
    return visited_;
  }

 private:
  // Most-constrained-first: the next pattern vertex has the most placed
  // neighbours, then the highest degree.
  void plan_order() {
    std::vector<bool> placed(static_cast<std::size_t>(k_), false);
    for (int step = 0; step < k_; ++step) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int u = 0; u < k_; ++u) {
        if (placed[static_cast<std::size_t>(u)]) continue;
        int placed_nbrs = 0;
        for (int w : pattern_->neighbor_list(u)) placed_nbrs += placed[static_cast<std::size_t>(w)] ? 1 : 0;
        std::pair<int, int> key{placed_nbrs, pattern_->degree(u)};
        if (key > best_key) {
          best_key = key;
          best = u;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
    position_.assign(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    earlier_nbrs_.assign(static_cast<std::size_t>(k_), {});
    for (int u = 0; u < k_; ++u) {
      for (int w : pattern_->neighbor_list(u)) {
        if (position_[static_cast<std::size_t>(w)] < position_[static_cast<std::size_t>(u)]) {
          earlier_nbrs_[static_cast<std::size_t>(u)].push_back(w);
        }
      }
    }
  }

  // A connected set of s host vertices has at most s(D-2)+2 outgoing edges,
  // D the host's maximum degree, which bounds branch-set sizes from below.
  void plan_bounds() {
    int max_degree = 0;
    for (int v = 0; v < host_->order(); ++v) max_degree = std::max(max_degree, host_->degree(v));
    min_size_.assign(static_cast<std::size_t>(k_), 1);
    for (int u = 0; u < k_; ++u) {
      const int need = pattern_->degree(u) - 2;
      if (max_degree > 2) {
        min_size_[static_cast<std::size_t>(u)] = std::max(1, (need + max_degree - 3) / (max_degree - 2));
      } else if (pattern_->degree(u) > max_degree) {
        min_size_[static_cast<std::size_t>(u)] = host_->order() + 1;
      }
    }
    placed_mask_.assign(static_cast<std::size_t>(k_) + 1, 0);
    vertex_need_.assign(static_cast<std::size_t>(k_) + 1, 0);
    edge_need_.assign(static_cast<std::size_t>(k_) + 1, 0);
    for (int i = 0; i < k_; ++i) {
      placed_mask_[static_cast<std::size_t>(i) + 1] = placed_mask_[static_cast<std::size_t>(i)] | bit(order_[static_cast<std::size_t>(i)]);
    }
    for (int next = 0; next <= k_; ++next) {
      const VertexMask placed = placed_mask_[static_cast<std::size_t>(next)];
      for (int u = 0; u < k_; ++u) {
        if ((placed >> u) & 1U) continue;
        vertex_need_[static_cast<std::size_t>(next)] += min_size_[static_cast<std::size_t>(u)];
        edge_need_[static_cast<std::size_t>(next)] += min_size_[static_cast<std::size_t>(u)] - 1;
        // Pattern edges with an unplaced end, each counted once.
        for (VertexMask w = pattern_->neighbors(u); w != 0; w &= w - 1) {
          const int x = lowest_vertex(w);
          if (((placed >> x) & 1U) || x > u) ++edge_need_[static_cast<std::size_t>(next)];
        }
      }
    }
  }

  // Twins: N(u) - w == N(w) - u, so the transposition (u w) is an
  // automorphism. Within a class of pairwise twins the branch-set minima are
  // forced to increase with pattern index.
  void plan_twins() {
    auto twins = [&](int u, int w) {
      return (pattern_->neighbors(u) & ~bit(w)) == (pattern_->neighbors(w) & ~bit(u));
    };
    std::vector<int> cls(static_cast<std::size_t>(k_), -1);
    for (int u = 0; u < k_; ++u) {
      if (cls[static_cast<std::size_t>(u)] >= 0) continue;
      std::vector<int> members{u};
      for (int w = u + 1; w < k_; ++w) {
        if (cls[static_cast<std::size_t>(w)] < 0 &&
            std::all_of(members.begin(), members.end(), [&](int x) { return twins(x, w); })) {
          members.push_back(w);
        }
      }
      for (int x : members) cls[static_cast<std::size_t>(x)] = u;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          twin_pairs_.push_back({members[i], members[j]});
        }
      }
    }
  }

  bool twin_ok(int u, VertexMask set) const {
    const int mine = lowest_vertex(set);
    for (const auto& [lo, hi] : twin_pairs_) {
      if (lo == u && branch_[static_cast<std::size_t>(hi)] != 0 && !(mine < lowest_vertex(branch_[static_cast<std::size_t>(hi)]))) return false;
      if (hi == u && branch_[static_cast<std::size_t>(lo)] != 0 && !(lowest_vertex(branch_[static_cast<std::size_t>(lo)]) < mine)) return false;
    }
    return true;
  }

  bool place(int i, VertexMask used) {
    if (i == k_) return emit();
    const int u = order_[static_cast<std::size_t>(i)];
    const VertexMask avail = host_->all_vertices() & ~used;
    const int max_size = popcount(avail) - vertex_need_[static_cast<std::size_t>(i) + 1];
    if (max_size <= 0) return true;
    const auto& nbrs = earlier_nbrs_[static_cast<std::size_t>(u)];
    VertexMask required = avail;
    for (int w : nbrs) {
      const VertexMask touch = neighborhood(*host_, branch_[static_cast<std::size_t>(w)]) & avail;
      if (popcount(touch) < popcount(required)) required = touch;
    }
    VertexMask earlier_roots = 0;
    for (VertexMask r = required; r != 0; r &= r - 1) {
      const int root = lowest_vertex(r);
      const VertexMask allowed = avail & ~earlier_roots;
      earlier_roots |= bit(root);
      if (!grow(i, u, used, bit(root), host_->neighbors(root) & allowed, allowed, max_size)) return false;
    }
    return true;
  }

  // ESU-style enumeration: each connected subset of `allowed` containing the
  // root is produced exactly once.
  bool grow(int i, int u, VertexMask used, VertexMask set, VertexMask ext, VertexMask allowed, int max_size) {
    if (!try_set(i, u, used, set)) return false;
    if (popcount(set) == max_size) return true;
    const VertexMask closed = set | neighborhood(*host_, set);
    while (ext != 0) {
      const int w = lowest_vertex(ext);
      ext &= ext - 1;
      const VertexMask next_ext = ext | (host_->neighbors(w) & allowed & ~closed);
      if (!grow(i, u, used, set | bit(w), next_ext, allowed, max_size)) return false;
    }
    return true;
  }

  bool try_set(int i, int u, VertexMask used, VertexMask set) {
    for (int w : earlier_nbrs_[static_cast<std::size_t>(u)]) {
      if ((neighborhood(*host_, set) & branch_[static_cast<std::size_t>(w)]) == 0) return true;
    }
    if (!twin_ok(u, set)) return true;
    // Each pattern edge at u needs its own host edge leaving the set, towards
    // a free vertex or a placed neighbour.
    VertexMask targets = host_->all_vertices() & ~used & ~set;
    for (VertexMask w = pattern_->neighbors(u); w != 0; w &= w - 1) targets |= branch_[static_cast<std::size_t>(lowest_vertex(w))];
    int out_edges = 0;
    for (VertexMask m = set; m != 0; m &= m - 1) out_edges += popcount(host_->neighbors(lowest_vertex(m)) & targets);
    if (out_edges < pattern_->degree(u)) return true;
    branch_[static_cast<std::size_t>(u)] = set;
    bool keep_going = true;
    if (feasible(i + 1, used | set)) keep_going = place(i + 1, used | set);
    branch_[static_cast<std::size_t>(u)] = 0;
    return keep_going;
  }

  // Every connected group of unplaced pattern vertices needs one host
  // component of the free vertices that is large enough and touches all the
  // branch sets it must attach to.
  bool feasible(int next, VertexMask used) const {
    if (next == k_) return true;
    const VertexMask avail = host_->all_vertices() & ~used;
    const auto n = static_cast<std::size_t>(next);
    if (popcount(avail) < vertex_need_[n]) return false;
    int dead_edges = 0;
    for (VertexMask m = used; m != 0; m &= m - 1) dead_edges += popcount(host_->neighbors(lowest_vertex(m)) & used);
    if (host_->size() - dead_edges / 2 < edge_need_[n]) return false;

    std::array<VertexMask, kMaxOrder> comps{};
    std::size_t comp_count = 0;
    for (VertexMask rest = avail; rest != 0;) {
      VertexMask comp = bit(lowest_vertex(rest));
      VertexMask frontier = comp;
      while (frontier != 0) {
        VertexMask grow_to = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) grow_to |= host_->neighbors(lowest_vertex(f));
        frontier = grow_to & avail & ~comp;
        comp |= frontier;
      }
      comps[comp_count++] = comp;
      rest &= ~comp;
    }
    const VertexMask placed = placed_mask_[n];
    for (VertexMask todo = pattern_->all_vertices() & ~placed; todo != 0;) {
      // The unplaced pattern component containing the lowest pending vertex.
      VertexMask group = bit(lowest_vertex(todo));
      VertexMask frontier = group;
      while (frontier != 0) {
        VertexMask grow_to = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) grow_to |= pattern_->neighbors(lowest_vertex(f));
        frontier = grow_to & ~placed & ~group;
        group |= frontier;
      }
      todo &= ~group;
      VertexMask attach = 0;
      for (VertexMask f = group; f != 0; f &= f - 1) attach |= pattern_->neighbors(lowest_vertex(f));
      attach &= placed;
      bool ok = false;
      for (std::size_t c = 0; c < comp_count && !ok; ++c) {
        if (popcount(comps[c]) < popcount(group)) continue;
        const VertexMask reach = neighborhood(*host_, comps[c]);
        ok = true;
        for (VertexMask w = attach; w != 0 && ok; w &= w - 1) {
          ok = (reach & branch_[static_cast<std::size_t>(lowest_vertex(w))]) != 0;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool emit() {
    ++visited_;
    return visit_(model_from_branch_sets(pattern_, host_, branch_));
  }

  std::shared_ptr<const Graph> pattern_;
  std::shared_ptr<const Graph> host_;
  const std::function<bool(const MinorModel&)>& visit_;
  int k_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> earlier_nbrs_;
  std::vector<int> min_size_;
  std::vector<VertexMask> placed_mask_;  // pattern vertices placed before step i
  std::vector<int> vertex_need_;         // lower bounds for the steps from i on
  std::vector<int> edge_need_;
  std::vector<std::pair<int, int>> twin_pairs_;  // (lo, hi): min(B[lo]) < min(B[hi])
  std::vector<VertexMask> branch_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_minor_model(const Graph& pattern, const Graph& host,
                                 const std::function<bool(const MinorModel&)>& visit,
                                 const ModelSearchOptions& options) {
  if (pattern.order() == 0) {
    MinorModel empty;
    empty.pattern = std::make_shared<const Graph>(pattern);
    empty.host = std::make_shared<const Graph>(host);
    visit(empty);
    return 1;
  }
  return ModelSearch(pattern, host, visit, options).run();
}

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host, const Limits& limits) {
  std::optional<MinorModel> found;
  ModelSearchOptions options;
  options.limits = limits;
  for_each_minor_model(
      pattern, host,
      [&](const MinorModel& m) {
        found = m;
        return false;
      },
      options);
  return found;
}

bool is_minor(const Graph& pattern, const Graph& host, const Limits& limits) {
  return find_minor(pattern, host, limits).has_value();
}

}  // namespace rp3
