#include "rp3/canon.hpp"

#include <algorithm>
#include <numeric>

namespace rp3 {
namespace {

struct Partition {
  std::vector<int> color;  // cell index of each vertex, 0..cells-1 in cell order
  int cells = 0;
  std::uint64_t trace = 0;
};

void mix(std::uint64_t& h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

int normalize(std::vector<int>& color) {
  std::vector<int> values = color;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& c : color) {
    c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }
  return static_cast<int>(values.size());
}

// Equitable refinement. Cells are ordered by (old cell, neighbour counts per
// cell), so the result and its trace are invariant under relabeling.
Partition refine(const Graph& g, std::vector<int> color) {
  const int n = g.order();
  Partition p;
  p.cells = normalize(color);
  std::uint64_t trace = static_cast<std::uint64_t>(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    const int k = p.cells;
    const auto width = static_cast<std::size_t>(k + 1);
    std::vector<int> sig(static_cast<std::size_t>(n) * width, 0);
    for (int v = 0; v < n; ++v) {
      int* row = &sig[static_cast<std::size_t>(v) * width];
      row[0] = color[static_cast<std::size_t>(v)];
      for (VertexMask m = g.neighbors(v); m != 0; m &= m - 1) {
        ++row[1 + color[static_cast<std::size_t>(lowest_vertex(m))]];
      }
    }
    auto row_of = [&](int v) { return &sig[static_cast<std::size_t>(v) * width]; };
    auto less = [&](int a, int b) {
      return std::lexicographical_compare(row_of(a), row_of(a) + width, row_of(b), row_of(b) + width);
    };
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    std::vector<int> next(static_cast<std::size_t>(n));
    int cells = 0;
    int run = 0;
    for (int i = 0; i < n; ++i) {
      const int v = order[static_cast<std::size_t>(i)];
      if (i > 0 && less(order[static_cast<std::size_t>(i - 1)], v)) {
        mix(trace, static_cast<std::uint64_t>(run));
        ++cells;
        run = 0;
      }
      if (run == 0) {
        for (std::size_t j = 0; j < width; ++j) mix(trace, static_cast<std::uint64_t>(row_of(v)[j]));
      }
      ++run;
      next[static_cast<std::size_t>(v)] = cells;
    }
    if (n > 0) {
      mix(trace, static_cast<std::uint64_t>(run));
      ++cells;
    }
    color = std::move(next);
    if (cells == k) break;
    p.cells = cells;
  }
  p.color = std::move(color);
  p.trace = trace;
  return p;
}

std::vector<int> individualize(const std::vector<int>& color, int v) {
  std::vector<int> out(color.size());
  for (std::size_t x = 0; x < color.size(); ++x) out[x] = 2 * color[x] + 1;
  out[static_cast<std::size_t>(v)] = 2 * color[static_cast<std::size_t>(v)];
  return out;
}

std::vector<int> first_nontrivial_cell(const Partition& p) {
  std::vector<int> size(static_cast<std::size_t>(p.cells), 0);
  for (int c : p.color) ++size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < p.cells; ++c) {
    if (size[static_cast<std::size_t>(c)] > 1) {
      target = c;
      break;
    }
  }
  std::vector<int> cell;
  for (std::size_t v = 0; v < p.color.size(); ++v) {
    if (p.color[v] == target) cell.push_back(static_cast<int>(v));
  }
  return cell;
}

std::vector<int> initial_colors(const Graph& g, std::span<const int> colors) {
  if (colors.empty()) return std::vector<int>(static_cast<std::size_t>(g.order()), 0);
  if (static_cast<int>(colors.size()) != g.order()) {
    throw Error(Errc::BadVertices, "colouring length does not match graph order");
  }
  return {colors.begin(), colors.end()};
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::vector<int> colors) : g_(g), n_(g.order()), colors_(std::move(colors)) {}

  CanonicalForm run() {
    std::vector<int> path;
    search(refine(g_, colors_), path);
    CanonicalForm out;
    out.labeling = best_perm_;
    std::vector<int> ranks = colors_;
    normalize(ranks);
    const bool colored = std::any_of(ranks.begin(), ranks.end(), [](int c) { return c != 0; });
    out.code.push_back(static_cast<std::uint8_t>(n_));
    out.code.push_back(colored ? 1 : 0);
    if (colored) {
      std::vector<std::uint8_t> at(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        at[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(v)])] =
            static_cast<std::uint8_t>(ranks[static_cast<std::size_t>(v)]);
      }
      out.code.insert(out.code.end(), at.begin(), at.end());
    }
    std::uint8_t byte = 0;
    int filled = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        byte = static_cast<std::uint8_t>((byte << 1) | ((best_rows_[static_cast<std::size_t>(i)] >> j) & 1U));
        if (++filled == 8) {
          out.code.push_back(byte);
          byte = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) out.code.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  int search(const Partition& p, std::vector<int>& path) {
    if (p.cells == n_) return leaf(p, path);
    const int level = static_cast<int>(path.size());
    std::vector<int> explored;
    for (int v : first_nontrivial_cell(p)) {
      if (equivalent_to_explored(v, explored, path)) continue;
      path.push_back(v);
      const int jump = search(refine(g_, individualize(p.color, v)), path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, const std::vector<int>& path) {
    const Permutation& perm = p.color;
    std::vector<VertexMask> rows(static_cast<std::size_t>(n_), 0);
    for (const auto& e : g_.edges()) {
      const int a = perm[static_cast<std::size_t>(e.u)];
      const int b = perm[static_cast<std::size_t>(e.v)];
      rows[static_cast<std::size_t>(a)] |= bit(b);
      rows[static_cast<std::size_t>(b)] |= bit(a);
    }
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_perm_ = best_perm_ = perm;
      first_path_ = path;
      return kNoJump;
    }
    if (rows == first_rows_) {
      record_automorphism(first_perm_, perm);
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) ++common;
      return static_cast<int>(common);
    }
    if (rows == best_rows_) {
      record_automorphism(best_perm_, perm);
    } else if (rows > best_rows_) {
      best_rows_ = rows;
      best_perm_ = perm;
    }
    return kNoJump;
  }

  // gamma = reference^{-1} o perm
  void record_automorphism(const Permutation& reference, const Permutation& perm) {
    Permutation inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(reference[static_cast<std::size_t>(v)])] = v;
    Permutation gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    autos_.push_back(std::move(gamma));
  }

  bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    if (explored.empty() || autos_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int x) { return a[static_cast<std::size_t>(x)] == x; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, a[static_cast<std::size_t>(x)]);
    }
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int w) { return uf.find(w) == root; });
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  bool have_first_ = false;
  std::vector<VertexMask> first_rows_, best_rows_;
  Permutation first_perm_, best_perm_;
  std::vector<int> first_path_;
  std::vector<Permutation> autos_;
};

std::optional<Permutation> match(const Graph& a, const Graph& b, const Partition& pa, const Partition& pb) {
  if (pa.trace != pb.trace || pa.cells != pb.cells) return std::nullopt;
  const int n = a.order();
  if (pa.cells == n) {
    Permutation at(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) at[static_cast<std::size_t>(pb.color[static_cast<std::size_t>(y)])] = y;
    Permutation map(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = at[static_cast<std::size_t>(pa.color[static_cast<std::size_t>(x)])];
    for (const auto& e : a.edges()) {
      if (!b.adjacent(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return std::nullopt;
    }
    return map;
  }
  const auto cell_a = first_nontrivial_cell(pa);
  const auto cell_b = first_nontrivial_cell(pb);
  if (cell_a.size() != cell_b.size()) return std::nullopt;
  const int v = cell_a.front();
  const Partition qa = refine(a, individualize(pa.color, v));
  for (int w : cell_b) {
    const Partition qb = refine(b, individualize(pb.color, w));
    if (auto found = match(a, b, qa, qb)) return found;
  }
  return std::nullopt;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors, const Limits& limits) {
  check_order(g, limits);
  if (g.order() == 0) return CanonicalForm{{0, 0}, {}};
  return CanonSearch(g, initial_colors(g, colors)).run();
}

CanonicalCode canonical_code(const MarkedGraph& m, const Limits& limits) {
  std::vector<int> colors(static_cast<std::size_t>(m.graph.order()), 0);
  for (int v : m.marks) colors[static_cast<std::size_t>(v)] = 1;
  return canonical_form(m.graph, colors, limits).code;
}

Graph graph_from_code(const CanonicalCode& code) {
  if (code.size() < 2) throw Error(Errc::ParseError, "canonical code too short");
  const int n = code[0];
  std::size_t pos = 2 + (code[1] != 0 ? static_cast<std::size_t>(n) : 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  if (code.size() != pos + (bits + 7) / 8) throw Error(Errc::ParseError, "canonical code has wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((code[pos + k / 8] >> (7 - k % 8)) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalCode from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ParseError, "odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(Errc::ParseError, std::string("bad hex digit '") + c + "'");
  };
  CanonicalCode out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b, std::span<const int> colors_a,
                                            std::span<const int> colors_b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
  if (colors_a.empty() != colors_b.empty()) return std::nullopt;
  if (!colors_a.empty()) {
    std::vector<int> sa(colors_a.begin(), colors_a.end());
    std::vector<int> sb(colors_b.begin(), colors_b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (a.order() == 0) return Permutation{};
  return match(a, b, refine(a, initial_colors(a, colors_a)), refine(b, initial_colors(b, colors_b)));
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

bool is_automorphism(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<bool> seen(perm.size(), false);
  for (int x : perm) {
    if (x < 0 || x >= g.order() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return g.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  });
}

AutomorphismGroup automorphism_group(const Graph& g, std::span<const int> colors, const Limits& limits) {
  check_order(g, limits);
  const int n = g.order();
  AutomorphismGroup group;
  if (n == 0) return group;
  Partition p = refine(g, initial_colors(g, colors));
  while (p.cells < n) {
    const auto cell = first_nontrivial_cell(p);
    const int b = cell.front();
    const Partition fixed_b = refine(g, individualize(p.color, b));
    auto orbit_of_b = [&] {
      UnionFind uf(n);
      for (const auto& a : group.generators) {
        bool fixes = std::all_of(group.base.begin(), group.base.end(),
                                 [&](int x) { return a[static_cast<std::size_t>(x)] == x; });
        if (!fixes) continue;
        for (int x = 0; x < n; ++x) uf.unite(x, a[static_cast<std::size_t>(x)]);
      }
      std::vector<int> orbit;
      for (int x : cell) {
        if (uf.find(x) == uf.find(b)) orbit.push_back(x);
      }
      return orbit;
    };
    std::vector<int> orbit = orbit_of_b();
    for (int w : cell) {
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
      auto sigma = match(g, g, fixed_b, refine(g, individualize(p.color, w)));
      if (sigma) {
        group.generators.push_back(std::move(*sigma));
        orbit = orbit_of_b();
      }
    }
    const auto size = static_cast<std::uint64_t>(orbit.size());
    group.basic_orbit_sizes.push_back(static_cast<int>(size));
    if (__builtin_mul_overflow(group.order, size, &group.order)) group.order = UINT64_MAX;
    group.base.push_back(b);
    p = fixed_b;
  }
  return group;
}

namespace {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[static_cast<std::size_t>(inner[x])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != static_cast<int>(x)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t group_order(std::span<const Permutation> gens, int n) {
  std::vector<Permutation> strong;
  for (const auto& g : gens) {
    if (!is_identity(g)) strong.push_back(g);
  }
  std::vector<int> base;
  const Permutation identity = [&] {
    Permutation id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }();
  auto moved_point = [&](const Permutation& p) {
    for (int x = 0; x < n; ++x) {
      if (p[static_cast<std::size_t>(x)] != x) return x;
    }
    return -1;
  };
  for (const auto& s : strong) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](int b) { return s[static_cast<std::size_t>(b)] == b; });
    if (fixes_base) base.push_back(moved_point(s));
  }

  struct Level {
    std::vector<Permutation> transversal;  // empty entry = not in orbit
    std::vector<int> orbit;
  };

  while (true) {
    std::vector<Level> levels(base.size());
    for (std::size_t l = 0; l < base.size(); ++l) {
      auto& lvl = levels[l];
      lvl.transversal.assign(static_cast<std::size_t>(n), {});
      lvl.transversal[static_cast<std::size_t>(base[l])] = identity;
      lvl.orbit = {base[l]};
      for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
        const int p = lvl.orbit[i];
        for (const auto& s : strong) {
          bool fixes = true;
          for (std::size_t j = 0; j < l; ++j) fixes = fixes && s[static_cast<std::size_t>(base[j])] == base[j];
          if (!fixes) continue;
          const int q = s[static_cast<std::size_t>(p)];
          if (lvl.transversal[static_cast<std::size_t>(q)].empty()) {
            lvl.transversal[static_cast<std::size_t>(q)] = compose(s, lvl.transversal[static_cast<std::size_t>(p)]);
            lvl.orbit.push_back(q);
          }
        }
      }
    }
    auto sift = [&](Permutation x) {
      for (std::size_t l = 0; l < base.size(); ++l) {
        const int b = x[static_cast<std::size_t>(base[l])];
        const auto& u = levels[l].transversal[static_cast<std::size_t>(b)];
        if (u.empty()) return x;
        x = compose(inverse(u), x);
      }
      return x;
    };
    bool extended = false;
    for (std::size_t l = 0; l < base.size() && !extended; ++l) {
      for (int p : levels[l].orbit) {
        for (const auto& s : strong) {
          bool fixes = true;
          for (std::size_t j = 0; j < l; ++j) fixes = fixes && s[static_cast<std::size_t>(base[j])] == base[j];
          if (!fixes) continue;
          const int q = s[static_cast<std::size_t>(p)];
          Permutation schreier = compose(inverse(levels[l].transversal[static_cast<std::size_t>(q)]),
                                         compose(s, levels[l].transversal[static_cast<std::size_t>(p)]));
          Permutation residue = sift(std::move(schreier));
          if (!is_identity(residue)) {
            bool fixes_base = std::all_of(base.begin(), base.end(),
                                          [&](int b) { return residue[static_cast<std::size_t>(b)] == b; });
            if (fixes_base) base.push_back(moved_point(residue));
            strong.push_back(std::move(residue));
            extended = true;
            break;
          }
        }
        if (extended) break;
      }
    }
    if (!extended) {
      std::uint64_t order = 1;
      for (const auto& lvl : levels) {
        if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(lvl.orbit.size()), &order)) return UINT64_MAX;
      }
      return order;
    }
  }
}

std::vector<std::vector<int>> orbits_of(std::span<const Permutation> gens, int n) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    for (int x = 0; x < n; ++x) uf.unite(x, g[static_cast<std::size_t>(x)]);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

OrbitTable orbits(const Graph& g, const Limits& limits) { return orbits(g, automorphism_group(g, {}, limits)); }

OrbitTable orbits(const Graph& g, const AutomorphismGroup& group) {
  const int n = g.order();
  OrbitTable table;
  table.vertex_orbits = orbits_of(group.generators, n);

  auto ordered = [n](int a, int b) { return a * n + b; };
  UnionFind directed(n * n);
  for (const auto& s : group.generators) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) directed.unite(ordered(a, b), ordered(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]));
      }
    }
  }
  // Unordered orbit of {a,b} = union of the ordered orbits of (a,b) and (b,a).
  UnionFind undirected(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      undirected.unite(ordered(a, b), directed.find(ordered(a, b)));
      undirected.unite(ordered(a, b), ordered(b, a));
    }
  }
  std::vector<int> slot(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int r = undirected.find(ordered(a, b));
      if (slot[static_cast<std::size_t>(r)] < 0) {
        slot[static_cast<std::size_t>(r)] = static_cast<int>(table.pair_orbits.size());
        table.pair_orbits.emplace_back();
        table.vfn.push_back(directed.find(ordered(a, b)) == directed.find(ordered(b, a)) ? 0 : 1);
      }
      table.pair_orbits[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back({a, b});
    }
  }
  return table;
}

std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutomorphismGroup& group) {
  UnionFind uf(g.size());
  for (const auto& s : group.generators) {
    for (int i = 0; i < g.size(); ++i) {
      const auto& e = g.edge(i);
      uf.unite(i, g.edge_index_or_throw(s[static_cast<std::size_t>(e.u)], s[static_cast<std::size_t>(e.v)]));
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < g.size(); ++i) {
    const int r = uf.find(i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
  }
  return out;
}

}  // namespace rp3
