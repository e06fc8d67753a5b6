#include "rp3/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rp3 {

const Graph& graph_of(const ParsedGraph& p) {
  if (const auto* m = std::get_if<MarkedGraph>(&p)) return m->graph;
  return std::get<Graph>(p);
}

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& t, int line) {
  int value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, 1, "header must be 'n m'");
  const int n = to_int(header.tokens[0], header.number);
  const int m = to_int(header.tokens[1], header.number);
  if (n > kMaxOrder) throw ParseError(header.number, header.tokens[0].column, "more than 64 vertices");
  std::vector<Edge> edges;
  std::optional<std::array<int, 3>> marks;
  std::vector<int> edge_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.front().text == "marks:") {
      if (marks) throw ParseError(l.number, 1, "second marks line");
      if (l.tokens.size() != 4) throw ParseError(l.number, 1, "marks line needs three vertices");
      std::array<int, 3> mk{};
      for (std::size_t j = 0; j < 3; ++j) {
        mk[j] = to_int(l.tokens[j + 1], l.number);
        if (mk[j] >= n) throw ParseError(l.number, l.tokens[j + 1].column, "marked vertex out of range");
      }
      marks = mk;
      continue;
    }
    if (marks) throw ParseError(l.number, 1, "edges after the marks line");
    if (l.tokens.size() != 2) throw ParseError(l.number, 1, "edge line must be 'u v'");
    const int u = to_int(l.tokens[0], l.number);
    const int v = to_int(l.tokens[1], l.number);
    if (u >= n) throw ParseError(l.number, l.tokens[0].column, "vertex " + std::to_string(u) + " out of range");
    if (v >= n) throw ParseError(l.number, l.tokens[1].column, "vertex " + std::to_string(v) + " out of range");
    if (u == v) throw Error(Errc::LoopEdge, "line " + std::to_string(l.number) + ": loop at vertex " + std::to_string(u));
    const Edge e = make_edge(u, v);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (edges[j] == e) {
        throw Error(Errc::DuplicateEdge, "line " + std::to_string(l.number) + ": edge " + std::to_string(e.u) + " " +
                                             std::to_string(e.v) + " already given on line " + std::to_string(edge_line[j]));
      }
    }
    edges.push_back(e);
    edge_line.push_back(l.number);
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(header.number, header.tokens[1].column,
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  Graph g(n, std::move(edges));
  if (marks) return MarkedGraph(std::move(g), *marks);
  return g;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  auto byte = [&](std::size_t i) {
    if (i >= text.size()) throw ParseError(1, static_cast<int>(i) + 1, "graph6 string ends early");
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(1, static_cast<int>(i) + 1, "byte outside the graph6 range");
    return c - 63;
  };
  std::size_t pos = 0;
  long n = byte(0);
  pos = 1;
  if (n == 63) {
    if (byte(1) == 63) throw ParseError(1, 2, "graph order beyond 258047 is not supported");
    n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > kMaxOrder) throw ParseError(1, 1, "more than 64 vertices");
  const long bits = n * (n - 1) / 2;
  const std::size_t need = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != need) {
    throw ParseError(1, static_cast<int>(std::min(text.size(), need)) + 1,
                     "graph6 length " + std::to_string(text.size()) + ", expected " + std::to_string(need));
  }
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k % 6 != 0; ++k) {
    if ((byte(pos + static_cast<std::size_t>(k / 6)) >> (5 - k % 6)) & 1) {
      throw ParseError(1, static_cast<int>(pos + static_cast<std::size_t>(k / 6)) + 1, "nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

ParsedGraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() == 1 && lines.front().tokens.size() == 1) return parse_graph6(lines.front().tokens.front().text);
  return parse_edge_list(text);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_edge_list(const MarkedGraph& m) {
  return write_edge_list(m.graph) + "marks: " + std::to_string(m.marks[0]) + ' ' + std::to_string(m.marks[1]) + ' ' +
         std::to_string(m.marks[2]) + '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << text;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("RP3_DATA_DIR"); env && *env) return env;
#ifdef RP3_DEFAULT_DATA_DIR
  return RP3_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::filesystem::path fixture_path(const std::string& name) {
  const bool has_ext = name.size() > 4 && name.ends_with(".txt");
  return data_dir() / "graphs" / (has_ext ? name : name + ".txt");
}

ParsedGraph load_graph(const std::string& path_or_name) {
  std::filesystem::path p(path_or_name);
  if (!std::filesystem::exists(p)) p = fixture_path(path_or_name);
  if (!std::filesystem::exists(p)) throw Error(Errc::ParseError, "no file or fixture named " + path_or_name);
  return parse_graph(read_text_file(p));
}

std::vector<Graph> read_graph_records(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<Graph> out;
  std::string current;
  std::istringstream in(text);
  std::string line;
  auto flush = [&]() {
    if (current.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(graph_of(parse_edge_list(current)));
    current.clear();
  };
  while (std::getline(in, line)) {
    std::string_view body(line);
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (line.find('#') == std::string::npos) flush();
      continue;
    }
    const auto tokens = tokenize(body);
    if (tokens.size() == 1 && current.empty()) {
      out.push_back(parse_graph6(tokens.front().text));
      continue;
    }
    current += line + '\n';
  }
  flush();
  return out;
}

}  // namespace rp3
