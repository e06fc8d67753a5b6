#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rp3/graph.hpp"

namespace rp3 {

using ParsedGraph = std::variant<Graph, MarkedGraph>;

const Graph& graph_of(const ParsedGraph& p);

/// Edge list: "n m", then m lines "u v"; '#' starts a comment; an optional
/// last line "marks: a b c" makes a MarkedGraph. Throws ParseError (with
/// line and column), or Error with LoopEdge / DuplicateEdge.
ParsedGraph parse_edge_list(std::string_view text);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// A single graph6 token (optionally behind a ">>graph6<<" header) is read
/// as graph6, anything else as an edge list.
ParsedGraph parse_graph(std::string_view text);

std::string write_edge_list(const Graph& g);
std::string write_edge_list(const MarkedGraph& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Reads a file path, or else a bundled fixture name such as "k44_minus_e"
/// (with or without ".txt").
ParsedGraph load_graph(const std::string& path_or_name);

/// Several graphs in one file: one graph6 string per line, or edge lists
/// separated by blank lines.
std::vector<Graph> read_graph_records(const std::filesystem::path& path);

/// Bundled data directory: $RP3_DATA_DIR, else the source tree's data/.
std::filesystem::path data_dir();
std::filesystem::path fixture_path(const std::string& name);

}  // namespace rp3
