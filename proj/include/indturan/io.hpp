#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

enum class GraphFormat { graph6, edge_list };

GraphFormat parse_graph_format(std::string_view name);
std::string to_string(GraphFormat f);

// Standard graph6: N(n), then the upper triangle in column order packed into
// 6-bit groups offset by 63. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Whitespace-separated "u v" pairs with 0-based ids. '#' starts a comment;
// a "# n <count>" line fixes the vertex count so isolated vertices survive.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// One graph per non-empty line (graph6) or one graph per file (edge list).
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

// ".g6" / ".graph6" is graph6, anything else an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::vector<Graph> read_graphs_file(const std::filesystem::path& path);

// Fixed-column result table with preformatted cells. JSON output types a
// cell as bool, int64 or double when it parses as one; anything else
// (including integers beyond 64 bits) stays a string.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  // Throws std::logic_error if a column is missing or unknown.
  void add_row(const std::map<std::string, std::string>& cells);
  // Appends a column holding `value` in every row.
  void append_column(const std::string& name, const std::string& value);

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// Shortest decimal that round-trips.
std::string format_double(double x);
inline std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace indturan
