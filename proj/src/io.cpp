#include "indturan/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "indturan/errors.hpp"

namespace indturan {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string to_string(GraphFormat f) { return f == GraphFormat::graph6 ? "graph6" : "edge-list"; }

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (base < text.size() && std::isspace(static_cast<unsigned char>(text[base]))) ++base;
  std::string_view s = trim(text);
  if (s.substr(0, kHeader.size()) == kHeader) {
    s.remove_prefix(kHeader.size());
    base += kHeader.size();
  }
  if (s.empty()) throw ParseError("graph6: empty input", base);
  if (s.front() == ':' || s.front() == '&') throw ParseError("graph6: sparse6/digraph6 input is not supported", base);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
  }
  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(s[i]) - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else if (s.size() >= 2 && val(1) == 63) {
    if (s.size() < 8) throw ParseError("graph6: truncated 8-byte size header", base + s.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  } else {
    if (s.size() < 4) throw ParseError("graph6: truncated 4-byte size header", base + s.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 2)) {
    throw ParseError("graph6: vertex count too large", base);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (s.size() - pos != groups) {
    std::ostringstream msg;
    msg << "graph6: expected " << groups << " data bytes for n = " << n << ", found " << s.size() - pos;
    throw ParseError(msg.str(), base + std::min<std::size_t>(s.size(), pos + groups));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const auto byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bits % 6 != 0) {
    const auto last = val(s.size() - 1);
    const auto pad = static_cast<unsigned>(6 - bits % 6);
    if ((last & ((1U << pad) - 1U)) != 0) throw ParseError("graph6: nonzero padding bits", base + s.size() - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long long declared = -1;
  long long max_id = -1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::istringstream directive{std::string(line.substr(hash + 1))};
      std::string key;
      long long count = 0;
      if (directive >> key && key == "n") {
        if (!(directive >> count) || count < 0) throw ParseError("edge list: malformed '# n' directive", line_start + hash);
        declared = count;
      }
      line = line.substr(0, hash);
    }
    std::vector<std::pair<long long, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      long long value = 0;
      const auto* first = line.data() + i;
      const auto* last = line.data() + j;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || value < 0) {
        throw ParseError("edge list: expected a non-negative integer vertex id", line_start + i);
      }
      tokens.emplace_back(value, line_start + i);
      i = j;
    }
    if (tokens.size() % 2 != 0) throw ParseError("edge list: odd number of ids on a line", tokens.back().second);
    for (std::size_t t = 0; t < tokens.size(); t += 2) {
      const auto u = tokens[t].first;
      const auto v = tokens[t + 1].first;
      if (u > std::numeric_limits<int>::max() / 2 || v > std::numeric_limits<int>::max() / 2) {
        throw ParseError("edge list: vertex id too large", tokens[t].second);
      }
      if (u == v) throw ValidationError("edge list: self-loop at vertex " + std::to_string(u));
      const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
      if (!seen.insert(e).second) {
        throw ValidationError("edge list: duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
      }
      edges.push_back(e);
      max_id = std::max({max_id, u, v});
    }
    line_start = line_end + 1;
  }
  if (declared >= 0 && declared <= max_id) {
    throw ValidationError("edge list: '# n " + std::to_string(declared) + "' is smaller than the largest id");
  }
  const long long n = declared >= 0 ? declared : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edge_list) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    if (!trim(line).empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line starting at byte ") + std::to_string(start) + ": " + e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".g6" || ext == ".graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

Graph read_graph_file(const std::filesystem::path& path) {
  const auto graphs = read_graphs_file(path);
  if (graphs.size() != 1) {
    throw InputError("'" + path.string() + "' holds " + std::to_string(graphs.size()) + " graphs, expected one");
  }
  return graphs.front();
}

std::vector<Graph> read_graphs_file(const std::filesystem::path& path) {
  return parse_graphs(read_text_file(path), format_for_path(path));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::logic_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void ResultTable::add_row(const std::map<std::string, std::string>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("ResultTable: row does not match the column set");
  std::vector<std::string> row;
  for (const auto& c : columns_) {
    auto it = cells.find(c);
    if (it == cells.end()) throw std::logic_error("ResultTable: missing column '" + c + "'");
    row.push_back(it->second);
  }
  rows_.push_back(std::move(row));
}

void ResultTable::append_column(const std::string& name, const std::string& value) {
  columns_.push_back(name);
  for (auto& row : rows_) row.push_back(value);
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json typed_cell(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty() && s.front() == '[') {
    auto parsed = nlohmann::ordered_json::parse(s, nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  std::int64_t i = 0;
  auto [p1, e1] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (e1 == std::errc() && p1 == s.data() + s.size() && !s.empty()) return i;
  const bool digits_only = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
  if (!digits_only) {
    double d = 0;
    auto [p2, e2] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (e2 == std::errc() && p2 == s.data() + s.size() && !s.empty() && std::isfinite(d)) return d;
  }
  return s;
}

}  // namespace

std::string ResultTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + csv_cell(columns_[i]);
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += "\n";
  }
  return out;
}

std::string ResultTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = typed_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace indturan
