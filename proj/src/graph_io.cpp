#include "bchrom/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace bchrom {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t offset)
    : std::runtime_error("line " + std::to_string(line) + ", offset " +
                         std::to_string(offset) + ": " + what),
      line_(line),
      offset_(offset) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::uint64_t parse_id(const Token& tok, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a non-negative vertex id, got '" + std::string(tok.text) + "'",
                     line, tok.offset);
  }
  if (value > UINT32_MAX - 1) throw ParseError("vertex id too large", line, tok.offset);
  return value;
}

Graph parse_edge_list(std::string_view text) {
  std::set<std::uint64_t> ids;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) toks.push_back({line.substr(start, i - start), pos + start});
    }

    if (toks.size() == 1) {
      ids.insert(parse_id(toks[0], line_no));
    } else if (toks.size() == 2) {
      auto a = parse_id(toks[0], line_no);
      auto b = parse_id(toks[1], line_no);
      if (a == b) {
        throw ParseError("self-loop at vertex " + std::to_string(a), line_no, toks[0].offset);
      }
      auto key = std::minmax(a, b);
      if (!seen.insert(key).second) {
        throw ParseError("duplicate edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second),
                         line_no, toks[0].offset);
      }
      ids.insert(a);
      ids.insert(b);
      raw.emplace_back(a, b);
    } else if (toks.size() > 2) {
      throw ParseError("expected at most two ids per line", line_no, toks[2].offset);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }

  std::map<std::uint64_t, VertexId> rank;
  for (auto id : ids) rank.emplace(id, static_cast<VertexId>(rank.size()));
  std::vector<EdgeId> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(rank[a], rank[b]);
  return Graph::from_edges(ids.size(), edges);
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    base = kGraph6Header.size();
    text.remove_prefix(kGraph6Header.size());
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 1, base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the graph6 range 63..126", 1, base + i);
    }
  }
  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };

  std::uint64_t n = 0;
  std::size_t p = 0;
  if (val(0) < 63) {
    n = val(0);
    p = 1;
  } else if (text.size() >= 2 && val(1) < 63) {
    if (text.size() < 4) throw ParseError("truncated graph6 size field", 1, base);
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    p = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size field", 1, base);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    p = 8;
  }
  if (n > UINT32_MAX - 1) throw ParseError("graph6 vertex count too large", 1, base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - p != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - p) + " bytes, expected " +
                         std::to_string(bytes),
                     1, base + p);
  }

  std::vector<EdgeId> edges;
  std::uint64_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      auto byte = val(p + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  for (; bit < bytes * 6; ++bit) {
    if ((val(p + bit / 6) >> (5 - bit % 6)) & 1U) {
      throw ParseError("nonzero graph6 padding bit", 1, base + p + bit / 6);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) out << u << '\n';
  }
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId u = 0; u < g.order(); ++u) out << "  " << u << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
      return parse_graph6(text);
    case GraphFormat::Dot:
      break;
  }
  throw std::invalid_argument("DOT is an output-only format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return write_edge_list(g);
    case GraphFormat::Graph6:
      return write_graph6(g);
    case GraphFormat::Dot:
      return write_dot(g);
  }
  return {};
}

GraphFormat detect_format(std::string_view text) {
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) return GraphFormat::Graph6;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) return GraphFormat::EdgeList;
  bool single_token = std::none_of(text.begin(), text.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  bool digits = std::all_of(text.begin(), text.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  // "5" alone is a one-vertex edge list, not graph6.
  return single_token && !digits && text.find('#') == std::string_view::npos ? GraphFormat::Graph6
                                                                             : GraphFormat::EdgeList;
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dot") return GraphFormat::Dot;
  return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::EdgeList:
      return "edge-list";
    case GraphFormat::Graph6:
      return "graph6";
    case GraphFormat::Dot:
      return "dot";
  }
  return "?";
}

}  // namespace bchrom
