#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bchrom/graph.hpp"

namespace bchrom {

enum class GraphFormat { EdgeList, Graph6, Dot };

/// Parse failure. `line` is 1-based; `offset` is the 0-based byte offset into
/// the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset);
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

// Edge-list: one edge "u v" per line, '#' starts a comment. A line holding a
// single id declares that vertex, which is how isolated vertices survive a
// round trip. Ids are renumbered 0..n-1 in increasing order.
//
// graph6: the standard encoding, with an optional ">>graph6<<" header.
Graph parse_graph(std::string_view text, GraphFormat format);

/// DOT is write-only; asking to parse it throws std::invalid_argument.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Best-effort sniffing for files of unknown format: a header or a single
/// printable token means graph6, anything else is taken as an edge list.
GraphFormat detect_format(std::string_view text);

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat f);

}  // namespace bchrom
