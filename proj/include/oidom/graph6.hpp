#pragma once

/// \file graph6.hpp
/// graph6 and plain edge-list text formats.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oidom/graph.hpp"

namespace oidom {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted; anything else out of place throws FormatError.
Graph parse_graph6(std::string_view text);

/// Encodes in the standard layout: N(n) followed by the upper triangle
/// x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, offset by 63.
std::string to_graph6(const Graph& g);

/// "n m" header line followed by m lines "u v", 0-indexed.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads every non-blank graph6 line of a stream. Errors carry the line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace oidom
