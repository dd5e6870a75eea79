#include "oidom/graph6.hpp"

#include <istream>
#include <sstream>

namespace oidom {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  if (c < 63 || c > 126) {
    throw FormatError("graph6 character '" + std::string(1, c) + "' outside 63..126");
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw FormatError("graph6 orders above 258047 are not supported");
  } else {
    if (text.size() < 4) throw FormatError("truncated graph6 length prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text[i]);
    if (n < 63) throw FormatError("non-canonical graph6 length prefix");
    pos = 4;
  }
  if (n > Graph::kMaxOrder) {
    throw FormatError("graph6 order " + std::to_string(n) + " exceeds the supported maximum of " +
                      std::to_string(Graph::kMaxOrder));
  }
  const int order = static_cast<int>(n);
  const long bits = static_cast<long>(order) * (order - 1) / 2;
  const long bytes = (bits + 5) / 6;
  const std::string_view payload = text.substr(pos);
  if (static_cast<long>(payload.size()) != bytes) {
    throw FormatError("graph6 payload has " + std::to_string(payload.size()) + " bytes, expected " +
                      std::to_string(bytes));
  }

  GraphBuilder builder(order);
  long k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = decode_char(payload[k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) builder.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int chunk = decode_char(payload.back());
    const int padding = static_cast<int>(6 - bits % 6);
    if (chunk & ((1 << padding) - 1)) throw FormatError("graph6 padding bits are not zero");
  }
  return builder.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long n = -1;
  long m = -1;
  if (!(in >> n >> m)) throw FormatError("edge list must start with \"n m\"");
  if (n < 0 || n > Graph::kMaxOrder) throw FormatError("edge list order " + std::to_string(n) + " out of range");
  if (m < 0) throw FormatError("negative edge count");
  GraphBuilder builder(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) {
      throw FormatError("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    }
    try {
      builder.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const GraphError& e) {
      throw FormatError("edge line " + std::to_string(i + 2) + ": " + e.what());
    }
  }
  std::string extra;
  if (in >> extra) throw FormatError("trailing content after " + std::to_string(m) + " edges");
  return builder.build();
}

Graph parse_edge_list_text(std::string_view text) {
  std::string copy(text);
  std::istringstream in(copy);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::exception& e) {
      throw FormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace oidom
