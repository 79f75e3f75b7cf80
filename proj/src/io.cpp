#include "ecg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ecg/errors.hpp"

namespace ecg::io {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
  std::string_view rest_after(std::size_t k) const;  // raw text after token k
  std::string_view raw;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view Line::rest_after(std::size_t k) const {
  const char* end = tokens[k].data() + tokens[k].size();
  return trim(std::string_view(end, raw.data() + raw.size() - end));
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    Line line{number, {}, raw};
    std::string_view s = raw;
    while (!s.empty()) {
      std::size_t i = 0;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      line.tokens.push_back(s.substr(0, i));
      s = trim(s.substr(i));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

bool to_int(std::string_view tok, long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

int vertex_token(std::string_view tok, int n, int line) {
  long v = 0;
  if (!to_int(tok, v))
    throw ParseError(ParseErrorKind::malformed_body, "expected a vertex id, got '" +
                                                         std::string(tok) + "'",
                     line);
  if (v < 0 || v >= n)
    throw ParseError(ParseErrorKind::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")", line);
  return static_cast<int>(v);
}

// Header and edge lines shared by the edge-list and planar formats. Returns
// the index of the first line after the edges.
bool integer_pair(const Line& line, long& a, long& b) {
  return line.tokens.size() == 2 && to_int(line.tokens[0], a) && to_int(line.tokens[1], b);
}

// Without a usable "n m" header every leading "u v" line is an edge and n is
// one more than the largest id.
std::size_t read_headerless(const std::vector<Line>& lines, Graph& g) {
  std::size_t end = 0;
  long top = -1, a = 0, b = 0;
  for (; end < lines.size() && integer_pair(lines[end], a, b); ++end) {
    if (a < 0 || b < 0)
      throw ParseError(ParseErrorKind::vertex_out_of_range, "negative vertex id", lines[end].number);
    top = std::max({top, a, b});
  }
  g = Graph(static_cast<int>(top + 1));
  for (std::size_t i = 0; i < end; ++i) {
    integer_pair(lines[i], a, b);
    if (a == b) throw ParseError(ParseErrorKind::self_loop, "vertex " + std::to_string(a), lines[i].number);
    if (g.has_edge(static_cast<int>(a), static_cast<int>(b)))
      throw ParseError(ParseErrorKind::duplicate_edge,
                       std::to_string(a) + " " + std::to_string(b), lines[i].number);
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return end;
}

std::size_t read_edges(const std::vector<Line>& lines, Graph& g, bool allow_headerless = false) {
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, "empty input");
  const Line& head = lines.front();
  long n = 0, m = 0;
  if (!integer_pair(head, n, m) || n < 0 || m < 0)
    throw ParseError(ParseErrorKind::malformed_header, "expected 'n m'", head.number);
  if (m > n * (n - 1) / 2) {
    if (allow_headerless) return read_headerless(lines, g);
    throw ParseError(ParseErrorKind::malformed_header, "more edges than a simple graph allows",
                     head.number);
  }
  if (allow_headerless) {
    std::size_t pairs = 1;
    long a = 0, b = 0;
    while (pairs < lines.size() && integer_pair(lines[pairs], a, b)) ++pairs;
    if (static_cast<long>(pairs - 1) < m) return read_headerless(lines, g);
  }
  g = Graph(static_cast<int>(n));
  std::size_t i = 1;
  for (long e = 0; e < m; ++e, ++i) {
    if (i >= lines.size())
      throw ParseError(ParseErrorKind::malformed_body,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    const Line& line = lines[i];
    if (line.tokens.size() != 2)
      throw ParseError(ParseErrorKind::malformed_body, "expected 'u v'", line.number);
    const int u = vertex_token(line.tokens[0], g.vertex_count(), line.number);
    const int v = vertex_token(line.tokens[1], g.vertex_count(), line.number);
    if (u == v) throw ParseError(ParseErrorKind::self_loop, "vertex " + std::to_string(u), line.number);
    if (g.has_edge(u, v))
      throw ParseError(ParseErrorKind::duplicate_edge,
                       std::to_string(u) + " " + std::to_string(v), line.number);
    g.add_edge(u, v);
  }
  return i;
}

bool read_label(const Line& line, Graph& g) {
  if (line.tokens.front() != "label") return false;
  if (line.tokens.size() < 2)
    throw ParseError(ParseErrorKind::malformed_body, "expected 'label <v> <text>'", line.number);
  const int v = vertex_token(line.tokens[1], g.vertex_count(), line.number);
  g.set_label(v, std::string(line.tokens.size() > 2 ? line.rest_after(1) : std::string_view{}));
  return true;
}

void write_edges(std::ostringstream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_labels(std::ostringstream& out, const Graph& g) {
  if (!g.has_labels()) return;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.find_first_of("\r\n") != std::string_view::npos)
    throw ParseError(ParseErrorKind::malformed_body, "graph6 input holds more than one graph");
  if (text.empty()) throw ParseError(ParseErrorKind::malformed_header, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw ParseError(ParseErrorKind::malformed_body,
                       std::string("character '") + c + "' outside the graph6 range");
  std::size_t pos = 0;
  auto take = [&](int count) {
    long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size())
        throw ParseError(ParseErrorKind::malformed_header, "truncated vertex count");
      value = (value << 6) | (text[pos++] - 63);
    }
    return value;
  };
  long n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > (1L << 20))
    throw ParseError(ParseErrorKind::malformed_header, "vertex count " + std::to_string(n) +
                                                           " too large");
  const long bits = n * (n - 1) / 2;
  const long chars = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != chars)
    throw ParseError(ParseErrorKind::malformed_body,
                     "expected " + std::to_string(chars) + " body characters, found " +
                         std::to_string(text.size() - pos));
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  if (k % 6) {
    const int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1))
      throw ParseError(ParseErrorKind::malformed_body, "non-zero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  Graph g;
  for (std::size_t i = read_edges(lines, g, true); i < lines.size(); ++i)
    if (!read_label(lines[i], g))
      throw ParseError(ParseErrorKind::malformed_body,
                       "unexpected '" + std::string(lines[i].tokens.front()) + "'", lines[i].number);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edges(out, g);
  write_labels(out, g);
  return out.str();
}

PlanarEmbedding parse_planar(std::string_view text) {
  const auto lines = tokenize(text);
  Graph g;
  std::size_t i = read_edges(lines, g);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> rot(n);
  std::vector<char> seen(n, 0);
  std::optional<Dart> outer;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (read_label(line, g)) continue;
    if (line.tokens.front() == "rot") {
      if (line.tokens.size() < 2)
        throw ParseError(ParseErrorKind::malformed_body, "expected 'rot <v> ...'", line.number);
      const int v = vertex_token(line.tokens[1], n, line.number);
      if (seen[v])
        throw ParseError(ParseErrorKind::malformed_body, "second rotation for vertex " +
                                                             std::to_string(v),
                         line.number);
      seen[v] = 1;
      for (std::size_t t = 2; t < line.tokens.size(); ++t)
        rot[v].push_back(vertex_token(line.tokens[t], n, line.number));
    } else if (line.tokens.front() == "outer") {
      if (line.tokens.size() != 3 || outer)
        throw ParseError(ParseErrorKind::malformed_body, "expected a single 'outer <u> <v>'",
                         line.number);
      outer = Dart{vertex_token(line.tokens[1], n, line.number),
                   vertex_token(line.tokens[2], n, line.number)};
    } else {
      throw ParseError(ParseErrorKind::malformed_body,
                       "unexpected '" + std::string(line.tokens.front()) + "'", line.number);
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(ParseErrorKind::non_symmetric_rotation,
                       "vertex " + std::to_string(v) + " lists a neighbour twice");
    for (int w : sorted) {
      const auto& back = rot[w];
      if (!g.has_edge(v, w) || std::find(back.begin(), back.end(), v) == back.end())
        throw ParseError(ParseErrorKind::non_symmetric_rotation,
                         std::to_string(w) + " in rotation of " + std::to_string(v) +
                             " but not the reverse");
    }
    if (sorted != g.neighbors(v))
      throw ParseError(ParseErrorKind::non_symmetric_rotation,
                       "rotation of vertex " + std::to_string(v) + " misses incident edges");
  }
  if (g.edge_count() > 0 && !outer)
    throw ParseError(ParseErrorKind::missing_outer_face, "no 'outer <u> <v>' line");
  if (outer && !g.has_edge(outer->from, outer->to))
    throw ParseError(ParseErrorKind::missing_outer_face, "outer dart is not an edge");
  return PlanarEmbedding(std::move(g), std::move(rot), outer);
}

std::string to_planar(const PlanarEmbedding& pe) {
  std::ostringstream out;
  write_edges(out, pe.graph());
  for (int v = 0; v < pe.vertex_count(); ++v) {
    out << "rot " << v;
    for (int w : pe.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  std::optional<Dart> outer = pe.outer_dart();
  if (!outer && !pe.outer_faces().empty()) outer = pe.dart(pe.face(pe.outer_faces().front()).front());
  if (outer) out << "outer " << outer->from << ' ' << outer->to << '\n';
  write_labels(out, pe.graph());
  return out.str();
}

TreeDecomposition parse_tree_decomposition(std::string_view text) {
  TreeDecomposition td;
  std::vector<std::pair<long, std::vector<int>>> bags;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.front() == "bag") {
      long id = 0;
      if (line.tokens.size() < 2 || !to_int(line.tokens[1], id) || id < 0)
        throw ParseError(ParseErrorKind::malformed_body, "expected 'bag <id> <v>...'", line.number);
      std::vector<int> bag;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        long v = 0;
        if (!to_int(line.tokens[t], v) || v < 0)
          throw ParseError(ParseErrorKind::vertex_out_of_range, std::string(line.tokens[t]),
                           line.number);
        bag.push_back(static_cast<int>(v));
      }
      bags.emplace_back(id, std::move(bag));
    } else if (line.tokens.front() == "edge") {
      long a = 0, b = 0;
      if (line.tokens.size() != 3 || !to_int(line.tokens[1], a) || !to_int(line.tokens[2], b))
        throw ParseError(ParseErrorKind::malformed_body, "expected 'edge <a> <b>'", line.number);
      td.tree_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    } else {
      throw ParseError(ParseErrorKind::malformed_body,
                       "unexpected '" + std::string(line.tokens.front()) + "'", line.number);
    }
  }
  std::sort(bags.begin(), bags.end());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (bags[i].first != static_cast<long>(i))
      throw ParseError(ParseErrorKind::malformed_body, "bag ids must be 0..B-1, each once");
    auto bag = std::move(bags[i].second);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    td.bags.push_back(std::move(bag));
  }
  for (auto [a, b] : td.tree_edges)
    if (a < 0 || b < 0 || a >= static_cast<int>(td.bags.size()) ||
        b >= static_cast<int>(td.bags.size()))
      throw ParseError(ParseErrorKind::vertex_out_of_range, "tree edge names a missing bag");
  return td;
}

std::string to_tree_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "bag " << i;
    for (int v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

Format parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return Format::graph6;
  if (name == "edges") return Format::edges;
  if (name == "planar") return Format::planar;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (g6, edges, planar)");
}

Format detect_format(std::string_view text) {
  const auto lines = tokenize(text);
  for (const auto& line : lines)
    if (line.tokens.front() == "rot" || line.tokens.front() == "outer") return Format::planar;
  long a = 0;
  if (!lines.empty() && lines.front().tokens.size() == 2 && to_int(lines.front().tokens[0], a) &&
      to_int(lines.front().tokens[1], a))
    return Format::edges;
  return Format::graph6;
}

Graph parse_graph(std::string_view text, Format format) {
  switch (format) {
    case Format::graph6: return parse_graph6(text);
    case Format::edges: return parse_edge_list(text);
    case Format::planar: return parse_planar(text).graph();
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ecg::io
