#include "mcvc/io.hpp"

#include <fstream>
#include <sstream>

#include "mcvc/errors.hpp"

namespace mcvc {
namespace {

// Tokenized line reader that remembers positions for error messages and
// skips blank lines and '#' comments.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(&in), source_(std::move(source)) {}

  bool next_line(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      tokens.clear();
      std::istringstream ss(line);
      std::string token;
      while (ss >> token) {
        if (token.front() == '#') break;
        tokens.push_back(token);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error(source_ + ":" + std::to_string(line_no_) + ": " + what);
  }

  std::vector<std::string> expect_line(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next_line(tokens)) fail("unexpected end of file, expected " + what);
    return tokens;
  }

 private:
  std::istream* in_;
  std::string source_;
  int line_no_ = 0;
};

int parse_int(const LineReader& reader, const std::string& token) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    reader.fail("expected an integer, got '" + token + "'");
  }
}

Rational parse_weight(const LineReader& reader, const std::string& token) {
  auto dot = token.find('.');
  if (dot != std::string::npos && token.size() - dot - 1 > 9) {
    reader.fail("weights carry at most 9 fractional digits: '" + token + "'");
  }
  try {
    return Rational::from_decimal(token);
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
}

VertexSet parse_indices(const LineReader& reader, const std::vector<std::string>& tokens,
                        std::size_t from) {
  VertexSet out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    out.push_back(parse_int(reader, tokens[i]));
  }
  return out;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  return in;
}

}  // namespace

std::string format_weight(const Rational& w) {
  std::string text = w.to_decimal_string();
  auto dot = text.find('.');
  if (dot != std::string::npos && text.size() - dot - 1 > 9) {
    throw input_error("weight " + w.to_string() + " needs more than 9 fractional digits");
  }
  return text;
}

InstanceFileType sniff_file_type(const std::string& path) {
  std::ifstream in = open_file(path);
  LineReader reader(in, path);
  auto tokens = reader.expect_line("a file header");
  if (tokens[0] == "graph") return InstanceFileType::Graph;
  if (tokens[0] == "hgraph") return InstanceFileType::Hypergraph;
  if (tokens[0] == "matroid") return InstanceFileType::Matroid;
  if (tokens[0] == "stream") return InstanceFileType::Stream;
  reader.fail("unknown header keyword '" + tokens[0] + "'");
}

WeightedGraph read_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto header = reader.expect_line("'graph <n> <m>'");
  if (header[0] != "graph" || header.size() != 3) reader.fail("expected 'graph <n> <m>'");
  int n = parse_int(reader, header[1]);
  int m = parse_int(reader, header[2]);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) {
    auto tokens = reader.expect_line("'e <u> <v> <w>'");
    if (tokens[0] != "e" || tokens.size() != 4) reader.fail("expected 'e <u> <v> <w>'");
    edges.push_back(Edge{parse_int(reader, tokens[1]), parse_int(reader, tokens[2]),
                         parse_weight(reader, tokens[3])});
  }
  try {
    return WeightedGraph(n, std::move(edges));
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << " " << e.v << " " << format_weight(e.w) << "\n";
  }
}

WeightedHypergraph read_hypergraph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto header = reader.expect_line("'hgraph <n> <m> <eta>'");
  if (header[0] != "hgraph" || header.size() != 4) reader.fail("expected 'hgraph <n> <m> <eta>'");
  int n = parse_int(reader, header[1]);
  int m = parse_int(reader, header[2]);
  int eta = parse_int(reader, header[3]);
  std::vector<HyperEdge> edges;
  for (int i = 0; i < m; ++i) {
    auto tokens = reader.expect_line("'he <w> <idx...>'");
    if (tokens[0] != "he" || tokens.size() < 3) reader.fail("expected 'he <w> <idx...>'");
    HyperEdge e;
    e.w = parse_weight(reader, tokens[1]);
    e.vertices = parse_indices(reader, tokens, 2);
    edges.push_back(std::move(e));
  }
  try {
    return WeightedHypergraph(n, std::move(edges), eta);
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
}

WeightedHypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_hypergraph(in, path);
}

void write_hypergraph(std::ostream& out, const WeightedHypergraph& g) {
  out << "hgraph " << g.vertex_count() << " " << g.edge_count() << " " << g.eta() << "\n";
  for (const HyperEdge& e : g.edges()) {
    out << "he " << format_weight(e.w);
    for (int v : e.vertices) out << " " << v;
    out << "\n";
  }
}

Matroid read_matroid(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto header = reader.expect_line("'matroid <kind> <n>'");
  if (header[0] != "matroid" || header.size() != 3) reader.fail("expected 'matroid <kind> <n>'");
  MatroidKind kind;
  try {
    kind = matroid_kind_from_string(header[1]);
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
  int n = parse_int(reader, header[2]);

  std::vector<Constraint> constraints;
  std::vector<VertexSet> groups;
  int uniform_k = -1;
  std::vector<std::string> tokens;
  while (reader.next_line(tokens)) {
    const std::string& tag = tokens[0];
    if (tag == "uniform") {
      if (kind != MatroidKind::Uniform || tokens.size() != 2) reader.fail("unexpected 'uniform' line");
      uniform_k = parse_int(reader, tokens[1]);
    } else if (tag == "part" || tag == "laminar") {
      bool expect_part = kind == MatroidKind::Partition;
      if ((tag == "part") != expect_part || tokens.size() < 2) {
        reader.fail("unexpected '" + tag + "' line for a " + to_string(kind) + " matroid");
      }
      Constraint c;
      c.bound = parse_int(reader, tokens[1]);
      c.elements = parse_indices(reader, tokens, 2);
      constraints.push_back(std::move(c));
    } else if (tag == "tset") {
      if (kind != MatroidKind::Transversal) reader.fail("unexpected 'tset' line");
      groups.push_back(parse_indices(reader, tokens, 1));
    } else if (tag == "base") {
      if (kind != MatroidKind::Explicit) reader.fail("unexpected 'base' line");
      groups.push_back(parse_indices(reader, tokens, 1));
    } else {
      reader.fail("unknown matroid line '" + tag + "'");
    }
  }

  try {
    switch (kind) {
      case MatroidKind::Uniform:
        if (uniform_k < 0) throw input_error("missing 'uniform <k>' line");
        return Matroid::uniform(n, uniform_k);
      case MatroidKind::Partition:
        return Matroid::partition(n, std::move(constraints));
      case MatroidKind::Laminar:
        return Matroid::laminar(n, std::move(constraints));
      case MatroidKind::Transversal:
        return Matroid::transversal(n, std::move(groups));
      case MatroidKind::Explicit:
        return Matroid::explicit_bases(n, std::move(groups));
    }
    throw internal_error("unknown matroid kind");
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
}

Matroid read_matroid_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_matroid(in, path);
}

void write_matroid(std::ostream& out, const Matroid& m) {
  out << "matroid " << to_string(m.kind()) << " " << m.ground_size() << "\n";
  switch (m.kind()) {
    case MatroidKind::Uniform:
      out << "uniform " << m.uniform_rank() << "\n";
      break;
    case MatroidKind::Partition:
      for (const Constraint& c : m.parts()) {
        out << "part " << c.bound;
        for (int v : c.elements) out << " " << v;
        out << "\n";
      }
      break;
    case MatroidKind::Laminar:
      for (const Constraint& c : m.laminar_sets()) {
        out << "laminar " << c.bound;
        for (int v : c.elements) out << " " << v;
        out << "\n";
      }
      break;
    case MatroidKind::Transversal:
      for (const VertexSet& set : m.transversal_sets()) {
        out << "tset";
        for (int v : set) out << " " << v;
        out << "\n";
      }
      break;
    case MatroidKind::Explicit:
      for (const VertexSet& base : m.bases()) {
        out << "base";
        for (int v : base) out << " " << v;
        out << "\n";
      }
      break;
  }
}

EdgeStream read_stream(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto header = reader.expect_line("'stream <edge|incidence> <n>'");
  if (header[0] != "stream" || header.size() != 3) {
    reader.fail("expected 'stream <edge|incidence> <n>'");
  }
  int n = parse_int(reader, header[2]);
  std::vector<std::string> tokens;
  try {
    if (header[1] == "edge") {
      std::vector<StreamItem> items;
      while (reader.next_line(tokens)) {
        if (tokens[0] != "e" || tokens.size() != 4) reader.fail("expected 'e <u> <v> <w>'");
        items.push_back(StreamItem{parse_int(reader, tokens[1]), parse_int(reader, tokens[2]),
                                   parse_weight(reader, tokens[3])});
      }
      return EdgeStream::edge_arrival(n, std::move(items));
    }
    if (header[1] == "incidence") {
      std::vector<IncidenceGroup> groups;
      while (reader.next_line(tokens)) {
        if (tokens[0] == "v" && tokens.size() == 2) {
          groups.push_back(IncidenceGroup{parse_int(reader, tokens[1]), {}});
        } else if (tokens[0] == "e" && tokens.size() == 4) {
          if (groups.empty()) reader.fail("edge line before the first 'v <idx>' group header");
          groups.back().edges.push_back(StreamItem{parse_int(reader, tokens[1]),
                                                   parse_int(reader, tokens[2]),
                                                   parse_weight(reader, tokens[3])});
        } else {
          reader.fail("expected 'v <idx>' or 'e <u> <v> <w>'");
        }
      }
      return EdgeStream::incidence(n, std::move(groups));
    }
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
  reader.fail("unknown stream mode '" + header[1] + "'");
}

EdgeStream read_stream_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_stream(in, path);
}

void write_stream(std::ostream& out, const EdgeStream& s) {
  if (s.mode() == StreamMode::EdgeArrival) {
    out << "stream edge " << s.vertex_count() << "\n";
    for (const StreamItem& item : s.items()) {
      out << "e " << item.u << " " << item.v << " " << format_weight(item.w) << "\n";
    }
    return;
  }
  out << "stream incidence " << s.vertex_count() << "\n";
  for (const IncidenceGroup& group : s.groups()) {
    out << "v " << group.vertex << "\n";
    for (const StreamItem& item : group.edges) {
      out << "e " << item.u << " " << item.v << " " << format_weight(item.w) << "\n";
    }
  }
}

}  // namespace mcvc
