#pragma once

#include <iosfwd>
#include <string>

#include "mcvc/graph.hpp"
#include "mcvc/matroid.hpp"
#include "mcvc/streaming.hpp"

namespace mcvc {

// Text formats (0-based indices, whitespace-separated, '#' comments):
//   graph  <n> <m>            then m lines   e <u> <v> <w>
//   hgraph <n> <m> <eta>      then m lines   he <w> <idx...>
//   matroid <kind> <n>        then per kind:
//     uniform <k>
//     part <k_i> <idx...>     (repeated)
//     laminar <k_i> <idx...>  (repeated)
//     tset <idx...>           (repeated)
//     base <idx...>           (repeated)
//   stream <edge|incidence> <n>
//     edge mode:      e <u> <v> <w>
//     incidence mode: v <idx> group headers, each followed by its e lines
// Weights are decimals with at most 9 fractional digits.

enum class InstanceFileType { Graph, Hypergraph, Matroid, Stream };

// Inspects the first keyword. `source` names the file in error messages.
InstanceFileType sniff_file_type(const std::string& path);

WeightedGraph read_graph(std::istream& in, const std::string& source = "<stream>");
WeightedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);

WeightedHypergraph read_hypergraph(std::istream& in, const std::string& source = "<stream>");
WeightedHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const WeightedHypergraph& g);

Matroid read_matroid(std::istream& in, const std::string& source = "<stream>");
Matroid read_matroid_file(const std::string& path);
void write_matroid(std::ostream& out, const Matroid& m);

EdgeStream read_stream(std::istream& in, const std::string& source = "<stream>");
EdgeStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const EdgeStream& s);

// Decimal rendering with at most 9 fractional digits; throws input_error for
// weights that have no such finite expansion.
std::string format_weight(const Rational& w);

}  // namespace mcvc
