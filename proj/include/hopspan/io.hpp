#ifndef HOPSPAN_IO_HPP_
#define HOPSPAN_IO_HPP_

#include <string>

#include "hopspan/derived.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/hopset.hpp"

namespace hopspan {

enum class GraphFormat { EdgeList, DimacsGr };

GraphFormat format_from_path(const std::string& path);  // .gr -> DIMACS

/// Edge list: "u v w" per line, '#' comments, ids 0-based.
/// DIMACS: "p sp n m" header then "a u v w" arcs, ids 1-based, directed.
/// Malformed lines raise parse_error with the line number; negative weights
/// raise std::invalid_argument.
Graph load_graph(const std::string& path, GraphFormat format, bool directed);
Graph load_graph(const std::string& path, bool directed);  // infer format

void save_graph(const Graph& g, const std::string& path);

/// "# hopset beta=<beta> mode=<mode> seed=<seed>" header then edges.
void save_hopset(const Hopset& h, const std::string& path);
Hopset load_hopset(const std::string& path);

/// One-line JSON claim header then the edge list.
void save_result(const SubgraphResult& r, const std::string& path);
SubgraphResult load_result(const std::string& path);

PairSet load_pairs(const std::string& path, int n);
void save_pairs(const PairSet& p, const std::string& path);

}  // namespace hopspan

#endif  // HOPSPAN_IO_HPP_
