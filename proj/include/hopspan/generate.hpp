#ifndef HOPSPAN_GENERATE_HPP_
#define HOPSPAN_GENERATE_HPP_

#include <cstdint>
#include <string>

#include "hopspan/graph.hpp"

namespace hopspan {

enum class GraphKind { Path, Cycle, Grid, Gnp, RandomDag, Layered };

GraphKind parse_graph_kind(const std::string& name);
std::string graph_kind_name(GraphKind k);

/// Deterministic generator parameters. The same spec and seed always produce
/// the same graph, byte for byte.
struct GeneratorSpec {
  GraphKind kind{GraphKind::Path};
  int n{0};              // vertex count (grid/layered derive it when 0)
  bool directed{false};
  double density{0.1};   // gnp / random-dag / layered edge probability
  int rows{0}, cols{0};  // grid
  int layers{0}, width{0};  // layered
  Weight w_min{1}, w_max{1};
  std::uint64_t seed{0};
};

Graph generate_graph(const GeneratorSpec& spec);

}  // namespace hopspan

#endif  // HOPSPAN_GENERATE_HPP_
