#include "hopspan/generate.hpp"

#include <algorithm>

namespace hopspan {

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "path") return GraphKind::Path;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "grid") return GraphKind::Grid;
  if (name == "gnp" || name == "gnp-random") return GraphKind::Gnp;
  if (name == "dag" || name == "random-dag") return GraphKind::RandomDag;
  if (name == "layered") return GraphKind::Layered;
  throw std::invalid_argument("unknown graph kind: " + name);
}

std::string graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Path: return "path";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Grid: return "grid";
    case GraphKind::Gnp: return "gnp";
    case GraphKind::RandomDag: return "random-dag";
    case GraphKind::Layered: return "layered";
  }
  return "?";
}

namespace {

Weight draw_weight(std::mt19937_64& gen, const GeneratorSpec& s) {
  if (s.w_min > s.w_max) throw std::invalid_argument("generator: w_min > w_max");
  if (s.w_min == s.w_max) return s.w_min;
  return s.w_min + rng_below(gen, s.w_max - s.w_min + 1);
}

}  // namespace

Graph generate_graph(const GeneratorSpec& spec) {
  GeneratorSpec s = spec;
  if (s.kind == GraphKind::Grid) {
    if (s.rows <= 0 || s.cols <= 0) throw std::invalid_argument("grid: rows/cols required");
    s.n = s.rows * s.cols;
  }
  if (s.kind == GraphKind::Layered) {
    if (s.layers <= 0 || s.width <= 0) throw std::invalid_argument("layered: layers/width required");
    s.n = s.layers * s.width;
  }
  if (s.n <= 0) throw std::invalid_argument("generator: n must be positive");

  std::mt19937_64 gen(s.seed);
  std::vector<Edge> edges;

  switch (s.kind) {
    case GraphKind::Path:
      for (int i = 0; i + 1 < s.n; ++i) edges.push_back({i, i + 1, draw_weight(gen, s)});
      break;
    case GraphKind::Cycle:
      for (int i = 0; i + 1 < s.n; ++i) edges.push_back({i, i + 1, draw_weight(gen, s)});
      if (s.n > 2) edges.push_back({s.n - 1, 0, draw_weight(gen, s)});
      break;
    case GraphKind::Grid:
      for (int r = 0; r < s.rows; ++r) {
        for (int c = 0; c < s.cols; ++c) {
          int id = r * s.cols + c;
          if (c + 1 < s.cols) edges.push_back({id, id + 1, draw_weight(gen, s)});
          if (r + 1 < s.rows) edges.push_back({id, id + s.cols, draw_weight(gen, s)});
        }
      }
      break;
    case GraphKind::Gnp:
      for (int u = 0; u < s.n; ++u) {
        for (int v = s.directed ? 0 : u + 1; v < s.n; ++v) {
          if (u == v) continue;
          if (rng_unit(gen) < s.density) edges.push_back({u, v, draw_weight(gen, s)});
        }
      }
      break;
    case GraphKind::RandomDag:
      // vertex ids are the topological order: all edges point forward
      for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
          if (rng_unit(gen) < s.density) edges.push_back({u, v, draw_weight(gen, s)});
        }
      }
      s.directed = true;
      break;
    case GraphKind::Layered:
      for (int l = 0; l + 1 < s.layers; ++l) {
        for (int a = 0; a < s.width; ++a) {
          for (int b = 0; b < s.width; ++b) {
            if (rng_unit(gen) < s.density)
              edges.push_back({l * s.width + a, (l + 1) * s.width + b, draw_weight(gen, s)});
          }
        }
      }
      s.directed = true;
      break;
  }
  return Graph(s.n, s.directed, std::move(edges));
}

}  // namespace hopspan
