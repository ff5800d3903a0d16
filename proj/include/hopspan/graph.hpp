#ifndef HOPSPAN_GRAPH_HPP_
#define HOPSPAN_GRAPH_HPP_

#include <span>
#include <utility>
#include <vector>

#include "hopspan/util.hpp"

namespace hopspan {

struct Edge {
  int u{0};
  int v{0};
  Weight w{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable weighted graph, directed or undirected. Vertex ids are dense in
/// [0, n). Construction canonicalizes the edge list: undirected edges are
/// normalized to u < v, parallel edges collapse to the minimum weight, and
/// the list is sorted, so equal graphs serialize byte-identically.
/// Instances are safe for concurrent reads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, bool directed, std::vector<Edge> edges);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t m() const { return edges_.size(); }
  Weight w_max() const { return w_max_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Outgoing arcs of u; for undirected graphs both orientations appear.
  std::span<const std::pair<int, Weight>> out(int u) const;

  /// True if the (canonicalized) edge exists; fills w with its weight.
  bool has_edge(int u, int v, Weight* w = nullptr) const;

 private:
  int n_{0};
  bool directed_{true};
  std::vector<Edge> edges_;
  Weight w_max_{0};
  std::vector<std::int64_t> adj_off_;
  std::vector<std::pair<int, Weight>> adj_;
};

/// Ordered demand pairs, deduplicated and sorted.
struct PairSet {
  std::vector<std::pair<int, int>> pairs;

  PairSet() = default;
  PairSet(int n, std::vector<std::pair<int, int>> raw);  // validates ids
  std::size_t p() const { return pairs.size(); }
};

struct ClosureEntry {
  int u{0};
  int v{0};
  dist_t dist{0};
};

/// Weighted transitive closure: one entry per ordered reachable pair (u != v),
/// annotated with the exact shortest-path distance.
std::vector<ClosureEntry> transitive_closure(const Graph& g);

}  // namespace hopspan

#endif  // HOPSPAN_GRAPH_HPP_
