#ifndef HOPSPAN_PATHS_HPP_
#define HOPSPAN_PATHS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

/// Adjacency over G plus an extra weighted edge set (typically a hopset).
/// Parallel arcs collapse to the lightest one; ties keep the G arc so that
/// extracted paths prefer real graph edges. With unit_weights every arc
/// counts 1, which turns the relaxation kernels into reachability searches.
class WorkGraph {
 public:
  WorkGraph(const Graph& g, std::span<const Edge> extra, bool unit_weights);

  struct Arc {
    int to;
    Weight w;
    bool in_g;
  };

  int n() const { return n_; }
  std::span<const Arc> out(int u) const {
    return {arcs_.data() + off_[u], arcs_.data() + off_[u + 1]};
  }
  const Arc* find(int u, int v) const;  // nullptr if absent

 private:
  int n_{0};
  std::vector<std::int64_t> off_;
  std::vector<Arc> arcs_;
};

/// Hop-indexed label history from one source: every strict improvement of a
/// vertex label is recorded with the round it happened in, so dist_at(v, r)
/// answers "shortest length using at most r edges" for every r at once, and
/// path_at reconstructs a witness path with at most r edges.
///
/// Tie-breaking is deterministic: at equal length the fewer-hop path wins,
/// then the lower predecessor id.
class SourceLabels {
 public:
  struct Entry {
    std::uint32_t round;
    dist_t d;
    std::int32_t parent;
  };

  int source() const { return src_; }
  dist_t dist_at(int v, std::uint64_t budget) const;
  dist_t final_dist(int v) const;
  bool reachable(int v) const { return v == src_ || !hist_[v].empty(); }
  /// Minimal hop count that already achieves final_dist(v).
  std::uint32_t final_round(int v) const;
  std::optional<std::vector<int>> path_at(int v, std::uint64_t budget) const;

  int src_{0};
  std::vector<std::vector<Entry>> hist_;
};

/// Serial per-source kernel: rounds of edge relaxations with early exit once
/// a round makes no improvement. max_rounds is clamped to n-1 internally.
SourceLabels relax_rounds(const WorkGraph& wg, int source, std::uint64_t max_rounds);

/// Dense distance table.
struct DistMatrix {
  int n{0};
  std::vector<dist_t> d;
  dist_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

/// Exact all-pairs distances: one Dijkstra per source, parallel across
/// sources via OpenMP. See verify.hpp for the serial reference oracle.
DistMatrix apsp_exact(const Graph& g);

struct SsspTree {
  std::vector<dist_t> dist;
  std::vector<int> parent;  // -1 at sources and unreached vertices
  std::vector<int> root;    // nearest source per vertex (multi-source runs)
};

SsspTree dijkstra_tree(const Graph& g, int source);
/// Virtual-source Dijkstra over several roots; nearest-root ties go to the
/// lower root id, then the lower parent id.
SsspTree dijkstra_tree_multi(const Graph& g, std::span<const int> sources);

/// Hop-bounded all-pairs (or selected-source) shortest paths over G ∪ extra.
class HopBoundedPaths {
 public:
  HopBoundedPaths(const Graph& g, std::span<const Edge> extra, std::uint64_t budget,
                  std::span<const int> sources, bool unit_weights = false);

  std::uint64_t budget() const { return budget_; }
  const std::vector<int>& sources() const { return sources_; }
  dist_t dist(int u, int v) const;  // u must be a requested source
  std::optional<std::vector<int>> path(int u, int v) const;
  const SourceLabels& labels_for(int u) const;

 private:
  std::uint64_t budget_{0};
  std::vector<int> sources_;
  std::vector<int> source_index_;
  std::vector<SourceLabels> labels_;
};

HopBoundedPaths apsp_hop_bounded(const Graph& g, std::span<const Edge> extra,
                                 std::uint64_t budget,
                                 std::span<const int> sources = {});

/// Smallest hop budget at which the exact u-v distance is realized;
/// nullopt if v is unreachable from u.
std::optional<std::uint64_t> min_hops(const Graph& g, int u, int v);

/// Greedy multiplicative spanner: scan edges by nondecreasing weight (ties by
/// endpoint ids) and keep an edge unless the current spanner already covers
/// it within stretch 2k-1. Undirected graphs only.
std::vector<Edge> greedy_spanner(const Graph& g, int k);

}  // namespace hopspan

#endif  // HOPSPAN_PATHS_HPP_
