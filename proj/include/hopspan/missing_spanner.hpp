#ifndef HOPSPAN_MISSING_SPANNER_HPP_
#define HOPSPAN_MISSING_SPANNER_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hopspan/graph.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/paths.hpp"

namespace hopspan {

/// Subgraph G' of G such that every reachable pair has a t-approximate path
/// missing at most r edges from G'. Built level by level from a hopset
/// hierarchy: at level i the hop-budget beta_{i-1} paths of the new level-i
/// hopset edges are computed in G ∪ H_{i-1}, their G-edges join G', and the
/// paths themselves are stored so witnesses can be reconstructed on demand.
class MissingSpanner {
 public:
  struct StoredPath {
    int u, v;
    std::vector<int> verts;
    std::vector<std::uint8_t> in_g;  // per step
  };

  /// Runs the conversion. hierarchy[i] is the level-(i+1) hopset and must
  /// claim a hopbound of at most schedule.betas[i+1]. Throws
  /// construction_error naming the first hopset edge whose claimed-budget
  /// path does not exist.
  static MissingSpanner build(const Graph& g, std::vector<Hopset> hierarchy,
                              BetaSchedule schedule);

  const Graph& graph() const { return g_; }
  const std::vector<Edge>& g_prime() const { return g_prime_; }
  std::uint64_t r() const { return r_; }
  Ratio t() const { return t_; }
  bool reachability_mode() const { return reach_; }
  const BetaSchedule& schedule() const { return schedule_; }
  const std::vector<Hopset>& hierarchy() const { return hierarchy_; }
  const std::vector<std::vector<StoredPath>>& levels() const { return levels_; }

  bool in_g_prime(int u, int v) const;

  /// Witness path for one reachable pair, fully expanded to G edges.
  /// All edges outside G' come from the top hop-budget search; everything
  /// expanded from stored level paths lies inside G'.
  std::vector<int> witness_path(int u, int v) const;

  /// Batch variant: one top-level source run shared by all targets.
  /// Unreachable targets yield nullopt.
  std::vector<std::optional<std::vector<int>>> witness_paths_from(
      int u, std::span<const int> targets) const;

  // Mutation hooks for checker sensitivity tests.
  void tamper_remove_gprime_edge(int u, int v);
  void tamper_remove_stored_step(int level, int idx, int step);

  std::string to_json() const;
  static MissingSpanner from_json(const std::string& text);

 private:
  MissingSpanner() = default;
  void index_edges();
  void expand_edge(int x, int y, int level_below, std::vector<int>& out) const;

  Graph g_;
  std::vector<Edge> g_prime_;
  std::uint64_t r_{0};
  Ratio t_{};
  bool reach_{false};
  std::vector<std::vector<StoredPath>> levels_;  // levels_[i] is level i+1
  std::unordered_map<std::uint64_t, std::pair<int, int>> lowest_;  // key -> (level, idx)
  std::vector<Hopset> hierarchy_;
  BetaSchedule schedule_;
};

}  // namespace hopspan

#endif  // HOPSPAN_MISSING_SPANNER_HPP_
