#ifndef HOPSPAN_DERIVED_HPP_
#define HOPSPAN_DERIVED_HPP_

#include <span>
#include <string>
#include <vector>

#include "hopspan/graph.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/missing_spanner.hpp"

namespace hopspan {

/// Output of the downstream constructions. Everything except emulators is a
/// subgraph of the host graph; emulators may carry non-G weighted edges and
/// are queried as standalone graphs.
struct SubgraphResult {
  enum class Kind {
    Preserver,
    ReachabilityPreserver,
    NearAdditiveSpanner,
    Emulator,
    Sourcewise,
    Slack,
  };

  Kind kind{Kind::Preserver};
  std::vector<Edge> edges;
  Ratio alpha{Ratio::one()};
  dist_t beta_add{0};
  std::uint64_t seed{0};
  std::string schedule_desc;
  std::vector<std::pair<int, int>> skipped_pairs;  // unreachable demands
};

std::string result_kind_name(SubgraphResult::Kind k);

/// G' plus the missing witness edges of each demand pair.
/// |edges| <= |G'| + p * r holds exactly; unreachable pairs are skipped and
/// reported in skipped_pairs.
SubgraphResult preserver_from_missing(const MissingSpanner& ms, const PairSet& pairs);

/// schedule_directed -> hierarchy -> missing spanner -> preserver.
SubgraphResult directed_preserver_pipeline(const Graph& g, const PairSet& pairs,
                                           const BaseAlgorithm& base, Eps eps_total,
                                           std::uint64_t seed);

/// Hopset ∪ (2k-1)-spanner; stretch (1+eps)d + (2k-1)*beta on unweighted
/// undirected graphs.
SubgraphResult emulator_from_hopset(const Graph& g, const Hopset& h, int k);

/// Subgraph form: hopset edges of weight <= 10k*beta/eps are replaced by
/// their shortest G-paths; stretch (1+2eps, (2k-1)*beta).
SubgraphResult spanner_from_emulator(const Graph& g, const Hopset& h, int k, Eps eps);

/// Missing spanner of the hierarchy ∪ (2^{k+1}-1)-spanner; additive term
/// 4 * 2^k * w_max * r on weighted undirected graphs.
SubgraphResult weighted_near_additive_spanner(const Graph& g, const BetaSchedule& schedule,
                                              const std::vector<Hopset>& hopsets, int k);

/// schedule_undirected -> hierarchy -> missing spanner -> preserver.
SubgraphResult undirected_preserver_pipeline(const Graph& g, const PairSet& pairs, int k,
                                             Eps eps_level, std::uint64_t seed);

/// Preserver over a (2k-1)-spanner of the source distance clique, plus the
/// shortest-path forest to each vertex's nearest source. Stretch
/// (4k-1) * (1 + accumulated pipeline error) for all S x V pairs.
SubgraphResult sourcewise_spanner(const Graph& g, std::span<const int> sources, int k,
                                  Eps eps_level, std::uint64_t seed);

/// Chunks of at most n^{(k-1)/k} sources, each handled at parameter k-1.
std::vector<std::vector<int>> partition_sources(std::span<const int> sources,
                                                std::uint64_t n, int k);
SubgraphResult sourcewise_spanner_partitioned(const Graph& g, std::span<const int> sources,
                                              int k, Eps eps_level, std::uint64_t seed);

/// Net of at most ceil(1/eps) vertices such that everyone is within twice
/// its eps-ball radius of the net. radius[x] is the distance to the
/// ceil(eps*n)-th nearest vertex (counting x itself).
struct DensityNet {
  std::vector<int> net;
  std::vector<dist_t> radius;
};

DensityNet density_net(const Graph& g, Eps eps);

/// Slack spanner: nearest-net shortest paths plus a preserver over the edges
/// of a (2k-1)-spanner of the net distance clique. The claimed stretch
/// 5 + 6(2k-1)(1+eps'') covers every pair outside each other's eps-ball.
SubgraphResult slack_spanner(const Graph& g, Eps eps, int k, std::uint64_t seed);

/// Shortcut hierarchy -> missing spanner (reachability mode) -> per-pair
/// path completion. Preserves reachability for every demand pair in TC(G).
SubgraphResult reachability_preserver_pipeline(const Graph& g, const PairSet& pairs,
                                               std::uint64_t seed);

}  // namespace hopspan

#endif  // HOPSPAN_DERIVED_HPP_
