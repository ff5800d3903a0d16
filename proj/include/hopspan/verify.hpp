#ifndef HOPSPAN_VERIFY_HPP_
#define HOPSPAN_VERIFY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopspan/derived.hpp"
#include "hopspan/graph.hpp"
#include "hopspan/hopset.hpp"
#include "hopspan/missing_spanner.hpp"

namespace hopspan {

// Brute-force checkers. Every distance they consult comes from the serial
// reference kernels below, never from the construction-side code in
// paths.cpp, so a bug cannot cancel itself out.

struct Counterexample {
  int u{-1}, v{-1};
  std::string observed;
  std::string bound;
};

struct VerificationReport {
  std::string property;
  bool pass{true};
  std::uint64_t pairs_checked{0};
  double worst_stretch{0.0};   // observed/allowed style ratio where it applies
  std::uint64_t worst_hops{0};
  std::uint64_t worst_missing{0};
  std::optional<Counterexample> counterexample;
  bool sampled{false};
  std::uint64_t sample_cap{0};

  std::string to_text() const;
  std::string to_json() const;
};

// Exhaustive pair enumeration is capped; larger instances check a uniform
// sample of pairs and say so in the report.
inline constexpr int kExhaustiveCap = 256;
inline constexpr std::uint64_t kSamplePairs = 10000;

/// Serial reference single-source distances (round-based relaxation with
/// early exit). Kept deliberately independent of the Dijkstra kernels.
std::vector<dist_t> ref_sssp(const Graph& g, int source);

/// Serial reference hop-bounded single-source distances over g ∪ extra.
std::vector<dist_t> ref_hop_sssp(const Graph& g, std::span<const Edge> extra,
                                 std::uint64_t budget, int source, bool unit_weights);

/// Unweighted hop counts over g ∪ extra (reachability oracle).
std::vector<std::uint64_t> ref_bfs_hops(const Graph& g, std::span<const Edge> extra,
                                        int source);

/// dist_G <= dist^{(beta_claim)}_{G∪H} and the per-mode upper bound, for
/// every reachable pair.
VerificationReport check_hopset(const Graph& g, const Hopset& h, std::uint64_t beta_claim,
                                const ApproxMode& mode);

/// Reconstructs every witness, recomputes its length edge by edge, and
/// checks the stretch bound, the missing budget, and the level-sum size
/// inequality.
VerificationReport check_missing_spanner(const Graph& g, const MissingSpanner& ms);

struct StretchScope {
  enum class Kind { AllPairs, Pairs, Sourcewise, Slack };
  Kind kind{Kind::AllPairs};
  PairSet pairs;             // Pairs
  std::vector<int> sources;  // Sourcewise
  Eps slack_eps;             // Slack

  static StretchScope all_pairs() { return {}; }
  static StretchScope for_pairs(PairSet p);
  static StretchScope sourcewise(std::vector<int> s);
  static StretchScope slack(Eps e);
};

/// dist_result <= alpha * dist_G + beta_add over the scope, compared in
/// exact integer arithmetic. Slack scope ranks per-vertex distances (ties by
/// id) and exempts the floor(eps*n) nearest.
VerificationReport check_stretch(const Graph& g, const SubgraphResult& result,
                                 const StretchScope& scope, Ratio alpha, dist_t beta_add);

/// Every transitive-closure pair within d_claim hops in G ∪ H.
VerificationReport check_shortcut(const Graph& g, const Hopset& h, std::uint64_t d_claim);

}  // namespace hopspan

#endif  // HOPSPAN_VERIFY_HPP_
