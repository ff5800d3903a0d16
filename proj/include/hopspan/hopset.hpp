#ifndef HOPSPAN_HOPSET_HPP_
#define HOPSPAN_HOPSET_HPP_

#include <functional>
#include <string>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

// Fixed constants behind the asymptotic knobs. Landmark sets have exactly
// min(n, ceil(kSampleScale * n * ln n / radius)) vertices; claimed hopbounds
// carry a factor-kHopSlack cushion; the undirected budget recurrence bottoms
// out at kFloorScale * (k/eps)^k.
inline constexpr double kSampleScale = 4.0;  // c_L
inline constexpr std::uint64_t kHopSlack = 3;  // c_h
inline constexpr double kFloorScale = 4.0;   // c_f

enum class ApproxKind { Exact, Multiplicative, Reachability };

struct ApproxMode {
  ApproxKind kind{ApproxKind::Exact};
  Eps eps{};  // only meaningful for Multiplicative

  static ApproxMode exact() { return {ApproxKind::Exact, {}}; }
  static ApproxMode mult(Eps e) { return {ApproxKind::Multiplicative, e}; }
  static ApproxMode reach() { return {ApproxKind::Reachability, {}}; }
};

std::string approx_mode_name(const ApproxMode& m);
ApproxMode parse_approx_mode(const std::string& name, const std::string& eps_text);

/// Weighted edge set over V x V that shortens approximate shortest paths to
/// at most `beta` hops when added to the host graph. In Exact/Multiplicative
/// modes every edge carries the exact G-distance of its endpoints; in
/// Reachability mode weights are ignored.
struct Hopset {
  std::vector<Edge> edges;
  std::uint64_t beta{1};
  ApproxMode mode{};
  std::uint64_t seed{0};
};

/// Handle to a pluggable hopset construction with a declared size tradeoff:
/// roughly n^2 / beta^a edges for every beta <= n^b.
struct BaseAlgorithm {
  std::string name;
  double a{2.0};
  double b{0.0};
  std::function<Hopset(const Graph&, std::uint64_t beta, ApproxMode, std::uint64_t seed)> run;

  static BaseAlgorithm tcw();  // weighted transitive closure, a=2 b=0
};

/// Decreasing hop-budget sequence n = beta_0 >= ... >= beta_ell driving the
/// level-by-level conversion into a bounded-missing spanner.
struct BetaSchedule {
  enum class Regime { DirectedCase1, DirectedCase2, Undirected, Custom };

  Regime regime{Regime::Custom};
  std::vector<std::uint64_t> betas;  // betas[0] = n, size ell+1
  std::vector<double> exps;          // unrounded exponents log_n(beta_i)
  std::vector<Eps> eps;              // per level, size ell
  double D{0}, D1{0}, D2{0}, k{0}, alpha{0};
  std::uint64_t ell{0};

  static BetaSchedule custom(std::uint64_t n, std::vector<std::uint64_t> betas,
                             std::vector<Eps> eps);
};

/// Exact beta=1 hopset: the weighted transitive closure minus edges G
/// already realizes at their shortest-path weight.
Hopset base_tcw(const Graph& g);

/// Landmark reduction turning a base construction that only works up to
/// beta <= n^b into one for larger hopbounds: sample landmarks, connect
/// landmark pairs whose shortest paths use few hops, run the base on that
/// net. The returned hopset claims hopbound kHopSlack * beta' * q^{-1}.
Hopset sublinear_from_superlinear(const Graph& g, const BaseAlgorithm& base,
                                  std::uint64_t beta, ApproxMode mode,
                                  std::uint64_t seed);

/// Classic landmark hopset: closure over a Theta(n log n / beta) sample.
/// Claims hopbound 2*beta + 1.
Hopset folklore_exact_hopset(const Graph& g, std::uint64_t beta, std::uint64_t seed);

/// Undirected variant keyed by a hop radius D instead of a sampling rate.
Hopset undirected_sublinear_hopset(const Graph& g, const BaseAlgorithm& base,
                                   std::uint64_t D, ApproxMode mode,
                                   std::uint64_t seed);

/// Reachability-only landmark shortcuts; claims hop diameter kHopSlack * d.
Hopset shortcut_folklore(const Graph& g, std::uint64_t d, std::uint64_t seed);

/// Budget schedule for directed pipelines. Case 1 (few pairs) telescopes
/// (n/beta_i)^k * beta_{i-1} to a constant; Case 2 (many pairs) appends a
/// second half converging to (n^2/p)^{1/a}.
BetaSchedule schedule_directed(std::uint64_t n, std::uint64_t p, double a, double b,
                               Eps eps_total);

/// Budget schedule for undirected pipelines:
/// beta_i = max(beta_{i-1}^{1 - 2^{-k-1}} / 2, floor), stopping at the floor.
BetaSchedule schedule_undirected(std::uint64_t n, int k, Eps eps_level);

/// Builds one hopset per schedule level whose claimed hopbound is at most
/// the level budget (internal radii are scaled down by kHopSlack).
/// mode Reachability uses shortcut_folklore regardless of `base`.
std::vector<Hopset> build_hierarchy(const Graph& g, const BaseAlgorithm& base,
                                    const BetaSchedule& schedule, ApproxMode mode,
                                    std::uint64_t seed);

}  // namespace hopspan

#endif  // HOPSPAN_HOPSET_HPP_
