#include "hopspan/hopset.hpp"

#include <algorithm>
#include <cmath>

#include "hopspan/paths.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopspan {

std::string approx_mode_name(const ApproxMode& m) {
  switch (m.kind) {
    case ApproxKind::Exact: return "exact";
    case ApproxKind::Multiplicative:
      return "mult:" + std::to_string(m.eps.num) + "/" + std::to_string(m.eps.den);
    case ApproxKind::Reachability: return "reach";
  }
  return "?";
}

ApproxMode parse_approx_mode(const std::string& name, const std::string& eps_text) {
  if (name == "exact") return ApproxMode::exact();
  if (name == "reach" || name == "reachability") return ApproxMode::reach();
  if (name == "mult" || name == "multiplicative") {
    Eps e = parse_eps(eps_text);
    if (e.is_zero()) throw std::invalid_argument("multiplicative mode needs eps in (0,1)");
    return ApproxMode::mult(e);
  }
  auto colon = name.find(':');
  if (colon != std::string::npos)
    return parse_approx_mode(name.substr(0, colon), name.substr(colon + 1));
  throw std::invalid_argument("unknown approximation mode: " + name);
}

namespace {

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

Weight narrow_weight(dist_t d) {
  if (d > std::numeric_limits<Weight>::max())
    throw std::overflow_error("distance does not fit an edge weight");
  return static_cast<Weight>(d);
}

// Exact landmark count: min(n, ceil(kSampleScale * n * ln n * rate)), drawn
// as a seeded shuffle so the size bound is a hard guarantee, not a tail
// event.
std::vector<int> sample_landmarks(int n, double rate, std::uint64_t seed) {
  double want = kSampleScale * n * std::log(std::max(2, n)) * rate;
  std::uint64_t m = static_cast<std::uint64_t>(std::ceil(want));
  m = std::min<std::uint64_t>(std::max<std::uint64_t>(m, 1), n);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::mt19937_64 gen(seed);
  deterministic_shuffle(ids, gen);
  ids.resize(m);
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct LandmarkRows {
  std::vector<std::vector<dist_t>> exact;    // per landmark, size n
  std::vector<std::vector<dist_t>> bounded;  // dist with <= radius hops
};

LandmarkRows landmark_distances(const Graph& g, const std::vector<int>& lm,
                                std::uint64_t radius, bool unit_weights) {
  LandmarkRows rows;
  rows.exact.resize(lm.size());
  rows.bounded.resize(lm.size());
  WorkGraph wg(g, {}, unit_weights);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(lm.size()); ++i) {
    SourceLabels l = relax_rounds(wg, lm[i], g.n() - 1);
    rows.exact[i].resize(g.n());
    rows.bounded[i].resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
      rows.exact[i][v] = l.final_dist(v);
      rows.bounded[i][v] = l.dist_at(v, radius);
    }
  }
  return rows;
}

bool duplicates_g_edge(const Graph& g, int u, int v, dist_t d) {
  Weight w;
  return g.has_edge(u, v, &w) && dist_t{w} == d;
}

}  // namespace

Hopset base_tcw(const Graph& g) {
  Hopset h;
  h.beta = 1;
  h.mode = ApproxMode::exact();
  for (const ClosureEntry& c : transitive_closure(g)) {
    int u = c.u, v = c.v;
    if (!g.directed() && u > v) continue;  // closure is symmetric here
    if (duplicates_g_edge(g, u, v, c.dist)) continue;
    h.edges.push_back({u, v, narrow_weight(c.dist)});
  }
  return h;
}

BaseAlgorithm BaseAlgorithm::tcw() {
  BaseAlgorithm b;
  b.name = "tcw";
  b.a = 2.0;
  b.b = 0.0;
  b.run = [](const Graph& g, std::uint64_t, ApproxMode, std::uint64_t) { return base_tcw(g); };
  return b;
}

namespace {

// Shared landmark-net construction: sample, connect landmark pairs whose
// shortest path fits in `radius` hops, run the base on the net, translate
// ids back and reweight to exact G distances. The claimed hopbound is
// kHopSlack * beta' * radius with beta' the base's native budget on the net.
Hopset net_hopset(const Graph& g, const BaseAlgorithm& base, std::uint64_t radius,
                  double sample_rate, ApproxMode mode, std::uint64_t seed) {
  std::vector<int> lm = sample_landmarks(g.n(), sample_rate, seed);
  LandmarkRows rows = landmark_distances(g, lm, radius, /*unit_weights=*/false);

  std::vector<int> pos(g.n(), -1);
  for (std::size_t i = 0; i < lm.size(); ++i) pos[lm[i]] = static_cast<int>(i);

  std::vector<Edge> net_edges;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = 0; j < lm.size(); ++j) {
      if (i == j) continue;
      if (!g.directed() && j < i) continue;
      dist_t d = rows.exact[i][lm[j]];
      if (d == kInfDist || rows.bounded[i][lm[j]] != d) continue;  // needs h(u,v) <= radius
      net_edges.push_back({static_cast<int>(i), static_cast<int>(j), narrow_weight(d)});
    }
  }
  Graph net(static_cast<int>(lm.size()), g.directed(), std::move(net_edges));

  std::uint64_t beta_prime = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(std::pow(double(lm.size()), base.b) - 1e-9)));
  Hopset on_net = base.run(net, beta_prime, mode, seed + 1);

  Hopset h;
  h.beta = claimed_beta;
  h.mode = mode;
  h.seed = seed;
  for (const Edge& e : on_net.edges) {
    int u = lm[e.u], v = lm[e.v];
    dist_t d = rows.exact[static_cast<std::size_t>(e.u)][v];
    if (d == kInfDist) continue;  // base produced an edge the host graph cannot realize
    if (duplicates_g_edge(g, u, v, d)) continue;
    h.edges.push_back({u, v, narrow_weight(d)});
  }
  std::sort(h.edges.begin(), h.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return h;
}

}  // namespace

Hopset sublinear_from_superlinear(const Graph& g, const BaseAlgorithm& base,
                                  std::uint64_t beta, ApproxMode mode, std::uint64_t seed) {
  if (mode.kind == ApproxKind::Reachability)
    throw std::invalid_argument("sublinear transform handles exact/multiplicative modes only");
  const double n = g.n();
  const double thresh = std::pow(n, base.b);
  if (static_cast<double>(beta) <= thresh * (1 + 1e-12))
    throw std::invalid_argument("hopbound within the base range; run the base directly");

  // q = (beta / (n log n)^b)^{1/(b-1)}; for b = 0 this is 1/beta.
  double q;
  if (base.b == 0.0) {
    q = 1.0 / static_cast<double>(beta);
  } else {
    double denom = std::pow(n * std::log(std::max(2.0, n)), base.b);
    q = std::pow(static_cast<double>(beta) / denom, 1.0 / (base.b - 1.0));
  }
  std::uint64_t radius =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(1.0 / q + 1e-9)));

  Hopset h = net_hopset(g, base, radius, q, mode, seed, /*claimed_beta=*/0);
  // claimed hopbound: slack * beta' * q^{-1}; recover beta' from the sample
  std::uint64_t beta_prime = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(
             std::pow(double(sample_landmarks(g.n(), q, seed).size()), base.b) - 1e-9)));
  h.beta = kHopSlack * beta_prime * radius;
  return h;
}

Hopset folklore_exact_hopset(const Graph& g, std::uint64_t beta, std::uint64_t seed) {
  if (beta < 1 || beta > static_cast<std::uint64_t>(g.n()))
    throw std::invalid_argument("folklore hopset: beta must lie in [1, n]");
  std::vector<int> lm = sample_landmarks(g.n(), 1.0 / static_cast<double>(beta), seed);
  LandmarkRows rows = landmark_distances(g, lm, /*radius=*/1, false);

  Hopset h;
  h.beta = 2 * beta + 1;
  h.mode = ApproxMode::exact();
  h.seed = seed;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = 0; j < lm.size(); ++j) {
      if (i == j) continue;
      if (!g.directed() && j < i) continue;
      dist_t d = rows.exact[i][lm[j]];
      if (d == kInfDist || duplicates_g_edge(g, lm[i], lm[j], d)) continue;
      h.edges.push_back({lm[i], lm[j], narrow_weight(d)});
    }
  }
  return h;
}

Hopset undirected_sublinear_hopset(const Graph& g, const BaseAlgorithm& base,
                                   std::uint64_t D, ApproxMode mode, std::uint64_t seed) {
  if (g.directed()) throw std::invalid_argument("undirected hopset: directed input");
  if (D < 1) throw std::invalid_argument("undirected hopset: D must be at least 1");
  if (mode.kind == ApproxKind::Reachability)
    throw std::invalid_argument("undirected hopset handles exact/multiplicative modes only");
  Hopset h = net_hopset(g, base, D, 1.0 / static_cast<double>(D), mode, seed, 0);
  std::uint64_t beta_prime = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(
             std::pow(double(sample_landmarks(g.n(), 1.0 / double(D), seed).size()), base.b) -
             1e-9)));
  h.beta = kHopSlack * beta_prime * D;
  return h;
}

Hopset shortcut_folklore(const Graph& g, std::uint64_t d, std::uint64_t seed) {
  if (!g.directed()) throw std::invalid_argument("shortcuts apply to directed graphs");
  if (d < 1 || d > static_cast<std::uint64_t>(g.n()))
    throw std::invalid_argument("shortcut: d must lie in [1, n]");
  std::vector<int> lm = sample_landmarks(g.n(), 1.0 / static_cast<double>(d), seed);
  LandmarkRows rows = landmark_distances(g, lm, 1, /*unit_weights=*/true);

  Hopset h;
  h.beta = kHopSlack * d;
  h.mode = ApproxMode::reach();
  h.seed = seed;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = 0; j < lm.size(); ++j) {
      if (i == j) continue;
      if (rows.exact[i][lm[j]] == kInfDist) continue;
      if (g.has_edge(lm[i], lm[j])) continue;
      h.edges.push_back({lm[i], lm[j], 1});
    }
  }
  return h;
}

namespace {

// Snap near-integers before rounding up: schedules use exact powers where
// the parameters allow it and must not drift to beta+1 from float noise.
std::uint64_t ceil_pow(double n, double exponent) {
  double x = std::exp2(exponent * std::log2(n));
  double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(x));
}

}  // namespace

BetaSchedule BetaSchedule::custom(std::uint64_t n, std::vector<std::uint64_t> betas,
                                  std::vector<Eps> eps) {
  BetaSchedule s;
  s.regime = Regime::Custom;
  s.betas.push_back(n);
  for (std::uint64_t b : betas) s.betas.push_back(b);
  s.eps = std::move(eps);
  s.ell = s.betas.size() - 1;
  if (s.eps.size() != s.ell) throw std::invalid_argument("schedule: eps per level required");
  s.exps.resize(s.betas.size());
  for (std::size_t i = 0; i < s.betas.size(); ++i) {
    if (s.betas[i] < 1) throw std::invalid_argument("schedule: budgets must be >= 1");
    if (i > 0 && s.betas[i] > s.betas[i - 1])
      throw std::invalid_argument("schedule: budgets must be nonincreasing");
    s.exps[i] = n > 1 ? std::log2(double(s.betas[i])) / std::log2(double(n)) : 1.0;
  }
  return s;
}

BetaSchedule schedule_directed(std::uint64_t n, std::uint64_t p, double a, double b,
                               Eps eps_total) {
  if (n < 2) throw std::invalid_argument("schedule: n must be at least 2");
  if (p < 1) throw std::invalid_argument("schedule: p must be at least 1");
  if (!(a > 1.0)) throw std::invalid_argument("schedule: a must exceed 1");
  if (b < 0.0 || b >= std::min(1.0, 1.0 / (a - 1.0)))
    throw std::invalid_argument("schedule: b out of range for a");

  const double ln_n = std::log(double(n));
  const double log_n_p = std::log(double(p)) / ln_n;
  const double k = (2.0 - a * b) / (1.0 - b);
  const std::uint64_t ell = static_cast<std::uint64_t>(
      std::ceil(std::log2(std::max(2.0, std::log2(double(n)))) - 1e-12));

  BetaSchedule s;
  s.k = k;
  s.betas.push_back(n);
  s.exps.push_back(1.0);

  if (log_n_p < 2.0 - a * b - 1e-12) {
    s.regime = BetaSchedule::Regime::DirectedCase1;
    s.ell = ell;
    s.D = double(n) / std::pow(double(p), 1.0 / k);
    s.alpha = 1.0 - log_n_p / k;
    Eps level_eps{eps_total.num, eps_total.den * 2 * ell};
    for (std::uint64_t i = 1; i <= ell; ++i) {
      double bi = (1.0 - s.alpha) * std::pow(1.0 / k, double(i)) + s.alpha;
      s.exps.push_back(bi);
      s.betas.push_back(ceil_pow(double(n), bi));
      s.eps.push_back(level_eps);
    }
  } else {
    s.regime = BetaSchedule::Regime::DirectedCase2;
    s.ell = 2 * ell;
    s.D1 = std::pow(double(n), b);
    s.D2 = std::pow(double(n) * double(n) / double(p), 1.0 / a);
    s.alpha = (2.0 - log_n_p) / a;
    Eps level_eps{eps_total.num, eps_total.den * 4 * ell};
    for (std::uint64_t i = 1; i <= ell; ++i) {
      double bi = (1.0 - b) * std::pow(1.0 / k, double(i)) + b;
      s.exps.push_back(bi);
      s.betas.push_back(ceil_pow(double(n), bi));
      s.eps.push_back(level_eps);
    }
    for (std::uint64_t j = 1; j <= ell; ++j) {
      double bj = (b - s.alpha) * std::pow(1.0 / a, double(j)) + s.alpha;
      s.exps.push_back(bj);
      s.betas.push_back(ceil_pow(double(n), bj));
      s.eps.push_back(level_eps);
    }
  }
  // rounding can leave tiny inversions at the tail; clamp to nonincreasing
  for (std::size_t i = 1; i < s.betas.size(); ++i)
    s.betas[i] = std::min(s.betas[i], s.betas[i - 1]);
  return s;
}

BetaSchedule schedule_undirected(std::uint64_t n, int k, Eps eps_level) {
  if (n < 2) throw std::invalid_argument("schedule: n must be at least 2");
  double loglog = std::log2(std::max(2.0, std::log2(double(n))));
  if (k < 1 || double(k) > std::max(1.0, loglog - 1.0 + 1e-9))
    throw std::invalid_argument("schedule: k out of range for n");
  if (eps_level.is_zero()) throw std::invalid_argument("schedule: eps must be positive");

  const double floor_val =
      kFloorScale * std::pow(double(k) * eps_level.den / double(eps_level.num), double(k));
  const double decay = 1.0 - std::exp2(-double(k) - 1.0);

  BetaSchedule s;
  s.regime = BetaSchedule::Regime::Undirected;
  s.k = k;
  s.betas.push_back(n);
  s.exps.push_back(1.0);
  double cur = double(n);
  for (;;) {
    double next = 0.5 * std::pow(cur, decay);
    bool hit_floor = next <= floor_val;
    if (hit_floor) next = floor_val;
    next = std::min(next, double(n));  // hopbounds above n are meaningless
    s.eps.push_back(eps_level);
    s.betas.push_back(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(next - 1e-9))));
    s.exps.push_back(std::log2(next) / std::log2(double(n)));
    cur = next;
    if (hit_floor) break;
  }
  s.ell = s.betas.size() - 1;
  for (std::size_t i = 1; i < s.betas.size(); ++i)
    s.betas[i] = std::min(s.betas[i], s.betas[i - 1]);
  return s;
}

std::vector<Hopset> build_hierarchy(const Graph& g, const BaseAlgorithm& base,
                                    const BetaSchedule& schedule, ApproxMode mode,
                                    std::uint64_t seed) {
  std::vector<Hopset> out;
  const double thresh = std::pow(double(g.n()), base.b);
  for (std::uint64_t i = 1; i <= schedule.ell; ++i) {
    std::uint64_t target = schedule.betas[i];
    std::uint64_t level_seed = seed + 1000 * i;
    ApproxMode level_mode = mode;
    if (mode.kind == ApproxKind::Multiplicative)
      level_mode.eps = schedule.eps[i - 1];

    Hopset h;
    if (mode.kind == ApproxKind::Reachability) {
      std::uint64_t d = std::max<std::uint64_t>(1, target / kHopSlack);
      h = shortcut_folklore(g, d, level_seed);
      if (target < kHopSlack) h.beta = 1;  // degenerate sample-all closure
    } else if (double(target) / double(kHopSlack) > thresh * (1 + 1e-9)) {
      if (g.directed()) {
        h = sublinear_from_superlinear(g, base, target / kHopSlack, level_mode, level_seed);
      } else {
        std::uint64_t D = std::max<std::uint64_t>(1, target / kHopSlack);
        h = undirected_sublinear_hopset(g, base, D, level_mode, level_seed);
      }
    } else {
      std::uint64_t native = std::max<std::uint64_t>(
          1, std::min<std::uint64_t>(target, static_cast<std::uint64_t>(thresh)));
      h = base.run(g, native, level_mode, level_seed);
    }
    if (h.beta > target) {
      throw construction_error("hierarchy level " + std::to_string(i) + " claims hopbound " +
                               std::to_string(h.beta) + " above its budget " +
                               std::to_string(target));
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace hopspan
