#include "hopspan/paths.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopspan {

WorkGraph::WorkGraph(const Graph& g, std::span<const Edge> extra, bool unit_weights)
    : n_(g.n()) {
  struct Raw {
    int from, to;
    Weight w;
    bool in_g;
  };
  std::vector<Raw> raw;
  raw.reserve(g.m() * (g.directed() ? 1 : 2) + extra.size() * 2);
  for (const Edge& e : g.edges()) {
    Weight w = unit_weights ? 1 : e.w;
    raw.push_back({e.u, e.v, w, true});
    if (!g.directed()) raw.push_back({e.v, e.u, w, true});
  }
  for (const Edge& e : extra) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
      throw std::invalid_argument("work graph: extra edge out of range");
    Weight w = unit_weights ? 1 : e.w;
    raw.push_back({e.u, e.v, w, false});
    if (!g.directed()) raw.push_back({e.v, e.u, w, false});
  }
  // lightest parallel arc wins; at equal weight prefer the G edge
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.from, a.to, a.w) < std::tie(b.from, b.to, b.w) ||
           (a.from == b.from && a.to == b.to && a.w == b.w && a.in_g && !b.in_g);
  });
  off_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && raw[i].from == raw[i - 1].from && raw[i].to == raw[i - 1].to) continue;
    arcs_.push_back({raw[i].to, raw[i].w, raw[i].in_g});
    ++off_[raw[i].from + 1];
  }
  for (int i = 0; i < n_; ++i) off_[i + 1] += off_[i];
}

const WorkGraph::Arc* WorkGraph::find(int u, int v) const {
  auto arcs = out(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, int x) { return a.to < x; });
  if (it == arcs.end() || it->to != v) return nullptr;
  return &*it;
}

dist_t SourceLabels::dist_at(int v, std::uint64_t budget) const {
  if (v == src_) return 0;
  const auto& h = hist_[v];
  // last entry with round <= budget
  auto it = std::upper_bound(h.begin(), h.end(), budget,
                             [](std::uint64_t b, const Entry& e) { return b < e.round; });
  if (it == h.begin()) return kInfDist;
  return std::prev(it)->d;
}

dist_t SourceLabels::final_dist(int v) const {
  if (v == src_) return 0;
  return hist_[v].empty() ? kInfDist : hist_[v].back().d;
}

std::uint32_t SourceLabels::final_round(int v) const {
  if (v == src_) return 0;
  return hist_[v].empty() ? 0 : hist_[v].back().round;
}

std::optional<std::vector<int>> SourceLabels::path_at(int v, std::uint64_t budget) const {
  std::vector<int> rev;
  std::uint64_t b = budget;
  int cur = v;
  while (cur != src_) {
    const auto& h = hist_[cur];
    auto it = std::upper_bound(h.begin(), h.end(), b,
                               [](std::uint64_t x, const Entry& e) { return x < e.round; });
    if (it == h.begin()) return std::nullopt;
    const Entry& e = *std::prev(it);
    rev.push_back(cur);
    cur = e.parent;
    b = e.round - 1;  // the prefix label was frozen one round earlier
  }
  rev.push_back(src_);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

SourceLabels relax_rounds(const WorkGraph& wg, int source, std::uint64_t max_rounds) {
  const int n = wg.n();
  SourceLabels out;
  out.src_ = source;
  out.hist_.assign(n, {});

  std::uint64_t rounds = std::min<std::uint64_t>(max_rounds, n > 0 ? n - 1 : 0);
  std::vector<dist_t> prev(n, kInfDist), cur(n, kInfDist);
  std::vector<std::int32_t> par(n, -1);
  std::vector<int> touched;
  std::vector<std::uint8_t> improved(n, 0);
  prev[source] = 0;

  for (std::uint64_t r = 1; r <= rounds; ++r) {
    bool any = false;
    cur = prev;
    touched.clear();
    for (int u = 0; u < n; ++u) {
      if (prev[u] == kInfDist) continue;
      for (const auto& arc : wg.out(u)) {
        dist_t cand = prev[u] + arc.w;
        if (cand < cur[arc.to]) {
          cur[arc.to] = cand;
          par[arc.to] = u;
          if (!improved[arc.to]) {
            improved[arc.to] = 1;
            touched.push_back(arc.to);
          }
          any = true;
        } else if (cand == cur[arc.to] && improved[arc.to] && u < par[arc.to]) {
          par[arc.to] = u;  // deterministic parent at equal length and hops
        }
      }
    }
    if (!any) break;
    for (int v : touched) {
      out.hist_[v].push_back({static_cast<std::uint32_t>(r), cur[v], par[v]});
      improved[v] = 0;
    }
    prev.swap(cur);
  }
  return out;
}

namespace {

void dijkstra_row(const Graph& g, int source, dist_t* row) {
  const int n = g.n();
  std::fill(row, row + n, kInfDist);
  row[source] = 0;
  using Item = std::pair<dist_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != row[u]) continue;
    for (const auto& [v, w] : g.out(u)) {
      dist_t cand = d + w;
      if (cand < row[v]) {
        row[v] = cand;
        pq.push({cand, v});
      }
    }
  }
}

}  // namespace

DistMatrix apsp_exact(const Graph& g) {
  DistMatrix m;
  m.n = g.n();
  m.d.assign(static_cast<std::size_t>(g.n()) * g.n(), kInfDist);
#pragma omp parallel for schedule(dynamic, 1)
  for (int u = 0; u < g.n(); ++u) {
    dijkstra_row(g, u, m.d.data() + static_cast<std::size_t>(u) * g.n());
  }
  return m;
}

SsspTree dijkstra_tree(const Graph& g, int source) {
  int s[1] = {source};
  return dijkstra_tree_multi(g, s);
}

SsspTree dijkstra_tree_multi(const Graph& g, std::span<const int> sources) {
  const int n = g.n();
  SsspTree t;
  t.dist.assign(n, kInfDist);
  t.parent.assign(n, -1);
  t.root.assign(n, -1);
  std::vector<std::uint8_t> done(n, 0);
  using Item = std::pair<dist_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<int> roots(sources.begin(), sources.end());
  std::sort(roots.begin(), roots.end());
  for (int s : roots) {
    if (s < 0 || s >= n) throw std::invalid_argument("dijkstra: source out of range");
    if (t.dist[s] == 0) continue;
    t.dist[s] = 0;
    t.root[s] = s;
    pq.push({0, s});
  }
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u] || d != t.dist[u]) continue;
    done[u] = 1;
    for (const auto& [v, w] : g.out(u)) {
      dist_t cand = d + w;
      if (cand < t.dist[v]) {
        t.dist[v] = cand;
        t.parent[v] = u;
        t.root[v] = t.root[u];
        pq.push({cand, v});
      } else if (cand == t.dist[v] && !done[v]) {
        // equal distance: lower root id wins, then lower parent id
        if (std::pair(t.root[u], u) < std::pair(t.root[v], t.parent[v])) {
          t.parent[v] = u;
          t.root[v] = t.root[u];
        }
      }
    }
  }
  return t;
}

HopBoundedPaths::HopBoundedPaths(const Graph& g, std::span<const Edge> extra,
                                 std::uint64_t budget, std::span<const int> sources,
                                 bool unit_weights)
    : budget_(budget) {
  if (budget == 0) throw std::invalid_argument("hop budget must be at least 1");
  if (sources.empty()) {
    sources_.resize(g.n());
    for (int i = 0; i < g.n(); ++i) sources_[i] = i;
  } else {
    sources_.assign(sources.begin(), sources.end());
    std::sort(sources_.begin(), sources_.end());
    sources_.erase(std::unique(sources_.begin(), sources_.end()), sources_.end());
  }
  source_index_.assign(g.n(), -1);
  for (std::size_t i = 0; i < sources_.size(); ++i) source_index_[sources_[i]] = static_cast<int>(i);

  WorkGraph wg(g, extra, unit_weights);
  labels_.resize(sources_.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(sources_.size()); ++i) {
    labels_[i] = relax_rounds(wg, sources_[i], budget_);
  }
}

const SourceLabels& HopBoundedPaths::labels_for(int u) const {
  int idx = source_index_[u];
  if (idx < 0) throw std::invalid_argument("hop-bounded query for a vertex that is not a source");
  return labels_[idx];
}

dist_t HopBoundedPaths::dist(int u, int v) const { return labels_for(u).dist_at(v, budget_); }

std::optional<std::vector<int>> HopBoundedPaths::path(int u, int v) const {
  return labels_for(u).path_at(v, budget_);
}

HopBoundedPaths apsp_hop_bounded(const Graph& g, std::span<const Edge> extra,
                                 std::uint64_t budget, std::span<const int> sources) {
  return HopBoundedPaths(g, extra, budget, sources);
}

std::optional<std::uint64_t> min_hops(const Graph& g, int u, int v) {
  if (u == v) return 0;
  WorkGraph wg(g, {}, false);
  SourceLabels l = relax_rounds(wg, u, g.n() > 0 ? g.n() - 1 : 0);
  if (!l.reachable(v)) return std::nullopt;
  return l.final_round(v);
}

std::vector<Edge> greedy_spanner(const Graph& g, int k) {
  if (g.directed()) throw std::invalid_argument("greedy spanner: undirected input required");
  if (k < 1) throw std::invalid_argument("greedy spanner: k must be at least 1");

  std::vector<Edge> order = g.edges();
  std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });

  const dist_t stretch = 2 * static_cast<dist_t>(k) - 1;
  std::vector<std::vector<std::pair<int, Weight>>> adj(g.n());
  std::vector<Edge> kept;
  std::vector<dist_t> dist(g.n(), kInfDist);
  std::vector<int> touched;

  for (const Edge& e : order) {
    const dist_t limit = stretch * e.w;
    // bounded Dijkstra inside the partial spanner
    bool covered = false;
    using Item = std::pair<dist_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[e.u] = 0;
    touched.push_back(e.u);
    pq.push({0, e.u});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d != dist[x] || d > limit) continue;
      if (x == e.v) {
        covered = true;
        break;
      }
      for (const auto& [y, w] : adj[x]) {
        dist_t cand = d + w;
        if (cand <= limit && cand < dist[y]) {
          if (dist[y] == kInfDist) touched.push_back(y);
          dist[y] = cand;
          pq.push({cand, y});
        }
      }
    }
    for (int x : touched) dist[x] = kInfDist;
    touched.clear();
    if (!covered) {
      kept.push_back(e);
      adj[e.u].push_back({e.v, e.w});
      adj[e.v].push_back({e.u, e.w});
    }
  }
  std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return kept;
}

}  // namespace hopspan
