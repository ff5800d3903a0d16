#include "hopspan/graph.hpp"

#include <algorithm>

#include "hopspan/paths.hpp"

namespace hopspan {

Graph::Graph(int n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("graph: vertex id out of range");
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  // parallel edges keep the minimum weight
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) continue;
    edges_.push_back(e);
  }
  w_max_ = 0;
  for (const Edge& e : edges_) w_max_ = std::max(w_max_, e.w);

  std::vector<std::int64_t> deg(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u + 1];
    if (!directed_) ++deg[e.v + 1];
  }
  adj_off_.assign(n_ + 1, 0);
  for (int i = 0; i < n_; ++i) adj_off_[i + 1] = adj_off_[i] + deg[i + 1];
  adj_.resize(static_cast<std::size_t>(adj_off_[n_]));
  std::vector<std::int64_t> cur(adj_off_.begin(), adj_off_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(cur[e.u]++)] = {e.v, e.w};
    if (!directed_) adj_[static_cast<std::size_t>(cur[e.v]++)] = {e.u, e.w};
  }
  for (int u = 0; u < n_; ++u) {
    std::sort(adj_.begin() + adj_off_[u], adj_.begin() + adj_off_[u + 1]);
  }
}

std::span<const std::pair<int, Weight>> Graph::out(int u) const {
  return {adj_.data() + adj_off_[u], adj_.data() + adj_off_[u + 1]};
}

bool Graph::has_edge(int u, int v, Weight* w) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  auto arcs = out(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const std::pair<int, Weight>& a, int x) { return a.first < x; });
  if (it == arcs.end() || it->first != v) return false;
  if (w) *w = it->second;
  return true;
}

PairSet::PairSet(int n, std::vector<std::pair<int, int>> raw) {
  for (auto& [u, v] : raw) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("pair set: vertex id out of range");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  pairs = std::move(raw);
}

std::vector<ClosureEntry> transitive_closure(const Graph& g) {
  DistMatrix d = apsp_exact(g);
  std::vector<ClosureEntry> out;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) {
      if (u == v) continue;
      dist_t duv = d.at(u, v);
      if (duv != kInfDist) out.push_back({u, v, duv});
    }
  }
  return out;
}

}  // namespace hopspan
