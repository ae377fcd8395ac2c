#include "tj/graph.hpp"

#include <algorithm>
#include <cmath>

namespace tj {

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

void set_insert(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

void set_erase(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet make_set(std::initializer_list<VertexId> ids) {
  VertexSet s(ids);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  present_.assign(static_cast<std::size_t>(n), 1);
  adj_.resize(static_cast<std::size_t>(n));
  vertex_count_ = static_cast<std::size_t>(n);
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= present_.size() || !present_[v])
    throw GraphError("unknown vertex id " + std::to_string(v));
}

VertexId Graph::add_vertex() {
  present_.push_back(1);
  adj_.emplace_back();
  ++vertex_count_;
  return static_cast<VertexId>(present_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop rejected");
  if (adj_[u].insert(v).second) {
    adj_[v].insert(u);
    ++edge_count_;
  }
}

void Graph::remove_vertex(VertexId v) {
  check_vertex(v);
  for (VertexId w : adj_[v]) {
    adj_[w].erase(v);
    --edge_count_;
  }
  adj_[v].clear();
  present_[v] = 0;
  --vertex_count_;
}

bool Graph::has_vertex(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) != 0;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (std::size_t v = 0; v < present_.size(); ++v)
    if (present_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

VertexSet Graph::closed_neighborhood(VertexId v) const {
  check_vertex(v);
  VertexSet out(adj_[v].begin(), adj_[v].end());
  set_insert(out, v);
  return out;
}

void Instance::validate(bool check_ell) const {
  if (k <= 0) throw GraphError("k must be positive");
  if (ell < 2) throw GraphError("ell must be at least 2");
  if (static_cast<int>(start.size()) != k || static_cast<int>(target.size()) != k)
    throw GraphError("I and J must both have size k");
  if (!is_independent(graph, start)) throw GraphError("I is not independent");
  if (!is_independent(graph, target)) throw GraphError("J is not independent");
  if (check_ell && contains_biclique(graph, ell))
    throw GraphError("graph contains a K_{ell,ell}");
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (VertexId v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& nb = g.neighbors(s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (nb.count(s[j])) return false;
  }
  return true;
}

namespace {

// Enumerates ell-subsets of verts, invoking f on each; f returns true to stop.
template <typename F>
bool for_each_subset(const std::vector<VertexId>& verts, int ell, F&& f) {
  const int n = static_cast<int>(verts.size());
  if (ell > n) return false;
  std::vector<int> idx(ell);
  for (int i = 0; i < ell; ++i) idx[i] = i;
  VertexSet subset(ell);
  while (true) {
    for (int i = 0; i < ell; ++i) subset[i] = verts[idx[i]];
    if (f(subset)) return true;
    int i = ell - 1;
    while (i >= 0 && idx[i] == n - ell + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> contains_biclique(const Graph& g, int ell) {
  if (ell < 1) throw GraphError("ell must be at least 1");
  const auto verts = g.vertices();
  std::optional<std::pair<VertexSet, VertexSet>> found;
  for_each_subset(verts, ell, [&](const VertexSet& a) {
    VertexSet common(g.neighbors(a[0]).begin(), g.neighbors(a[0]).end());
    for (int i = 1; i < ell && !common.empty(); ++i)
      common = set_intersection(common, VertexSet(g.neighbors(a[i]).begin(), g.neighbors(a[i]).end()));
    common = set_difference(common, a);
    if (static_cast<int>(common.size()) >= ell) {
      common.resize(ell);
      found = std::make_pair(a, common);
      return true;
    }
    return false;
  });
  return found;
}

double kst_bound(std::size_t n, int ell) {
  if (ell < 1) throw GraphError("ell must be at least 1");
  const double nd = static_cast<double>(n);
  const double l = static_cast<double>(ell);
  return std::pow((l - 1.0) / 2.0, 1.0 / l) * std::pow(nd, 2.0 - 1.0 / l) +
         0.5 * (l - 1.0) * nd;
}

double kst_bipartite_bound(std::size_t n, std::size_t m, int ell) {
  if (ell < 1) throw GraphError("ell must be at least 1");
  const double l = static_cast<double>(ell);
  const double shifted = std::max(0.0, static_cast<double>(n) - l + 1.0);
  const double md = static_cast<double>(m);
  return std::pow(l - 1.0, 1.0 / l) * shifted * std::pow(md, 1.0 - 1.0 / l) +
         (l - 1.0) * md;
}

std::optional<VertexSet> greedy_independent_set(const Graph& g, int k) {
  if (k < 0) throw GraphError("k must be non-negative");
  Graph work = g;
  VertexSet picked;
  while (static_cast<int>(picked.size()) < k) {
    VertexId best = -1;
    int best_deg = -1;
    for (VertexId v : work.vertices()) {
      const int d = work.degree(v);
      if (best == -1 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    if (best == -1) return std::nullopt;
    set_insert(picked, best);
    const std::set<VertexId> nb = work.neighbors(best);
    work.remove_vertex(best);
    for (VertexId w : nb) work.remove_vertex(w);
  }
  return picked;
}

namespace {

struct ExactSearch {
  const std::vector<VertexId>& order;
  const Graph& g;
  int k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  VertexSet current;
  bool exceeded = false;

  bool search(std::size_t pos) {
    if (static_cast<int>(current.size()) == k) return true;
    if (++nodes > budget) {
      exceeded = true;
      return false;
    }
    const int need = k - static_cast<int>(current.size());
    if (static_cast<int>(order.size() - pos) < need) return false;
    for (std::size_t i = pos; i < order.size(); ++i) {
      const VertexId v = order[i];
      bool ok = true;
      const auto& nb = g.neighbors(v);
      for (VertexId u : current)
        if (nb.count(u)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      if (search(i + 1)) return true;
      current.pop_back();
      if (exceeded) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult exact_independent_set(const Graph& g, int k, std::uint64_t budget) {
  if (k < 0) throw GraphError("k must be non-negative");
  if (k == 0) return {SearchStatus::Found, {}};
  const auto verts = g.vertices();
  ExactSearch s{verts, g, k, budget};
  if (s.search(0)) {
    std::sort(s.current.begin(), s.current.end());
    return {SearchStatus::Found, s.current};
  }
  if (s.exceeded) return {SearchStatus::BudgetExceeded, {}};
  return {SearchStatus::NotFound, {}};
}

}  // namespace tj
