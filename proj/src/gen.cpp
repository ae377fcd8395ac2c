#include "tj/gen.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "tj/vcdim.hpp"

namespace tj {

namespace {

// True iff u and v are within distance limit of each other.
bool within_distance(const Graph& g, VertexId u, VertexId v, int limit) {
  if (u == v) return true;
  std::vector<int> dist(g.next_fresh_id(), -1);
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    if (dist[w] == limit) continue;
    for (VertexId x : g.neighbors(w)) {
      if (dist[x] != -1) continue;
      if (x == v) return true;
      dist[x] = dist[w] + 1;
      queue.push_back(x);
    }
  }
  return false;
}

Graph gen_girth5(const GenSpec& spec, const Girth5& fam) {
  Graph g(spec.n);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick(0, spec.n - 1);
  const int attempts = fam.edge_attempts > 0 ? fam.edge_attempts : 10 * spec.n;
  for (int i = 0; i < attempts; ++i) {
    const VertexId u = pick(rng);
    const VertexId v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    if (within_distance(g, u, v, 3)) continue;  // edge would close a C3 or C4
    g.add_edge(u, v);
  }
  return g;
}

Graph gen_biclique_free(const GenSpec& spec, const RejectionBicliqueFree& fam) {
  Graph g(spec.n);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick(0, spec.n - 1);
  const int budget = fam.edge_budget > 0 ? fam.edge_budget : 3 * spec.n;
  for (int i = 0; i < budget; ++i) {
    const VertexId u = pick(rng);
    const VertexId v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    if (contains_biclique(g, fam.ell)) {
      // no Graph::remove_edge; rebuild without the offending edge
      Graph rebuilt(spec.n);
      for (VertexId a : g.vertices())
        for (VertexId b : g.neighbors(a))
          if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) rebuilt.add_edge(a, b);
      g = std::move(rebuilt);
    }
  }
  return g;
}

Graph gen_vc1(const GenSpec& spec, const Vc1Rejection& fam) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick(0, spec.n - 1);
  for (int attempt = 0; attempt < fam.accept_attempts; ++attempt) {
    Graph g(spec.n);
    const int edges = spec.n > 1 ? std::uniform_int_distribution<int>(0, spec.n)(rng) : 0;
    for (int i = 0; i < edges; ++i) {
      const VertexId u = pick(rng);
      const VertexId v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    if (vc_dimension(g, 1) <= 1) return g;
  }
  throw GenError("Vc1Rejection: no accepted graph within attempt budget");
}

Graph gen_twinblob(const TwinBlob& fam) {
  if (fam.class_sizes.size() != fam.signatures.size())
    throw GenError("TwinBlob: class_sizes and signatures length mismatch");
  Graph g(fam.anchor_count);
  for (std::size_t c = 0; c < fam.class_sizes.size(); ++c) {
    for (int sig : fam.signatures[c])
      if (sig < 0 || sig >= fam.anchor_count) throw GenError("TwinBlob: signature index out of range");
    for (int i = 0; i < fam.class_sizes[c]; ++i) {
      const VertexId v = g.add_vertex();
      for (int sig : fam.signatures[c]) g.add_edge(v, sig);
    }
  }
  return g;
}

}  // namespace

Graph gen_graph(const GenSpec& spec) {
  if (spec.n < 0) throw GenError("negative n");
  return std::visit(
      [&](const auto& fam) -> Graph {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Girth5>) return gen_girth5(spec, fam);
        else if constexpr (std::is_same_v<T, RejectionBicliqueFree>) return gen_biclique_free(spec, fam);
        else if constexpr (std::is_same_v<T, Vc1Rejection>) return gen_vc1(spec, fam);
        else return gen_twinblob(fam);
      },
      spec.family);
}

std::optional<Instance> gen_instance(const Graph& g, int k, std::uint64_t seed, int ell,
                                     bool ell_certified, int restarts) {
  if (k < 1) throw GenError("k must be at least 1");
  std::mt19937_64 rng(seed);
  auto sample = [&]() -> std::optional<VertexSet> {
    std::vector<VertexId> order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet picked;
    for (VertexId v : order) {
      bool ok = true;
      for (VertexId u : picked)
        if (g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) {
        set_insert(picked, v);
        if (static_cast<int>(picked.size()) == k) return picked;
      }
    }
    return std::nullopt;
  };
  for (int r = 0; r < restarts; ++r) {
    const auto i = sample();
    if (!i) continue;
    const auto j = sample();
    if (!j) continue;
    Instance inst;
    inst.graph = g;
    inst.k = k;
    inst.start = *i;
    inst.target = *j;
    inst.ell = ell;
    inst.ell_certified = ell_certified;
    return inst;
  }
  return std::nullopt;
}

}  // namespace tj
