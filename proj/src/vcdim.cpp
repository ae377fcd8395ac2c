#include "tj/vcdim.hpp"

#include <algorithm>
#include <set>

namespace tj {

NeighborhoodHypergraph neighborhood_hypergraph(const Graph& g) {
  NeighborhoodHypergraph h;
  h.ground = g.vertices();
  for (VertexId v : h.ground) h.edges.emplace_back(v, g.closed_neighborhood(v));
  return h;
}

bool is_shattered(const NeighborhoodHypergraph& h, const VertexSet& s) {
  if (s.size() > 20) throw GraphError("shattering check capped at 20 vertices");
  for (VertexId v : s)
    if (!set_contains(h.ground, v)) throw GraphError("set not within ground set");
  const std::size_t want = std::size_t(1) << s.size();
  std::vector<char> seen(want, 0);
  std::size_t found = 0;
  for (const auto& [src, members] : h.edges) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (set_contains(members, s[i])) mask |= std::size_t(1) << i;
    if (!seen[mask]) {
      seen[mask] = 1;
      if (++found == want) return true;
    }
  }
  return false;
}

namespace {

// A shattered set needs its full trace, so it lies inside some closed
// neighborhood; only those subsets are worth checking.
std::set<VertexSet> candidate_subsets(const Graph& g, int d) {
  std::set<VertexSet> out;
  for (VertexId v : g.vertices()) {
    const VertexSet nb = g.closed_neighborhood(v);
    const int n = static_cast<int>(nb.size());
    if (n < d) continue;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      VertexSet s(d);
      for (int i = 0; i < d; ++i) s[i] = nb[idx[i]];
      out.insert(std::move(s));
      int i = d - 1;
      while (i >= 0 && idx[i] == n - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

std::pair<int, VertexSet> vc_dimension_witness(const Graph& g, int cap) {
  if (cap < 0) throw GraphError("cap must be non-negative");
  if (g.vertex_count() == 0) return {-1, {}};
  const NeighborhoodHypergraph h = neighborhood_hypergraph(g);
  int best = 0;
  VertexSet best_set;
  for (int d = 1; d <= cap + 1; ++d) {
    bool any = false;
    for (const VertexSet& s : candidate_subsets(g, d)) {
      if (is_shattered(h, s)) {
        any = true;
        best = d;
        best_set = s;
        break;
      }
    }
    if (!any) break;
  }
  return {best, best_set};
}

int vc_dimension(const Graph& g, int cap) { return vc_dimension_witness(g, cap).first; }

std::optional<Trichotomy> trichotomy(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw GraphError("trichotomy needs distinct vertices");
  const VertexSet nu = g.closed_neighborhood(u);
  const VertexSet nv = g.closed_neighborhood(v);
  if (set_intersection(nu, nv).empty()) return Disjoint{};
  const bool uv = is_subset(nu, nv);
  const bool vu = is_subset(nv, nu);
  if (uv && vu) return Inclusion{std::min(u, v), std::max(u, v)};
  if (uv) return Inclusion{u, v};
  if (vu) return Inclusion{v, u};
  if (set_union(nu, nv).size() == g.vertex_count()) return DominatingPair{};
  return std::nullopt;
}

Instance vc1_reduce(const Instance& inst) {
  inst.validate();
  Instance out = inst;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto verts = out.graph.vertices();
    for (std::size_t i = 0; i < verts.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < verts.size() && !changed; ++j) {
        const auto rel = trichotomy(out.graph, verts[i], verts[j]);
        if (!rel)
          throw GraphError("shattered pair found: VC-dimension >= 2");
        if (const auto* inc = std::get_if<Inclusion>(&*rel)) {
          const VertexId keep = inc->smaller;
          const VertexId drop = inc->larger;
          if (set_contains(out.start, drop)) {
            set_erase(out.start, drop);
            set_insert(out.start, keep);
          }
          if (set_contains(out.target, drop)) {
            set_erase(out.target, drop);
            set_insert(out.target, keep);
          }
          out.graph.remove_vertex(drop);
          changed = true;
        }
      }
    }
  }
  return out;
}

TjDecision vc1_decide(const Instance& inst, const OracleLimits& limits) {
  inst.validate();
  const Instance reduced = vc1_reduce(inst);
  const bool graph_changed = reduced.graph.vertex_count() != inst.graph.vertex_count();

  TjDecision dec;
  if (reduced.start == reduced.target) {
    dec.answer = Answer::Yes;
    dec.witness = std::vector<VertexSet>{reduced.start};
  } else if (inst.k >= 3) {
    // No inclusion pair left, so I ∪ J is independent and tokens move one
    // at a time.
    const VertexSet both = set_union(reduced.start, reduced.target);
    if (!is_independent(reduced.graph, both))
      throw GraphError("reduced I ∪ J not independent: VC-dimension precondition violated");
    std::vector<VertexSet> path{reduced.start};
    const VertexSet leave = set_difference(reduced.start, reduced.target);
    const VertexSet enter = set_difference(reduced.target, reduced.start);
    VertexSet cur = reduced.start;
    for (std::size_t i = 0; i < leave.size(); ++i) {
      set_erase(cur, leave[i]);
      set_insert(cur, enter[i]);
      path.push_back(cur);
    }
    dec.answer = Answer::Yes;
    dec.witness = std::move(path);
  } else {
    dec = oracle_decide(reduced, limits);
  }
  dec.method = Method::Vc1;
  dec.witness_on_kernel = graph_changed && dec.witness.has_value();
  return dec;
}

}  // namespace tj
