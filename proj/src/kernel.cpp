#include "tj/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace tj {

ClassPartition partition_classes(const Graph& g, const VertexSet& x) {
  for (VertexId v : x) g.check_vertex(v);
  ClassPartition part;
  part.x = x;
  for (VertexId v : g.vertices()) {
    if (set_contains(x, v)) continue;
    Signature sig;
    const auto& nb = g.neighbors(v);
    for (VertexId u : x)
      if (nb.count(u)) sig.neighbors_in_x.push_back(u);
    part.classes[sig].push_back(v);  // vertices() is sorted, members stay sorted
  }
  return part;
}

std::int64_t big_threshold(int k, int ell, const KernelConfig& cfg) {
  if (k < 1) throw GraphError("k must be at least 1");
  if (ell < 2) throw GraphError("ell must be at least 2");
  if (cfg.mode == KernelMode::Aggressive) {
    if (!cfg.big_threshold_override) throw GraphError("Aggressive mode requires a threshold override");
    return *cfg.big_threshold_override;
  }
  using int128 = __int128;
  const int128 limit = std::numeric_limits<std::int64_t>::max();
  int128 pow = 1;
  for (int i = 0; i < ell; ++i) {
    pow *= 4 * static_cast<int128>(k);
    if (pow > limit) throw ThresholdOverflow("big threshold exceeds int64");
  }
  const int128 value = int128(4) * k * ell * pow;
  if (value > limit) throw ThresholdOverflow("big threshold exceeds int64");
  return static_cast<std::int64_t>(value);
}

VertexSet heavy_vertices(const Graph& g, const VertexSet& c, const VertexSet& x, int ell) {
  VertexSet out;
  const std::int64_t csize = static_cast<std::int64_t>(c.size());
  for (VertexId y : g.vertices()) {
    if (set_contains(x, y)) continue;
    std::int64_t hits = 0;
    const auto& nb = g.neighbors(y);
    if (nb.size() < c.size()) {
      for (VertexId u : nb) hits += set_contains(c, u);
    } else {
      for (VertexId u : c) hits += nb.count(u) != 0;
    }
    if (8 * static_cast<std::int64_t>(ell) * hits >= csize) out.push_back(y);
  }
  return out;
}

namespace {

VertexSet reduce_class_in_place(Graph& g, const VertexSet& c, const Signature& sig, int k) {
  for (VertexId v : c) g.remove_vertex(v);
  VertexSet fresh;
  for (int i = 0; i < k; ++i) {
    const VertexId f = g.add_vertex();
    for (VertexId u : sig.neighbors_in_x) g.add_edge(f, u);
    fresh.push_back(f);
  }
  return fresh;
}

}  // namespace

std::pair<Graph, VertexSet> reduce_class(const Graph& g, const VertexSet& c,
                                         const Signature& signature, int k) {
  if (c.empty()) throw GraphError("cannot reduce an empty class");
  if (k < 1) throw GraphError("k must be at least 1");
  Graph out = g;
  VertexSet fresh = reduce_class_in_place(out, c, signature, k);
  return {std::move(out), std::move(fresh)};
}

namespace {

struct KernelRun {
  const Instance& inst;
  const KernelConfig& cfg;
  Graph g;
  VertexSet x;
  ClassPartition part;
  KernelTrace trace;
  std::int64_t big_t;
  std::int64_t indep_t;

  KernelRun(const Instance& in, const KernelConfig& c) : inst(in), cfg(c), g(in.graph) {
    x = set_union(in.start, in.target);
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    try {
      big_t = big_threshold(in.k, in.ell, c);
    } catch (const ThresholdOverflow&) {
      big_t = inf;  // no class can reach it, so "not big" is exact
    }
    indep_t = big_t;
    if (c.mode == KernelMode::Aggressive) {
      if (!c.indep_threshold_override) throw GraphError("Aggressive mode requires a threshold override");
      indep_t = *c.indep_threshold_override;
      trace.heuristic = true;
    }
    part = partition_classes(g, x);
  }

  bool certified_reducible(const VertexSet& survivors) const {
    if (!(cfg.mode == KernelMode::Aggressive && cfg.certify)) return true;
    Graph sub(0);
    // induced subgraph on survivors, relabeled densely
    std::map<VertexId, VertexId> relabel;
    for (VertexId v : survivors) relabel[v] = sub.add_vertex();
    for (VertexId v : survivors)
      for (VertexId u : g.neighbors(v))
        if (u > v && relabel.count(u)) sub.add_edge(relabel[v], relabel[u]);
    return exact_independent_set(sub, inst.k, cfg.certify_budget).status == SearchStatus::Found;
  }

  std::optional<std::string> initial_low_rank_check() {
    for (const auto& [sig, members] : part.classes) {
      if (sig.rank() > 1) continue;
      if (static_cast<std::int64_t>(members.size()) < indep_t) continue;
      if (!certified_reducible(members)) continue;
      std::ostringstream os;
      os << "rank-" << sig.rank() << " class of size " << members.size()
         << " meets threshold " << indep_t;
      return os.str();
    }
    return std::nullopt;
  }

  void count_late_low_rank() {
    for (const auto& [sig, members] : part.classes)
      if (sig.rank() <= 1 && static_cast<std::int64_t>(members.size()) >= indep_t)
        ++trace.late_big_low_rank;
  }

  void run_step(int j, int s) {
    StepRecord rec;
    rec.index_j = j;
    rec.depth_s = s;
    rec.x_before = x.size();
    const double y_cap = std::pow(3.0 * inst.ell, 2.0 * inst.ell);

    std::vector<std::pair<Signature, VertexSet>> big;
    for (const auto& [sig, members] : part.classes)
      if (sig.rank() == j && static_cast<std::int64_t>(members.size()) >= big_t)
        big.emplace_back(sig, members);

    VertexSet z;
    for (const auto& [sig, members] : big) {
      ++rec.classes_treated;
      const VertexSet y = heavy_vertices(g, members, x, inst.ell);
      rec.heavy_counts.push_back(y.size());
      if (static_cast<double>(y.size()) > y_cap) ++trace.y_bound_exceeded;

      VertexSet touched = y;
      for (VertexId v : y)
        for (VertexId u : g.neighbors(v)) set_insert(touched, u);
      touched = set_intersection(touched, members);

      if (2 * touched.size() <= members.size() &&
          certified_reducible(set_difference(members, touched))) {
        reduce_class_in_place(g, members, sig, inst.k);
        ++rec.classes_reduced;
      } else {
        z = set_union(z, y);
      }
    }
    x = set_union(x, z);
    part = partition_classes(g, x);
    count_late_low_rank();
    rec.x_after = x.size();
    trace.steps.push_back(std::move(rec));
    ++trace.inner_steps;
  }

  void reduce_leftovers(int j) {
    StepRecord rec;
    rec.index_j = j;
    rec.depth_s = -1;
    rec.x_before = rec.x_after = x.size();
    std::vector<std::pair<Signature, VertexSet>> big;
    for (const auto& [sig, members] : part.classes)
      if (sig.rank() == j && static_cast<std::int64_t>(members.size()) >= big_t)
        big.emplace_back(sig, members);
    for (const auto& [sig, members] : big) {
      ++rec.classes_treated;
      reduce_class_in_place(g, members, sig, inst.k);
      ++rec.classes_reduced;
    }
    if (!big.empty()) {
      part = partition_classes(g, x);
      count_late_low_rank();
    }
    trace.steps.push_back(std::move(rec));
  }
};

}  // namespace

KernelOutcome kernelize(const Instance& inst, const KernelConfig& cfg) {
  inst.validate();
  KernelRun run(inst, cfg);
  KernelOutcome out;

  if (auto reason = run.initial_low_rank_check()) {
    out.decided_yes = true;
    out.reason = *reason;
    run.trace.decided_early = true;
    out.trace = std::move(run.trace);
    return out;
  }

  for (int j = 2; j <= inst.ell - 1; ++j) {
    for (int s = 0; s <= 2 * inst.k; ++s) run.run_step(j, s);
    run.reduce_leftovers(j);
  }

  for (const auto& [sig, members] : run.part.classes)
    ++run.trace.final_class_size_histogram[members.size()];

  Instance reduced;
  reduced.graph = std::move(run.g);
  reduced.k = inst.k;
  reduced.start = inst.start;
  reduced.target = inst.target;
  reduced.ell = inst.ell;
  reduced.ell_certified = inst.ell_certified;
  out.reduced = std::move(reduced);
  out.trace = std::move(run.trace);
  return out;
}

std::string KernelTrace::to_text() const {
  std::ostringstream os;
  os << "inner_steps " << inner_steps << "\n";
  os << "decided_early " << (decided_early ? 1 : 0) << "\n";
  os << "heuristic " << (heuristic ? 1 : 0) << "\n";
  os << "late_big_low_rank " << late_big_low_rank << "\n";
  os << "y_bound_exceeded " << y_bound_exceeded << "\n";
  for (const auto& s : steps) {
    os << "step j=" << s.index_j << " s=" << s.depth_s << " |X| " << s.x_before << "->"
       << s.x_after << " treated " << s.classes_treated << " reduced " << s.classes_reduced;
    if (!s.heavy_counts.empty()) {
      os << " |Y|";
      for (auto h : s.heavy_counts) os << " " << h;
    }
    os << "\n";
  }
  for (const auto& [size, count] : final_class_size_histogram)
    os << "classes_of_size " << size << " " << count << "\n";
  return os.str();
}

std::string KernelTrace::to_json() const {
  nlohmann::json j;
  j["inner_steps"] = inner_steps;
  j["decided_early"] = decided_early;
  j["heuristic"] = heuristic;
  j["late_big_low_rank"] = late_big_low_rank;
  j["y_bound_exceeded"] = y_bound_exceeded;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps) {
    j["steps"].push_back({{"index", s.index_j},
                          {"depth", s.depth_s},
                          {"x_before", s.x_before},
                          {"x_after", s.x_after},
                          {"classes_treated", s.classes_treated},
                          {"classes_reduced", s.classes_reduced},
                          {"heavy_counts", s.heavy_counts}});
  }
  j["final_class_size_histogram"] = nlohmann::json::array();
  for (const auto& [size, count] : final_class_size_histogram)
    j["final_class_size_histogram"].push_back({{"size", size}, {"count", count}});
  return j.dump();
}

}  // namespace tj
