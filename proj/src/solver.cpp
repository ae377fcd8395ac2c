#include "tj/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_set>

namespace tj {

bool tj_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (VertexId v : a) g.check_vertex(v);
  for (VertexId v : b) g.check_vertex(v);
  if (a.size() != b.size()) throw GraphError("tj_adjacent: size mismatch");
  return set_difference(a, b).size() == 1 && set_difference(b, a).size() == 1;
}

namespace {

using Clock = std::chrono::steady_clock;

// BFS over k-subsets packed 16 bits per dense vertex index (k <= 4). Visited
// membership goes through a combinadic rank table when C(n,k) is small enough
// to index directly, otherwise through a hash set.
class PackedBfs {
 public:
  PackedBfs(const Instance& inst, const OracleLimits& limits)
      : inst_(inst), limits_(limits), ids_(inst.graph.vertices()) {
    n_ = ids_.size();
    k_ = inst.k;
    for (std::size_t i = 0; i < n_; ++i) dense_[ids_[i]] = static_cast<int>(i);
    words_ = (n_ + 63) / 64;
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (VertexId u : inst.graph.neighbors(ids_[i])) {
        const std::size_t j = static_cast<std::size_t>(dense_.at(u));
        adj_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
      }
    binom_.assign(n_ + 1, std::vector<std::uint64_t>(k_ + 1, 0));
    for (std::size_t v = 0; v <= n_; ++v) {
      binom_[v][0] = 1;
      for (int i = 1; i <= k_ && static_cast<std::size_t>(i) <= v; ++i)
        binom_[v][i] = binom_[v - 1][i - 1] + (v >= 1 ? binom_[v - 1][i] : 0);
    }
    const std::uint64_t total = binom_[n_][k_];
    use_rank_table_ = total <= 300'000'000ULL;
    if (use_rank_table_) visited_.assign(total, 0);
  }

  bool adjacent(int a, int b) const {
    return adj_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64) & 1;
  }

  std::uint64_t pack(const std::vector<int>& s) const {
    std::uint64_t p = 0;
    for (int i = k_ - 1; i >= 0; --i) p = p << 16 | static_cast<std::uint64_t>(s[i]);
    return p;
  }

  std::vector<int> unpack(std::uint64_t p) const {
    std::vector<int> s(k_);
    for (int i = 0; i < k_; ++i) {
      s[i] = static_cast<int>(p & 0xffff);
      p >>= 16;
    }
    return s;
  }

  std::uint64_t rank(const std::vector<int>& s) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[s[i]][i + 1];
    return r;
  }

  bool mark_visited(const std::vector<int>& s, std::uint64_t packed) {
    if (use_rank_table_) {
      auto& cell = visited_[rank(s)];
      if (cell) return false;
      cell = 1;
      return true;
    }
    return visited_set_.insert(packed).second;
  }

  std::vector<int> to_dense(const VertexSet& s) const {
    std::vector<int> out;
    for (VertexId v : s) out.push_back(dense_.at(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  VertexSet to_ids(const std::vector<int>& s) const {
    VertexSet out;
    for (int i : s) out.push_back(ids_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  TjDecision run() {
    TjDecision dec;
    const auto start_dense = to_dense(inst_.start);
    const auto target_dense = to_dense(inst_.target);
    const std::uint64_t target_packed = pack(target_dense);

    std::vector<std::uint64_t> states{pack(start_dense)};
    std::vector<std::int32_t> parent{-1};
    mark_visited(start_dense, states[0]);

    const auto t0 = Clock::now();
    std::size_t head = 0;
    while (head < states.size()) {
      if (states.size() > limits_.max_states) return unknown(states.size());
      if ((head & 0xfff) == 0 &&
          std::chrono::duration<double>(Clock::now() - t0).count() > limits_.max_seconds)
        return unknown(states.size());

      const std::uint64_t cur_packed = states[head];
      if (cur_packed == target_packed) return yes(states, parent, head);
      const auto cur = unpack(cur_packed);
      std::vector<int> rest(k_ - 1);
      for (int drop = 0; drop < k_; ++drop) {
        for (int i = 0, j = 0; i < k_; ++i)
          if (i != drop) rest[j++] = cur[i];
        for (int v = 0; v < static_cast<int>(n_); ++v) {
          if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
          bool ok = true;
          for (int w : rest)
            if (adjacent(v, w)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          std::vector<int> next = rest;
          next.insert(std::lower_bound(next.begin(), next.end(), v), v);
          const std::uint64_t next_packed = pack(next);
          if (mark_visited(next, next_packed)) {
            states.push_back(next_packed);
            parent.push_back(static_cast<std::int32_t>(head));
          }
        }
      }
      ++head;
    }
    dec.answer = Answer::No;
    dec.explored_states = states.size();
    return dec;
  }

 private:
  TjDecision unknown(std::uint64_t explored) const {
    TjDecision dec;
    dec.answer = Answer::Unknown;
    dec.explored_states = explored;
    return dec;
  }

  TjDecision yes(const std::vector<std::uint64_t>& states,
                 const std::vector<std::int32_t>& parent, std::size_t at) const {
    TjDecision dec;
    dec.answer = Answer::Yes;
    dec.explored_states = states.size();
    std::vector<VertexSet> path;
    for (std::int64_t i = static_cast<std::int64_t>(at); i >= 0; i = parent[i])
      path.push_back(to_ids(unpack(states[i])));
    std::reverse(path.begin(), path.end());
    dec.witness = std::move(path);
    return dec;
  }

  const Instance& inst_;
  const OracleLimits& limits_;
  std::vector<VertexId> ids_;
  std::map<VertexId, int> dense_;
  std::size_t n_ = 0;
  int k_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<std::uint64_t>> binom_;
  bool use_rank_table_ = false;
  std::vector<std::uint8_t> visited_;
  std::unordered_set<std::uint64_t> visited_set_;
};

// Fallback for k > 4: same BFS with map-based state keys.
TjDecision generic_bfs(const Instance& inst, const OracleLimits& limits) {
  TjDecision dec;
  std::vector<VertexSet> states{inst.start};
  std::vector<std::int32_t> parent{-1};
  std::map<VertexSet, std::size_t> seen{{inst.start, 0}};
  const auto verts = inst.graph.vertices();
  const auto t0 = Clock::now();
  std::size_t head = 0;
  while (head < states.size()) {
    if (states.size() > limits.max_states ||
        std::chrono::duration<double>(Clock::now() - t0).count() > limits.max_seconds) {
      dec.answer = Answer::Unknown;
      dec.explored_states = states.size();
      return dec;
    }
    if (states[head] == inst.target) {
      dec.answer = Answer::Yes;
      dec.explored_states = states.size();
      std::vector<VertexSet> path;
      for (std::int64_t i = static_cast<std::int64_t>(head); i >= 0; i = parent[i])
        path.push_back(states[i]);
      std::reverse(path.begin(), path.end());
      dec.witness = std::move(path);
      return dec;
    }
    const VertexSet cur = states[head];
    for (VertexId drop : cur) {
      VertexSet rest = cur;
      set_erase(rest, drop);
      for (VertexId v : verts) {
        if (set_contains(cur, v)) continue;
        bool ok = true;
        for (VertexId w : rest)
          if (inst.graph.has_edge(v, w)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        VertexSet next = rest;
        set_insert(next, v);
        if (seen.emplace(next, states.size()).second) {
          states.push_back(std::move(next));
          parent.push_back(static_cast<std::int32_t>(head));
        }
      }
    }
    ++head;
  }
  dec.answer = Answer::No;
  dec.explored_states = states.size();
  return dec;
}

}  // namespace

TjDecision oracle_decide(const Instance& inst, const OracleLimits& limits) {
  inst.validate();
  TjDecision dec;
  if (inst.k <= 4 && inst.graph.next_fresh_id() < 0x10000) {
    PackedBfs bfs(inst, limits);
    dec = bfs.run();
  } else {
    dec = generic_bfs(inst, limits);
  }
  dec.method = Method::Oracle;
  return dec;
}

TjDecision decide(const Instance& inst, const KernelConfig& cfg, const OracleLimits& limits) {
  inst.validate();
  if (inst.start == inst.target) {
    TjDecision dec;
    dec.answer = Answer::Yes;
    dec.witness = std::vector<VertexSet>{inst.start};
    dec.method = Method::Oracle;
    return dec;
  }
  KernelOutcome outcome = kernelize(inst, cfg);
  TjDecision dec;
  if (outcome.decided_yes) {
    dec.answer = Answer::Yes;
    dec.method = Method::KernelShortCircuit;
  } else {
    dec = oracle_decide(*outcome.reduced, limits);
    dec.method = Method::KernelThenOracle;
    dec.witness_on_kernel = dec.witness.has_value();
    dec.kernel_vertex_count = outcome.reduced->graph.vertex_count();
  }
  dec.heuristic = outcome.trace.heuristic;
  dec.kernel_trace = std::move(outcome.trace);
  return dec;
}

}  // namespace tj
