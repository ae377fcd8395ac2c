// Acceptance suite: one pass/fail line per criterion, exit code = #failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "tj/gen.hpp"
#include "tj/io.hpp"
#include "tj/kernel.hpp"
#include "tj/solver.hpp"
#include "tj/vcdim.hpp"

using namespace tj;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Answer resolve(const Instance& inst, const KernelConfig& cfg, const OracleLimits& limits) {
  const KernelOutcome out = kernelize(inst, cfg);
  if (out.decided_yes) return Answer::Yes;
  return oracle_decide(*out.reduced, limits).answer;
}

bool naive_has_biclique(const Graph& g, int ell) {
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (2 * ell > n) return false;
  for (unsigned a = 0; a < (1u << n); ++a) {
    if (__builtin_popcount(a) != ell) continue;
    for (unsigned b = a + 1; b < (1u << n); ++b) {
      if (__builtin_popcount(b) != ell || (a & b)) continue;
      bool all = true;
      for (int i = 0; i < n && all; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < n && all; ++j)
          if ((b >> j & 1) && !g.has_edge(verts[i], verts[j])) all = false;
      }
      if (all) return true;
      // the unordered pair (b, a) is covered by symmetry of the check
    }
  }
  return false;
}

struct CorpusEntry {
  Instance inst;
  KernelOutcome outcome;  // faithful kernelization
};

std::vector<CorpusEntry> corpus;  // shared by criteria 2, 4, 5, 6

void criterion1_oracle_sanity() {
  std::mt19937_64 rng(101);
  int made = 0;
  bool ok = true;
  std::string detail;
  while (made < 100) {
    const int n = 6 + static_cast<int>(rng() % 9);  // 6..14
    const int k = 1 + static_cast<int>(rng() % 3);
    const Graph g = random_graph(n, 0.3, rng);
    const auto inst = gen_instance(g, k, rng(), 2);
    if (!inst) continue;
    ++made;
    const auto fwd = oracle_decide(*inst);
    Instance rev = *inst;
    std::swap(rev.start, rev.target);
    if (oracle_decide(rev).answer != fwd.answer) {
      ok = false;
      detail = "symmetry violated";
      break;
    }
    Instance refl = *inst;
    refl.target = refl.start;
    if (oracle_decide(refl).answer != Answer::Yes) {
      ok = false;
      detail = "reflexivity violated";
      break;
    }
    std::vector<VertexId> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Instance rel;
    rel.graph = Graph(n);
    for (VertexId u : g.vertices())
      for (VertexId v : g.neighbors(u))
        if (u < v) rel.graph.add_edge(perm[u], perm[v]);
    rel.k = k;
    rel.ell = 2;
    for (VertexId v : inst->start) set_insert(rel.start, perm[v]);
    for (VertexId v : inst->target) set_insert(rel.target, perm[v]);
    if (oracle_decide(rel).answer != fwd.answer) {
      ok = false;
      detail = "relabeling invariance violated";
      break;
    }
  }
  report(1, "oracle symmetry, reflexivity, relabeling invariance on 100 instances", ok, detail);
}

void build_corpus() {
  std::mt19937_64 rng(202);
  while (corpus.size() < 300) {
    GenSpec spec;
    spec.seed = rng();
    const bool girth = corpus.size() % 2 == 0;
    spec.n = 8 + static_cast<int>(rng() % 9);  // 8..16
    const int k = 1 + static_cast<int>(rng() % 3);
    spec.k = k;
    int ell;
    if (girth) {
      spec.family = Girth5{};
      ell = 2;
    } else {
      spec.family = RejectionBicliqueFree{3, 3 * spec.n};
      ell = 3;
    }
    const Graph g = gen_graph(spec);
    auto inst = gen_instance(g, k, rng(), ell, /*ell_certified=*/true);
    if (!inst) continue;
    CorpusEntry entry{*inst, kernelize(*inst, {})};
    corpus.push_back(std::move(entry));
  }
}

void criterion2_kernel_oracle_equivalence() {
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& e = corpus[i];
    const Answer via_kernel = e.outcome.decided_yes
                                  ? Answer::Yes
                                  : oracle_decide(*e.outcome.reduced).answer;
    const Answer direct = oracle_decide(e.inst).answer;
    if (via_kernel != direct) {
      ok = false;
      detail = "mismatch at corpus index " + std::to_string(i);
      break;
    }
  }
  report(2, "faithful kernel-oracle equivalence on 300 corpus instances", ok, detail);
}

void criterion3_short_circuit_fixtures() {
  bool ok = true;
  std::string detail;

  // k=1, ell=2: edge {0,1} plus 200 isolated vertices; g(1,2) = 128
  Instance small;
  small.graph = Graph(202);
  small.graph.add_edge(0, 1);
  small.k = 1;
  small.start = {0};
  small.target = {1};
  small.ell = 2;
  const auto out1 = kernelize(small, {});
  if (!out1.decided_yes) {
    ok = false;
    detail = "k=1 fixture not short-circuited";
  } else if (oracle_decide(small).answer != Answer::Yes) {
    ok = false;
    detail = "oracle disagrees on k=1 fixture";
  }

  // k=2, ell=2: 1100 isolated vertices; g(2,2) = 1024
  if (ok) {
    Instance big;
    big.graph = Graph(1100);
    big.k = 2;
    big.start = {0, 1};
    big.target = {2, 3};
    big.ell = 2;
    const auto out2 = kernelize(big, {});
    if (!out2.decided_yes) {
      ok = false;
      detail = "k=2 fixture not short-circuited";
    } else {
      OracleLimits limits;
      limits.max_states = 1'000'000;
      limits.max_seconds = 110.0;
      const auto oracle = oracle_decide(big, limits);
      if (oracle.answer != Answer::Yes) {
        ok = false;
        detail = "oracle disagrees on k=2 fixture";
      }
    }
  }
  report(3, "rank<=1 short-circuit at the true thresholds (g(1,2)=128, g(2,2)=1024)", ok, detail);
}

void criterion4_no_big_final_class() {
  bool ok = true;
  for (const auto& e : corpus) {
    if (e.outcome.decided_yes) continue;
    const std::int64_t g_kl = big_threshold(e.inst.k, e.inst.ell, {});
    for (const auto& [size, count] : e.outcome.trace.final_class_size_histogram)
      if (static_cast<std::int64_t>(size) >= g_kl) ok = false;
  }
  report(4, "no final similarity class is big after faithful kernelize", ok);
}

void criterion5_step_count() {
  bool ok = true;
  for (const auto& e : corpus) {
    if (e.inst.ell != 3 || e.outcome.decided_yes) continue;
    const int expected = (2 * e.inst.k + 1) * (e.inst.ell - 2);
    if (e.outcome.trace.inner_steps != expected) ok = false;
  }
  report(5, "faithful traces have exactly (2k+1)(ell-2) inner steps for ell=3", ok);
}

void criterion6_high_rank_class_bound() {
  std::mt19937_64 rng(606);
  bool ok = true;
  auto check_partition = [&](const Graph& g, const VertexSet& x, int ell) {
    const auto part = partition_classes(g, x);
    for (const auto& [sig, members] : part.classes)
      if (sig.rank() >= ell && static_cast<int>(members.size()) > ell - 1) ok = false;
  };
  for (const auto& e : corpus)
    check_partition(e.inst.graph, set_union(e.inst.start, e.inst.target), e.inst.ell);
  for (int i = 0; i < 100; ++i) {
    const auto& e = corpus[rng() % corpus.size()];
    VertexSet x;
    for (VertexId v : e.inst.graph.vertices())
      if (rng() % 3 == 0) x.push_back(v);
    check_partition(e.inst.graph, x, e.inst.ell);
  }
  report(6, "classes of rank >= ell have at most ell-1 members", ok);
}

std::vector<Graph> girth5_corpus() {
  std::vector<Graph> out;
  std::mt19937_64 rng(707);
  for (int i = 0; i < 20; ++i) {
    GenSpec spec;
    spec.seed = rng();
    spec.n = 50 + (i % 10) * 28;  // 50..302 range, hits 300+ scale
    if (i < 2) spec.n = 300;
    spec.family = Girth5{};
    spec.k = 2;
    out.push_back(gen_graph(spec));
  }
  return out;
}

void criterion7_edge_bound(const std::vector<Graph>& graphs) {
  bool ok = true;
  for (const auto& g : graphs) {
    const double bound = kst_bound(g.vertex_count(), 2);
    if (static_cast<double>(g.edge_count()) > bound * (1.0 + 1e-9)) ok = false;
  }
  report(7, "every Girth5 graph satisfies the K_{2,2}-free edge bound", ok);
}

void criterion8_corollary2_constructive(const std::vector<Graph>& graphs) {
  bool ok = true;
  int used = 0;
  for (const auto& g : graphs) {
    if (g.vertex_count() < 256) continue;  // k*ell*(4k)^ell = 256 for k=2, ell=2
    ++used;
    const auto s = greedy_independent_set(g, 2);
    if (!s || !is_independent(g, *s) || s->size() != 2) ok = false;
  }
  if (used == 0) ok = false;
  report(8, "greedy extraction finds a verified 2-independent set on n>=256 graphs", ok,
         std::to_string(used) + " graphs at scale");
}

void criterion9_vc1_equivalence() {
  std::mt19937_64 rng(909);
  int made = 0;
  bool ok = true;
  std::string detail;
  while (made < 100) {
    GenSpec spec;
    spec.seed = rng();
    spec.n = 6 + static_cast<int>(rng() % 7);  // 6..12
    spec.family = Vc1Rejection{};
    const int k = 1 + static_cast<int>(rng() % 3);
    spec.k = k;
    Graph g;
    try {
      g = gen_graph(spec);
    } catch (const GenError&) {
      continue;
    }
    const auto inst = gen_instance(g, k, rng(), 2);
    if (!inst) continue;
    ++made;
    const auto verts = g.vertices();
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
        if (!trichotomy(g, verts[i], verts[j])) {
          ok = false;
          detail = "trichotomy returned none on a VC<=1 graph";
        }
    if (ok && vc1_decide(*inst).answer != oracle_decide(*inst).answer) {
      ok = false;
      detail = "vc1_decide disagrees with the oracle";
    }
    if (!ok) break;
  }
  report(9, "vc1_decide equals the oracle and the trichotomy is total (100 instances)", ok,
         detail);
}

void criterion10_vc_spot_values(const std::vector<Graph>& graphs) {
  bool ok = true;
  std::string detail;
  Graph k33(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k33.add_edge(i, 3 + j);
  if (vc_dimension(k33, 3) != 2) {
    ok = false;
    detail = "K_{3,3}";
  }
  if (vc_dimension(Graph(1), 3) != 0) {
    ok = false;
    detail = "single vertex";
  }
  if (vc_dimension(Graph(2), 3) != 1) {
    ok = false;
    detail = "two isolated vertices";
  }
  for (const auto& g : graphs)
    if (vc_dimension(g, 2) > 2) {
      ok = false;
      detail = "girth-5 graph above dimension 2";
      break;
    }
  report(10, "VC-dimension spot values and girth-5 corpus bound", ok, detail);
}

void criterion11_aggressive_report() {
  std::mt19937_64 rng(1111);
  int made = 0, agree = 0, reduced_all = 0;
  bool completed = true;
  std::ostringstream log;
  while (made < 200) {
    // planted rank-2 twin class over 2k edgeless anchors, plus random edges
    // among the non-anchor vertices
    const int k = 2;
    TwinBlob blob;
    blob.anchor_count = 2 * k;
    const int class_size = 8 + static_cast<int>(rng() % 12);
    blob.class_sizes = {class_size, 3};
    blob.signatures = {{0, 1}, {}};
    Graph g = gen_graph(GenSpec{rng(), 0, blob, k});
    const auto verts = g.vertices();
    for (int extra = 0; extra < 10; ++extra) {
      const VertexId u = verts[2 * k + rng() % (verts.size() - 2 * k)];
      const VertexId v = verts[2 * k + rng() % (verts.size() - 2 * k)];
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    Instance inst;
    inst.graph = g;
    inst.k = k;
    inst.start = {0, 1};
    inst.target = {2, 3};
    inst.ell = 3;

    KernelConfig cfg;
    cfg.mode = KernelMode::Aggressive;
    cfg.big_threshold_override = 8;
    cfg.indep_threshold_override = 1'000'000;
    const TjDecision dec = decide(inst, cfg);
    if (!dec.heuristic) {
      completed = false;
      break;
    }
    int reductions = 0;
    for (const auto& s : dec.kernel_trace.steps) reductions += s.classes_reduced;
    if (reductions < 1) continue;  // thresholds must force at least one reduction
    ++made;
    ++reduced_all;
    const Answer truth = oracle_decide(inst).answer;
    if (truth == dec.answer) ++agree;
    else
      log << "disagreement on seed instance " << made << ": aggressive="
          << answer_name(dec.answer) << " oracle=" << answer_name(truth) << "\n"
          << dec.kernel_trace.to_text();
  }
  std::cout << "aggressive-mode agreement: " << agree << "/" << made << "\n";
  if (agree < made) std::cout << log.str();
  report(11, "aggressive mode completes, flags heuristic, reports agreement", completed,
         std::to_string(reduced_all) + " instances with >=1 reduction");
}

void criterion12_biclique_oracle() {
  std::mt19937_64 rng(1212);
  bool ok = true;
  for (int trial = 0; trial < 5000 && ok; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);  // 3..7
    const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
    for (int ell = 2; ell <= 3; ++ell)
      if (contains_biclique(g, ell).has_value() != naive_has_biclique(g, ell)) ok = false;
  }
  report(12, "biclique detector agrees with naive enumeration on 5000 sampled graphs", ok);
}

}  // namespace

int main() {
  criterion1_oracle_sanity();
  build_corpus();
  criterion2_kernel_oracle_equivalence();
  criterion3_short_circuit_fixtures();
  criterion4_no_big_final_class();
  criterion5_step_count();
  criterion6_high_rank_class_bound();
  const auto girth5 = girth5_corpus();
  criterion7_edge_bound(girth5);
  criterion8_corollary2_constructive(girth5);
  criterion9_vc1_equivalence();
  criterion10_vc_spot_values(girth5);
  criterion11_aggressive_report();
  criterion12_biclique_oracle();

  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ") << "";
  if (failures) std::cout << failures;
  std::cout << std::endl;
  return failures;
}
