#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tj/graph.hpp"

namespace tj {

/// Neighborhood of a vertex restricted to the current important set X.
struct Signature {
  VertexSet neighbors_in_x;

  int rank() const { return static_cast<int>(neighbors_in_x.size()); }
  bool operator<(const Signature& o) const { return neighbors_in_x < o.neighbors_in_x; }
  bool operator==(const Signature& o) const { return neighbors_in_x == o.neighbors_in_x; }
};

/// Similarity classes of V \ X keyed by X-signature.
struct ClassPartition {
  VertexSet x;
  std::map<Signature, VertexSet> classes;
};

ClassPartition partition_classes(const Graph& g, const VertexSet& x);

enum class KernelMode { Faithful, Aggressive };

struct KernelConfig {
  KernelMode mode = KernelMode::Faithful;
  std::optional<std::int64_t> big_threshold_override;    // Aggressive only
  std::optional<std::int64_t> indep_threshold_override;  // Aggressive only
  // Aggressive only: certify reductions with an exact independent-set search
  // over the untouched part of the class before applying them.
  bool certify = false;
  std::uint64_t certify_budget = 1'000'000;
};

class ThresholdOverflow : public GraphError {
 public:
  using GraphError::GraphError;
};

/// g(k,ell) = 4*k*ell*(4k)^ell in Faithful mode, override in Aggressive.
/// Throws ThresholdOverflow when the exact value exceeds int64.
std::int64_t big_threshold(int k, int ell, const KernelConfig& cfg);

/// Vertices outside x with at least |c|/(8*ell) neighbors inside c
/// (compared exactly via cross-multiplication).
VertexSet heavy_vertices(const Graph& g, const VertexSet& c, const VertexSet& x, int ell);

/// Deletes class c and adds k fresh vertices adjacent exactly to the class
/// signature. Returns the new graph and the fresh vertex set.
std::pair<Graph, VertexSet> reduce_class(const Graph& g, const VertexSet& c,
                                         const Signature& signature, int k);

struct StepRecord {
  int index_j = 0;
  int depth_s = 0;  // -1 for the end-of-index sweep that reduces leftovers
  std::size_t x_before = 0;
  std::size_t x_after = 0;
  int classes_treated = 0;
  int classes_reduced = 0;
  std::vector<std::size_t> heavy_counts;  // |Y| per treated class
};

struct KernelTrace {
  std::vector<StepRecord> steps;
  std::map<std::size_t, int> final_class_size_histogram;
  bool decided_early = false;
  bool heuristic = false;
  int inner_steps = 0;  // (j, s) iterations, excluding end-of-index sweeps
  // Big rank<=1 classes observed after X grew (should stay 0 in Faithful mode
  // whenever the initial check passed).
  int late_big_low_rank = 0;
  // Treated classes whose |Y| exceeded the (3*ell)^(2*ell) bound.
  int y_bound_exceeded = 0;

  std::string to_text() const;
  std::string to_json() const;
};

struct KernelOutcome {
  bool decided_yes = false;
  std::string reason;
  std::optional<Instance> reduced;  // set iff !decided_yes
  KernelTrace trace;
};

KernelOutcome kernelize(const Instance& inst, const KernelConfig& cfg);

}  // namespace tj
