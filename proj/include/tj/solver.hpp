#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tj/graph.hpp"
#include "tj/kernel.hpp"

namespace tj {

enum class Answer { Yes, No, Unknown };
enum class Method { Oracle, KernelShortCircuit, KernelThenOracle, Vc1 };

struct TjDecision {
  Answer answer = Answer::Unknown;
  std::optional<std::vector<VertexSet>> witness;
  std::uint64_t explored_states = 0;
  Method method = Method::Oracle;
  bool heuristic = false;
  // Witness sets live in the kernel graph, not the input graph.
  bool witness_on_kernel = false;
  std::size_t kernel_vertex_count = 0;
  KernelTrace kernel_trace;
};

struct OracleLimits {
  std::uint64_t max_states = 5'000'000;
  double max_seconds = 60.0;
};

/// TJ adjacency: the sets differ by exactly one vertex on each side.
bool tj_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Exhaustive BFS over the k-independent sets of the instance graph.
/// YES comes with a shortest witness; Unknown on budget exhaustion.
TjDecision oracle_decide(const Instance& inst, const OracleLimits& limits = {});

/// Kernelize, then short-circuit or run the oracle on the kernel.
TjDecision decide(const Instance& inst, const KernelConfig& cfg = {},
                  const OracleLimits& limits = {});

}  // namespace tj
