#pragma once

#include <optional>
#include <variant>

#include "tj/graph.hpp"
#include "tj/solver.hpp"

namespace tj {

/// Closed-neighborhood hypergraph: one hyperedge N[v] per vertex.
struct NeighborhoodHypergraph {
  VertexSet ground;
  std::vector<std::pair<VertexId, VertexSet>> edges;
};

NeighborhoodHypergraph neighborhood_hypergraph(const Graph& g);

/// True iff all 2^|s| traces occur among {edge ∩ s}. |s| capped at 20.
bool is_shattered(const NeighborhoodHypergraph& h, const VertexSet& s);

/// Largest shattered-set size found, searching subsets of size up to cap + 1;
/// a result of cap + 1 means the dimension exceeds cap. Empty graph gives -1.
int vc_dimension(const Graph& g, int cap);

/// Same search, also reporting a maximum shattered set.
std::pair<int, VertexSet> vc_dimension_witness(const Graph& g, int cap);

struct Disjoint {};
struct Inclusion {
  VertexId smaller;
  VertexId larger;
};
struct DominatingPair {};
using Trichotomy = std::variant<Disjoint, Inclusion, DominatingPair>;

/// The three mutually exclusive relations a vertex pair can have when the
/// pair is not shattered; nullopt certifies VC-dimension >= 2.
std::optional<Trichotomy> trichotomy(const Graph& g, VertexId u, VertexId v);

/// Deletes dominated vertices (N[u] ⊆ N[v] removes v) until no inclusion
/// pair remains, patching I and J when they contain a deleted vertex.
/// Requires VC-dimension <= 1.
Instance vc1_reduce(const Instance& inst);

/// Polynomial decision for VC-dimension <= 1: reduce, then answer YES
/// directly for k >= 3, or via the oracle for k <= 2.
TjDecision vc1_decide(const Instance& inst, const OracleLimits& limits = {});

}  // namespace tj
