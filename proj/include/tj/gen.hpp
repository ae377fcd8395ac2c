#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tj/graph.hpp"

namespace tj {

/// C3/C4-free by construction, hence K_{2,2}-free. edge_attempts random
/// pairs are tried; a pair is inserted only if its endpoints are at
/// distance >= 4.
struct Girth5 {
  int edge_attempts = 0;  // 0 means 10 * n
};

/// Random edges filtered through contains_biclique. Feasible for small n.
struct RejectionBicliqueFree {
  int ell = 3;
  int edge_budget = 0;  // edges to attempt; 0 means 3 * n
};

/// Sparse random graphs accepted only when the VC-dimension is at most 1.
struct Vc1Rejection {
  int accept_attempts = 200;
};

/// Planted similarity classes over an edgeless anchor set: class i has
/// class_sizes[i] members, each adjacent exactly to signatures[i] (indices
/// into the anchors 0 .. anchor_count-1).
struct TwinBlob {
  int anchor_count = 0;
  std::vector<int> class_sizes;
  std::vector<std::vector<int>> signatures;
};

using Family = std::variant<Girth5, RejectionBicliqueFree, Vc1Rejection, TwinBlob>;

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 0;
  Family family;
  int k = 1;
};

class GenError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Deterministic for a given spec (mt19937_64 throughout).
Graph gen_graph(const GenSpec& spec);

/// Samples two independent k-sets by randomized greedy with restarts.
std::optional<Instance> gen_instance(const Graph& g, int k, std::uint64_t seed, int ell,
                                     bool ell_certified = false, int restarts = 200);

/// Name of the PRNG recorded in corpus manifests.
inline const char* rng_name() { return "mt19937_64"; }

}  // namespace tj
