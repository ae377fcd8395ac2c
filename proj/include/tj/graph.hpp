#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tj {

using VertexId = int;

/// Sorted, duplicate-free list of vertex ids. Free-function set algebra below.
using VertexSet = std::vector<VertexId>;

bool set_contains(const VertexSet& s, VertexId v);
void set_insert(VertexSet& s, VertexId v);
void set_erase(VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet make_set(std::initializer_list<VertexId> ids);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph. Ids are dense on construction; surgery hands out
/// fresh ids from a counter and never reuses deleted ones.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  VertexId next_fresh_id() const { return static_cast<VertexId>(present_.size()); }

  /// N[v] = {v} ∪ N(v).
  VertexSet closed_neighborhood(VertexId v) const;

  void check_vertex(VertexId v) const;

 private:
  std::vector<char> present_;
  std::vector<std::set<VertexId>> adj_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// A reconfiguration instance: two k-independent sets over the same graph.
struct Instance {
  Graph graph;
  int k = 1;
  VertexSet start;   // I
  VertexSet target;  // J
  int ell = 2;
  bool ell_certified = false;

  /// Throws GraphError unless |I| = |J| = k and both sets are independent.
  /// With check_ell, additionally verifies K_{ell,ell}-freeness (small n only).
  void validate(bool check_ell = false) const;
};

bool is_independent(const Graph& g, const VertexSet& s);

/// Finds a K_{ell,ell} subgraph (disjoint sides, all cross edges present),
/// if one exists. Enumerates ell-subsets A and tests their common
/// neighborhood.
std::optional<std::pair<VertexSet, VertexSet>> contains_biclique(const Graph& g, int ell);

/// Kovari–Sos–Turan edge bound for K_{ell,ell}-free graphs on n vertices.
double kst_bound(std::size_t n, int ell);

/// Bipartite variant with sides of size n and m; (n - ell + 1) clamped at 0.
double kst_bipartite_bound(std::size_t n, std::size_t m, int ell);

/// Min-degree greedy: pick the lowest-id minimum-degree vertex, delete its
/// closed neighborhood, repeat. Failure is not a certificate of absence.
std::optional<VertexSet> greedy_independent_set(const Graph& g, int k);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SearchResult {
  SearchStatus status;
  VertexSet set;  // meaningful only when Found
};

/// Branch and bound for a k-independent set, capped by a node budget.
SearchResult exact_independent_set(const Graph& g, int k, std::uint64_t budget);

}  // namespace tj
