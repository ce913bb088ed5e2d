#pragma once

// Spanning trees, cycles, bonds and the cographic matroid of a multigraph;
// girth and independent girth.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropjac/graph.hpp"

namespace tropjac {

/// Edge ids listed in graph order.
using EdgeSet = std::vector<EdgeId>;

/// A count that may be +infinity (girths of forests).
class Extended {
 public:
  static Extended infinity() { return Extended(); }
  explicit Extended(std::size_t v) : v_(v) {}

  bool is_infinite() const { return !v_; }
  std::size_t value() const { return *v_; }

  friend bool operator==(const Extended&, const Extended&) = default;
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (!a.v_ || !b.v_) return !a.v_ <=> !b.v_;
    return *a.v_ <=> *b.v_;
  }

 private:
  Extended() = default;
  std::optional<std::size_t> v_;
};

/// Decimal value or "inf".
std::string to_string(const Extended& x);

struct SpanningTree {
  EdgeSet edges;
};

struct CycleSubgraph {
  /// Edges in traversal order; edges[i] joins vertices[i] and vertices[i+1 mod k].
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  /// Edges in graph order.
  EdgeSet edge_set(const MultiGraph& g) const;
};

/// TROPJAC_MAX_CYCLES when set to a positive integer, otherwise 1000000.
std::size_t default_cycle_cap();

/// Calls `fn` with the edge indices (ascending) of every spanning tree, in
/// lexicographic order. Throws DisconnectedGraph.
void for_each_spanning_tree(const MultiGraph& g, const std::function<void(const std::vector<std::size_t>&)>& fn);
std::vector<SpanningTree> spanning_trees(const MultiGraph& g);
/// The lexicographically first spanning tree (greedy in edge order).
std::vector<std::size_t> first_spanning_tree(const MultiGraph& g);
bool is_spanning_tree(const MultiGraph& g, const EdgeSet& edges);

/// All simple cycles: loops, parallel pairs, and longer circuits, each once.
/// Throws CycleLimitExceeded when more than `cap` cycles exist.
std::vector<CycleSubgraph> graphic_cycles(const MultiGraph& g, std::optional<std::size_t> cap = {});
/// Throws NotACycle unless `edges` is the edge set of a cycle of g.
CycleSubgraph cycle_from_edges(const MultiGraph& g, const EdgeSet& edges);

/// #A + h0(G) - h0(G \ A); equals #A + 1 - h0(G \ A) for connected G.
std::size_t cographic_rank(const MultiGraph& g, const EdgeSet& a);
/// Minimal disconnecting edge sets, lexicographic in graph order.
std::vector<EdgeSet> bonds(const MultiGraph& g);
/// Size-d edge sets whose removal keeps g connected, lexicographic.
std::vector<EdgeSet> cographic_independent_sets(const MultiGraph& g, std::size_t d);

Extended girth(const MultiGraph& g);
Extended independent_girth(const MultiGraph& g, std::optional<std::size_t> cap = {});

/// Fundamental cycles of first_spanning_tree(g); one row per non-tree edge.
struct CycleBasisMatrix {
  std::vector<EdgeId> columns;
  std::vector<EdgeId> tree;
  std::vector<EdgeId> row_edges;
  std::vector<std::vector<int>> rows;

  std::size_t column_rank(const MultiGraph& g, const EdgeSet& subset) const;
};

/// Throws DisconnectedGraph.
CycleBasisMatrix cycle_basis_matrix(const MultiGraph& g);

}  // namespace tropjac
