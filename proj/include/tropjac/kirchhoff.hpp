#pragma once

// Unit potential functions and their currents: Kirchhoff's spanning-tree
// formulas and a grounded Laplacian solve as an independent check.

#include <map>

#include "tropjac/graph.hpp"
#include "tropjac/matroid.hpp"

namespace tropjac {

/// Potential j with Laplacian y - z and j(z) = 0. `currents` are the flows
/// (j(tail) - j(head)) / l(e), positive when current runs tail -> head.
struct PotentialSolution {
  MultiGraph graph;
  LengthAssignment lengths;
  VertexId source;
  VertexId sink;
  std::map<VertexId, Scalar> values;
  std::map<EdgeId, Scalar> currents;
};

/// Product of the lengths of edges outside T. Throws NotSpanningTree.
Scalar tree_weight(const MultiGraph& g, const LengthAssignment& lengths, const SpanningTree& t);
/// Sum of w(T) over all spanning trees.
Scalar kirchhoff_denominator(const MultiGraph& g, const LengthAssignment& lengths);

/// Tree-sum current along e for unit flow y -> z. Throws DisconnectedGraph,
/// UnknownVertex, UnknownEdge.
Scalar current(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y, const VertexId& z,
               const EdgeId& e);
/// The same for every edge at once.
std::map<EdgeId, Scalar> currents(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y,
                                  const VertexId& z);

/// j(y) - j(z) from spanning trees of the graph with y and z identified.
/// Throws SameVertex.
Scalar voltage_drop(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y, const VertexId& z);

/// Values from the grounded Laplacian solve, currents derived from them.
PotentialSolution unit_potential(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y,
                                 const VertexId& z);
/// Interior endpoints are first made vertices; the solution lives on the
/// refined model.
PotentialSolution unit_potential(const MultiGraph& g, const LengthAssignment& lengths, const PointOnGraph& y,
                                 const PointOnGraph& z);

/// Rewrites symbolic values over `den` when that divides out exactly.
Scalar rebase(const Scalar& s, const Scalar& den);

}  // namespace tropjac
