#pragma once

// Oriented multigraphs with loops and parallel edges, edge lengths, and the
// structural operations used throughout: subdivision, deletion, components,
// bridges, biconnectivity, stabilization and stable models.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropjac/arith.hpp"

namespace tropjac {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable oriented multigraph. Vertex and edge order is insertion order and
/// is the canonical order for every enumeration in the library.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Validates ids (unique, endpoints declared). Throws ValidationError.
  MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(const VertexId& v) const { return vertex_index_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edge_index_.contains(e); }
  /// Throws UnknownVertex.
  std::size_t vertex_index(const VertexId& v) const;
  /// Throws UnknownEdge.
  std::size_t edge_index(const EdgeId& e) const;
  const Edge& edge(const EdgeId& e) const { return edges_[edge_index(e)]; }

  std::size_t tail_index(std::size_t e) const { return ends_[e].first; }
  std::size_t head_index(std::size_t e) const { return ends_[e].second; }
  /// Edge indices incident to vertex index `v`; a loop appears once.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Edge id -> length. Lengths are Scalars: a positive rational, a symbol, or
/// (after subdivision or chain merging) a polynomial in the symbols.
class LengthAssignment {
 public:
  LengthAssignment() = default;
  /// Throws ValidationError if an edge is missing or a constant length is not
  /// strictly positive.
  LengthAssignment(const MultiGraph& g, std::map<EdgeId, Scalar> lengths);

  static LengthAssignment unit(const MultiGraph& g);
  /// One fresh symbol per edge: the edge id when it is a valid symbol name,
  /// otherwise "l<index>".
  static LengthAssignment symbolic(const MultiGraph& g);

  const Scalar& operator[](const EdgeId& e) const;
  const std::map<EdgeId, Scalar>& map() const { return lengths_; }
  bool all_rational() const;
  std::vector<Symbol> symbols() const;

  friend bool operator==(const LengthAssignment&, const LengthAssignment&) = default;

 private:
  std::map<EdgeId, Scalar> lengths_;
};

struct MetricGraph {
  MultiGraph graph;
  LengthAssignment lengths;
};

/// A vertex, or a point in the open interior of an edge located at fraction
/// t of the edge's length measured from its tail.
class PointOnGraph {
 public:
  static PointOnGraph vertex(VertexId v);
  /// Throws OutOfRangePosition unless 0 < t < 1.
  static PointOnGraph interior(EdgeId e, Rational t);

  bool is_vertex() const { return is_vertex_; }
  /// Vertex id, or edge id for interior points.
  const std::string& id() const { return id_; }
  const Rational& position() const { return t_; }

  friend bool operator==(const PointOnGraph& a, const PointOnGraph& b) {
    return a.is_vertex_ == b.is_vertex_ && a.id_ == b.id_ && a.t_ == b.t_;
  }
  friend bool operator<(const PointOnGraph& a, const PointOnGraph& b);

 private:
  PointOnGraph() = default;
  bool is_vertex_ = true;
  std::string id_;
  Rational t_;
};

/// "v" for vertices, "e@p/q" for interior points.
std::string to_string(const PointOnGraph& p);
/// Inverse of to_string against a graph. Throws UnknownVertex/UnknownEdge,
/// OutOfRangePosition, ParseError.
PointOnGraph parse_point(const MultiGraph& g, const std::string& text);

// --- basic invariants ------------------------------------------------------

bool is_connected(const MultiGraph& g);
/// #E - #V + 1. Throws DisconnectedGraph.
std::size_t genus(const MultiGraph& g);
/// Loops count twice. Throws UnknownVertex.
std::size_t valence(const MultiGraph& g, const VertexId& v);
/// Number of connected components (isolated vertices count).
std::size_t h0(const MultiGraph& g);
/// Same vertex set, edges in `removed` dropped. Throws UnknownEdge.
MultiGraph delete_edges(const MultiGraph& g, const std::vector<EdgeId>& removed);
/// Edges whose deletion increases h0, in graph order.
std::vector<EdgeId> bridges(const MultiGraph& g);
/// Connected and without a separating point. A single vertex with at most one
/// loop is biconnected; K2 and any graph with a loop plus other edges are not.
bool is_biconnected(const MultiGraph& g);

// --- edge-mask helpers shared by the enumeration code -----------------------

namespace detail {
/// Component count of (V, {e : keep[e]}).
std::size_t component_count(const MultiGraph& g, const std::vector<char>& keep);
/// Component label per vertex index of (V, {e : keep[e]}).
std::vector<std::size_t> component_labels(const MultiGraph& g, const std::vector<char>& keep);
}  // namespace detail

// --- metric operations -----------------------------------------------------

struct Subdivision {
  MultiGraph graph;
  LengthAssignment lengths;
  VertexId new_vertex;
};

/// Splits edge `e` at fraction t from its tail. The pieces are "<e>#1"
/// (tail side) and "<e>#2"; the new vertex is "<e>@<t>". Lengths are
/// t*l(e) and (1-t)*l(e).
Subdivision subdivide(const MultiGraph& g, const LengthAssignment& lengths, const EdgeId& e,
                      const Rational& t);

/// A model in which a set of points are all vertices.
struct Refinement {
  struct Segment {
    EdgeId original;
    Rational from;  // fraction of the original edge, from its tail
    Rational to;
  };
  MetricGraph model;
  std::map<PointOnGraph, VertexId> vertex_of;
  /// model edge -> the stretch of the original edge it covers
  std::map<EdgeId, Segment> segment_of;
  /// model vertex -> the point of the original graph it represents
  std::map<VertexId, PointOnGraph> point_of;
};

/// Subdivides every edge at the interior points listed (several per edge are
/// allowed). Untouched edges keep their ids; split edge e becomes
/// "e#1".."e#k" in tail-to-head order with new vertices "e@t".
Refinement refine(const MultiGraph& g, const LengthAssignment& lengths,
                  const std::vector<PointOnGraph>& points);

/// Repeatedly removes valence-1 vertices with their edge (first such vertex
/// in vertex order each time). Throws DisconnectedGraph, GenusZero.
MetricGraph stabilize(const MultiGraph& g, const LengthAssignment& lengths);

/// Keeps vertices of valence >= 3 and merges chains of valence-2 vertices into
/// single edges with summed lengths. Non-semistable input is stabilized
/// first. Throws GenusTooSmall when genus < 2.
MetricGraph stable_model(const MultiGraph& g, const LengthAssignment& lengths);

}  // namespace tropjac
