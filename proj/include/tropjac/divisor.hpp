#pragma once

// Divisors, piecewise-linear functions, torsion classification, the critical
// group, and current-/voltage-active edge diagnostics.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/linalg.hpp"
#include "tropjac/matroid.hpp"

namespace tropjac {

class Divisor {
 public:
  Divisor() = default;

  void add(const PointOnGraph& p, long long c);
  long long coefficient(const PointOnGraph& p) const;
  long long degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<PointOnGraph, long long>& terms() const { return terms_; }
  std::vector<PointOnGraph> support() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<PointOnGraph, long long> terms_;
};

/// "2*(v1) + 1*(e3@1/2) - 3*(v2)"; the coefficient may be omitted, "0" is
/// the zero divisor. Throws ParseError, UnknownVertex, UnknownEdge,
/// OutOfRangePosition.
Divisor parse_divisor(const MultiGraph& g, const std::string& text);
std::string to_string(const Divisor& d);

using ScalarDivisor = std::map<PointOnGraph, Scalar>;

/// Values at the vertices of a refined model of a base metric graph.
struct PLFunction {
  MultiGraph base;
  LengthAssignment base_lengths;
  Refinement model;
  std::map<VertexId, Scalar> values;

  const MultiGraph& graph() const { return model.model.graph; }
  const LengthAssignment& lengths() const { return model.model.lengths; }
  /// (f(tail) - f(head)) / l on a model edge: the current of f along it.
  Scalar slope(const EdgeId& model_edge) const;
  /// Value at a point represented in the model.
  Scalar value(const PointOnGraph& p) const;
};

/// Constant zero function on the unrefined model.
PLFunction zero_function(const MultiGraph& g, const LengthAssignment& lengths);

/// Sum of incoming slopes at every model vertex, mapped back to points.
/// Zero coefficients are omitted.
ScalarDivisor laplacian_divisor(const PLFunction& f);
ScalarDivisor to_scalar_divisor(const Divisor& d);

/// f with Div(f) = D - E, zero at the first point of E's support (or of D's,
/// or the first vertex). Throws DegreeMismatch.
PLFunction solve_for_function(const MultiGraph& g, const LengthAssignment& lengths, const Divisor& d,
                              const Divisor& e);

enum class TorsionClass { IdenticallyPrincipal, TorsionAtAllLengths, TorsionAtGivenLengths, NonTorsionForVeryGeneral };
std::string_view to_string(TorsionClass c);

struct TorsionVerdict {
  TorsionClass classification;
  /// Model edge and its slope: the nonconstant slope for
  /// NonTorsionForVeryGeneral, otherwise a slope of largest denominator.
  std::optional<std::pair<EdgeId, Scalar>> witness;
  /// lcm of slope denominators when every slope is constant.
  std::optional<BigInt> order;
  /// Distinct constant slope values, ascending.
  std::vector<Rational> slope_values;
  PLFunction function;
};

/// Throws DegreeMismatch.
TorsionVerdict classify_torsion(const MultiGraph& g, const LengthAssignment& lengths, const Divisor& d,
                                const Divisor& e);
/// Classification of an already computed f.
TorsionVerdict classify_function(const PLFunction& f);

enum class VertexPairClass { SlopesZeroOne, GenericNonTorsion };
std::string_view to_string(VertexPairClass c);

struct VertexPairVerdict {
  VertexPairClass classification;
  /// Edge whose current is a nonconstant function of generic edge lengths.
  std::optional<std::pair<EdgeId, Scalar>> witness;
};

/// Throws UnknownVertex, DisconnectedGraph.
VertexPairVerdict classify_vertex_pair(const MultiGraph& g, const VertexId& x, const VertexId& y);

/// Edges of the base graph, in graph order.
struct ActiveEdges {
  EdgeSet current_active;
  EdgeSet voltage_active;
};

ActiveEdges active_edges(const PLFunction& f);

struct ActiveLemmaReport {
  ActiveEdges active;
  bool divisor_nonzero = false;
  /// Edges crossing a level partition of the vertex values.
  std::optional<EdgeSet> cut;
  bool cut_disconnects = false;
  /// A cycle inside the current-active edges.
  std::optional<CycleSubgraph> cycle;
  /// Nonzero divisor implies an active edge.
  bool some_active = true;
  /// Whether Div(f) = D - E with D, E placing one interior point on each
  /// designated edge was confirmed (false when no edges were designated).
  bool hypothesis_checked = false;
};

/// With designated edges, first validates that Div(f) is supported on their
/// interiors with at most one +1 and one -1 on each; throws
/// HypothesisViolated otherwise.
ActiveLemmaReport check_active_lemmas(const PLFunction& f, const EdgeSet& designated = {});

/// Invariant factors (> 1) of the reduced Laplacian.
std::vector<BigInt> critical_group(const MultiGraph& g);

/// The reduced Laplacian (row and column of the least vertex id removed) and
/// its Smith form.
struct CriticalGroupCertificate {
  VertexId deleted;
  Matrix<BigInt> reduced;
  SmithForm smith;
  std::vector<BigInt> factors;
};
CriticalGroupCertificate critical_group_certificate(const MultiGraph& g);

}  // namespace tropjac
