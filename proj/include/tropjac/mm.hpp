#pragma once

// Manin-Mumford decisions for metric graphs: the degree range with finite
// torsion packets, uniform bounds, infinite-packet witnesses on cycles, cells
// of Eff^d, and the rational-length failure demonstration.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropjac/divisor.hpp"
#include "tropjac/matroid.hpp"

namespace tropjac {

/// C(n, k) exactly; 0 when k > n.
BigInt binomial(std::size_t n, std::size_t k);

struct MMReport {
  std::size_t genus = 0;
  Extended girth = Extended::infinity();
  Extended independent_girth = Extended::infinity();
  /// 1 <= d < independent girth
  std::vector<std::size_t> mm_finite_degrees;
  /// 3g - 3 (degree 1) and C(3g - 3, d), for g >= 2 and d in mm_finite_degrees.
  std::optional<BigInt> edge_bound;
  std::map<std::size_t, BigInt> uniform_bounds;
  std::optional<std::size_t> stable_edge_count;
  bool biconnected = false;
  std::string note;
};

/// Throws GenusZero, DisconnectedGraph, CycleLimitExceeded.
MMReport analyze(const MultiGraph& g, const LengthAssignment& lengths, std::optional<std::size_t> cycle_cap = {});

struct PacketWitness {
  CycleSubgraph cycle;
  Divisor d;  // cycle vertices
  Divisor e;  // edge midpoints
  PLFunction f;
  /// Degree at which packets are infinite: cographic rank of the cycle.
  std::size_t degree = 0;
  // verification transcript
  bool divisor_matches = false;
  bool slopes_half_integral = false;
  TorsionClass verdict = TorsionClass::IdenticallyPrincipal;
  TorsionClass solved_verdict = TorsionClass::IdenticallyPrincipal;
  std::vector<Rational> slope_values;

  bool verified() const {
    return divisor_matches && slopes_half_integral && verdict == TorsionClass::TorsionAtAllLengths &&
           solved_verdict == TorsionClass::TorsionAtAllLengths && d != e;
  }
};

/// f vanishes at every vertex and dips to -l(e)/4 at each midpoint of C, so
/// Div(f) = D - E with slopes +-1/2 on C. The classification of (D, E) is
/// confirmed both on f itself and on an independent Laplacian solve.
/// Throws NotACycle.
PacketWitness infinite_packet_witness(const MultiGraph& g, const LengthAssignment& lengths, const EdgeSet& cycle);

struct EffCell {
  EdgeSet edges;
  std::size_t dimension = 0;
};

/// Cographic independent d-sets; dimension from the cycle-space realization.
/// Throws DegreeOutOfRange.
std::vector<EffCell> eff_cells(const MultiGraph& g, std::size_t d);

struct GirthBoundReport {
  std::size_t genus = 0;
  std::size_t girth = 0;
  Extended independent_girth = Extended::infinity();
  /// 2^(girth - 2) < genus^2, equivalent to girth < 2 log2(genus) + 2.
  bool holds = false;
  bool independent_at_most_girth = false;
  /// genus^2 - 2^(girth - 2)
  Rational slack;
};

/// Throws NotStable, GenusTooSmall.
GirthBoundReport check_girth_log_bound(const MultiGraph& g);

struct RationalDemoReport {
  BigInt scale;
  std::size_t unit_vertices = 0;
  std::size_t unit_edges = 0;
  std::size_t depth = 0;
  std::size_t vertices = 0;
  std::size_t expected_packet_size = 0;
  std::vector<BigInt> critical_group;
  VertexId base;
  /// order of [v - base] in the critical group of the depth-k model
  std::map<VertexId, BigInt> orders;
  bool all_torsion = false;
  MetricGraph model;
};

/// Throws IrrationalLength, GenusZero, ValidationError (depth 0).
RationalDemoReport rational_length_failure_demo(const MultiGraph& g, const LengthAssignment& lengths,
                                                std::size_t depth);

/// Order of the class of a vertex-supported degree-0 divisor (given by vertex
/// coefficients) in the critical group.
BigInt class_order(const CriticalGroupCertificate& cert, const MultiGraph& g, const std::vector<long long>& coeffs);

}  // namespace tropjac
