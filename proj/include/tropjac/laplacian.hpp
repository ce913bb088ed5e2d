#pragma once

// Combinatorial and weighted Laplacians, and grounded Laplacian solves.

#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/linalg.hpp"

namespace tropjac {

/// Valence (without loops) on the diagonal, minus edge multiplicities off it.
Matrix<BigInt> laplacian_matrix(const MultiGraph& g);

/// Conductances 1/l(e) in place of edge counts; loops contribute nothing.
Matrix<Scalar> weighted_laplacian(const MultiGraph& g, const LengthAssignment& lengths);

/// Solves L x = rhs (rhs indexed by vertex, summing to zero) with
/// x[ground] = 0. Throws DisconnectedGraph.
std::vector<Scalar> solve_grounded(const MultiGraph& g, const LengthAssignment& lengths,
                                   const std::vector<Scalar>& rhs, std::size_t ground);

}  // namespace tropjac
