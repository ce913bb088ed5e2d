#include "tropjac/laplacian.hpp"

#include "tropjac/error.hpp"

namespace tropjac {

Matrix<BigInt> laplacian_matrix(const MultiGraph& g) {
  std::size_t n = g.num_vertices();
  Matrix<BigInt> l(n, std::vector<BigInt>(n, 0));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t a = g.tail_index(e), b = g.head_index(e);
    if (a == b) continue;
    l[a][a] += 1;
    l[b][b] += 1;
    l[a][b] -= 1;
    l[b][a] -= 1;
  }
  return l;
}

Matrix<Scalar> weighted_laplacian(const MultiGraph& g, const LengthAssignment& lengths) {
  std::size_t n = g.num_vertices();
  Matrix<Scalar> l(n, std::vector<Scalar>(n));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t a = g.tail_index(e), b = g.head_index(e);
    if (a == b) continue;
    Scalar c = Scalar(1) / lengths[g.edges()[e].id];
    l[a][a] += c;
    l[b][b] += c;
    l[a][b] -= c;
    l[b][a] -= c;
  }
  return l;
}

std::vector<Scalar> solve_grounded(const MultiGraph& g, const LengthAssignment& lengths,
                                   const std::vector<Scalar>& rhs, std::size_t ground) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  std::size_t n = g.num_vertices();
  Matrix<Scalar> full = weighted_laplacian(g, lengths);
  Matrix<Scalar> a;
  std::vector<Scalar> b;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == ground) continue;
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < n; ++j)
      if (j != ground) row.push_back(full[i][j]);
    a.push_back(std::move(row));
    b.push_back(rhs[i]);
  }
  std::vector<Scalar> reduced = solve(a, b);
  std::vector<Scalar> x(n);
  for (std::size_t i = 0, k = 0; i < n; ++i)
    if (i != ground) x[i] = reduced[k++];
  return x;
}

}  // namespace tropjac
