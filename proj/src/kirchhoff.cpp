#include "tropjac/kirchhoff.hpp"

#include <deque>

#include "tropjac/error.hpp"
#include "tropjac/laplacian.hpp"

namespace tropjac {

namespace {

Scalar weight_of(const MultiGraph& g, const LengthAssignment& lengths, const std::vector<std::size_t>& tree) {
  std::vector<char> in(g.num_edges(), 0);
  for (std::size_t e : tree) in[e] = 1;
  Scalar w(1);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!in[e]) w *= lengths[g.edges()[e].id];
  return w;
}

// Signed edges on the tree path s -> t: +1 when traversed tail -> head.
std::vector<std::pair<std::size_t, int>> tree_path(const MultiGraph& g, const std::vector<std::size_t>& tree,
                                                    std::size_t s, std::size_t t) {
  std::vector<std::vector<std::size_t>> adj(g.num_vertices());
  for (std::size_t e : tree) {
    adj[g.tail_index(e)].push_back(e);
    adj[g.head_index(e)].push_back(e);
  }
  std::vector<std::size_t> via(g.num_vertices(), SIZE_MAX);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<std::size_t> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (std::size_t e : adj[u]) {
      std::size_t w = g.tail_index(e) == u ? g.head_index(e) : g.tail_index(e);
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = e;
      queue.push_back(w);
    }
  }
  std::vector<std::pair<std::size_t, int>> path;
  for (std::size_t v = t; v != s;) {
    std::size_t e = via[v];
    path.emplace_back(e, g.head_index(e) == v ? 1 : -1);
    v = g.head_index(e) == v ? g.tail_index(e) : g.head_index(e);
  }
  return path;
}

}  // namespace

Scalar rebase(const Scalar& s, const Scalar& den) {
  if (s.is_constant() || den.is_constant() || !den.den().constant_value()) return s;
  auto r = s.over(den.num());
  return r ? *r : s;
}

Scalar tree_weight(const MultiGraph& g, const LengthAssignment& lengths, const SpanningTree& t) {
  if (!is_spanning_tree(g, t.edges)) throw Error(ErrorCode::NotSpanningTree, "edge set is not a spanning tree");
  std::vector<std::size_t> idx;
  for (const auto& e : t.edges) idx.push_back(g.edge_index(e));
  return weight_of(g, lengths, idx);
}

Scalar kirchhoff_denominator(const MultiGraph& g, const LengthAssignment& lengths) {
  Scalar total(0);
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>& t) { total += weight_of(g, lengths, t); });
  return total;
}

std::map<EdgeId, Scalar> currents(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y,
                                  const VertexId& z) {
  std::size_t s = g.vertex_index(y), t = g.vertex_index(z);
  std::vector<Scalar> num(g.num_edges());
  Scalar den(0);
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>& tree) {
    Scalar w = weight_of(g, lengths, tree);
    den += w;
    if (s == t) return;
    for (const auto& [e, sign] : tree_path(g, tree, s, t)) num[e] += sign > 0 ? w : -w;
  });
  std::map<EdgeId, Scalar> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) out.emplace(g.edges()[e].id, num[e] / den);
  return out;
}

Scalar current(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y, const VertexId& z,
               const EdgeId& e) {
  g.edge_index(e);
  return currents(g, lengths, y, z).at(e);
}

Scalar voltage_drop(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y, const VertexId& z) {
  std::size_t s = g.vertex_index(y), t = g.vertex_index(z);
  if (s == t) throw Error(ErrorCode::SameVertex, "voltage drop needs two distinct vertices");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  std::vector<VertexId> vs;
  for (const auto& v : g.vertices())
    if (v != z) vs.push_back(v);
  std::vector<Edge> es;
  for (Edge e : g.edges()) {
    if (e.tail == z) e.tail = y;
    if (e.head == z) e.head = y;
    es.push_back(e);
  }
  MultiGraph g0(std::move(vs), std::move(es));
  LengthAssignment l0(g0, lengths.map());
  return kirchhoff_denominator(g0, l0) / kirchhoff_denominator(g, lengths);
}

PotentialSolution unit_potential(const MultiGraph& g, const LengthAssignment& lengths, const VertexId& y,
                                 const VertexId& z) {
  std::size_t s = g.vertex_index(y), t = g.vertex_index(z);
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  PotentialSolution p{g, lengths, y, z, {}, {}};
  std::vector<Scalar> x(g.num_vertices());
  if (s != t) {
    std::vector<Scalar> rhs(g.num_vertices());
    rhs[s] = Scalar(1);
    rhs[t] = Scalar(-1);
    x = solve_grounded(g, lengths, rhs, t);
    bool symbolic = false;
    for (const auto& v : x) symbolic = symbolic || !v.is_constant();
    if (symbolic) {
      Scalar k = kirchhoff_denominator(g, lengths);
      for (auto& v : x) v = rebase(v, k);
    }
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) p.values.emplace(g.vertices()[v], x[v]);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges()[e];
    p.currents.emplace(edge.id, (x[g.tail_index(e)] - x[g.head_index(e)]) / lengths[edge.id]);
  }
  return p;
}

PotentialSolution unit_potential(const MultiGraph& g, const LengthAssignment& lengths, const PointOnGraph& y,
                                 const PointOnGraph& z) {
  Refinement r = refine(g, lengths, {y, z});
  return unit_potential(r.model.graph, r.model.lengths, r.vertex_of.at(y), r.vertex_of.at(z));
}

}  // namespace tropjac
