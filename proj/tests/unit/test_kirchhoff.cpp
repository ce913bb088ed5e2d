#include <random>

#include "doctest.h"
#include "tropjac/catalog.hpp"
#include "tropjac/error.hpp"
#include "tropjac/kirchhoff.hpp"
#include "tropjac/laplacian.hpp"

using namespace tropjac;

namespace {
Scalar S(const char* t) { return parse_scalar(t); }
}  // namespace

TEST_CASE("theta example") {
  auto th = catalog::theta();
  CHECK(current(th.graph, th.lengths, "y", "z", "e1") == S("b*c/(a*b+a*c+b*c)"));
  CHECK(to_string(current(th.graph, th.lengths, "y", "z", "e1")) == "b*c/(a*b+a*c+b*c)");
  CHECK(voltage_drop(th.graph, th.lengths, "y", "z") == S("a*b*c/(a*b+a*c+b*c)"));
  auto weights = std::vector<Scalar>{};
  for (const auto& t : spanning_trees(th.graph)) weights.push_back(tree_weight(th.graph, th.lengths, t));
  CHECK(weights == std::vector<Scalar>{S("b*c"), S("a*c"), S("a*b")});

  auto p = unit_potential(th.graph, th.lengths, "y", "z");
  CHECK(to_string(p.values.at("y")) == "a*b*c/(a*b+a*c+b*c)");
  CHECK(p.values.at("z").is_zero());
  CHECK(p.currents.at("e1") == S("b*c/(a*b+a*c+b*c)"));
  CHECK(p.currents.at("e2") == S("a*c/(a*b+a*c+b*c)"));
  CHECK(p.currents.at("e1").homogeneous_degree() == 0);
  CHECK(p.values.at("y").homogeneous_degree() == 1);
}

TEST_CASE("degenerate and small cases") {
  MultiGraph k2({"p", "q"}, {{"e", "p", "q"}});
  LengthAssignment la(k2, {{"e", S("a")}});
  CHECK(voltage_drop(k2, la, "p", "q") == S("a"));
  CHECK(current(k2, la, "p", "q", "e") == Scalar(1));
  CHECK(current(k2, la, "q", "p", "e") == Scalar(-1));

  MultiGraph par({"p", "q"}, {{"e", "p", "q"}, {"f", "p", "q"}});
  LengthAssignment lb(par, {{"e", S("b")}, {"f", S("c")}});
  CHECK(voltage_drop(par, lb, "p", "q") == S("b*c/(b+c)"));
  CHECK(unit_potential(par, lb, "p", "q").values.at("p") == S("b*c/(b+c)"));

  auto path = catalog::path(3);
  auto pu = unit_potential(path, LengthAssignment::unit(path), "0", "2");
  CHECK(pu.values.at("0") == Scalar(2));
  CHECK(pu.values.at("1") == Scalar(1));
  CHECK(pu.values.at("2") == Scalar(0));

  auto th = catalog::theta();
  auto same = unit_potential(th.graph, th.lengths, "y", "y");
  for (const auto& [v, x] : same.values) CHECK(x.is_zero());
  try {
    voltage_drop(th.graph, th.lengths, "y", "y");
    FAIL("expected SameVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SameVertex);
  }
  CHECK_THROWS_AS(tree_weight(th.graph, th.lengths, {{"e1", "e2"}}), Error);
  CHECK(tree_weight(path, LengthAssignment::unit(path), {{"e1", "e2"}}) == Scalar(1));
  auto w = catalog::wheatstone();
  CHECK(tree_weight(w, LengthAssignment::symbolic(w), {{"a", "b", "d"}}) == S("c*e"));

  auto bq = catalog::dumbbell();
  CHECK(current(bq, LengthAssignment::symbolic(bq), "0", "1", "e1").is_zero());
  CHECK(current(bq, LengthAssignment::symbolic(bq), "0", "1", "e2") == Scalar(1));
}

TEST_CASE("interior endpoints") {
  auto th = catalog::theta();
  auto p = unit_potential(th.graph, th.lengths, PointOnGraph::interior("e1", frac(1, 2)), PointOnGraph::vertex("z"));
  CHECK(p.source == "e1@1/2");
  CHECK(p.graph.num_edges() == 4);
  // antisymmetry and conservation on the refined model
  auto back = currents(p.graph, p.lengths, p.sink, p.source);
  for (const auto& [e, c] : p.currents) CHECK(back.at(e) == -c);
}

TEST_CASE("tree sums agree with the Laplacian solve") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 5, 7, true, true});
    LengthAssignment l = (i % 3 == 0) ? LengthAssignment::symbolic(g) : catalog::random_lengths(g, rng);
    const VertexId& y = g.vertices().front();
    const VertexId& z = g.vertices().back();
    auto p = unit_potential(g, l, y, z);
    auto c = currents(g, l, y, z);
    for (const auto& e : g.edges()) CHECK(p.currents.at(e.id) == c.at(e.id));
    if (y != z) CHECK(voltage_drop(g, l, y, z) == p.values.at(y));
    // conservation
    Matrix<Scalar> lap = weighted_laplacian(g, l);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      Scalar net(0);
      for (std::size_t u = 0; u < g.num_vertices(); ++u) net += lap[v][u] * p.values.at(g.vertices()[u]);
      Scalar expect = g.vertices()[v] == y ? Scalar(1) : g.vertices()[v] == z ? Scalar(-1) : Scalar(0);
      if (y == z) expect = Scalar(0);
      CHECK(net == expect);
    }
  }
}
