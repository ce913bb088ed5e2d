#include <random>

#include "doctest.h"
#include "tropjac/catalog.hpp"
#include "tropjac/divisor.hpp"
#include "tropjac/error.hpp"
#include "tropjac/kirchhoff.hpp"
#include "tropjac/laplacian.hpp"

using namespace tropjac;

namespace {
Scalar S(const char* t) { return parse_scalar(t); }
PointOnGraph V(const char* v) { return PointOnGraph::vertex(v); }
Divisor point(const PointOnGraph& p, long long c = 1) {
  Divisor d;
  d.add(p, c);
  return d;
}
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
}  // namespace

TEST_CASE("divisor literals") {
  auto th = catalog::theta().graph;
  Divisor d = parse_divisor(th, "2*(y) + 1*(e3@1/2) - 3*(z)");
  CHECK(d.degree() == 0);
  CHECK(d.coefficient(V("y")) == 2);
  CHECK(d.coefficient(PointOnGraph::interior("e3", frac(1, 2))) == 1);
  CHECK(to_string(d) == "2*(y) - 3*(z) + 1*(e3@1/2)");
  CHECK(parse_divisor(th, to_string(d)) == d);
  CHECK(parse_divisor(th, "(y) - (y)").is_zero());
  CHECK(parse_divisor(th, "0").is_zero());
  CHECK(to_string(Divisor()) == "0");
  CHECK(parse_divisor(th, "-(z)").coefficient(V("z")) == -1);
  CHECK(code_of([&] { parse_divisor(th, "2*y"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_divisor(th, "(y) (z)"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_divisor(th, "(q)"); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([&] { parse_divisor(th, "(e4@1/2)"); }) == ErrorCode::UnknownEdge);
  CHECK(code_of([&] { parse_divisor(th, "(e1@2)"); }) == ErrorCode::OutOfRangePosition);
}

TEST_CASE("laplacians and critical groups") {
  auto cone = catalog::ice_cream_cone();
  auto l = laplacian_matrix(cone);
  Matrix<BigInt> expect{{3, -2, -1}, {-2, 3, -1}, {-1, -1, 2}};
  CHECK(l == expect);
  CHECK(critical_group(cone) == std::vector<BigInt>{5});
  CHECK(laplacian_matrix(catalog::path(2)) == Matrix<BigInt>{{1, -1}, {-1, 1}});
  CHECK(critical_group(catalog::path(5)).empty());
  auto wf = critical_group(catalog::wheatstone());
  BigInt prod = 1;
  for (const auto& f : wf) prod *= f;
  CHECK(prod == 8);
  CHECK(critical_group(catalog::complete(4)) == std::vector<BigInt>{4, 4});
  CHECK(critical_group(catalog::bouquet(3)).empty());
  auto wl = weighted_laplacian(cone, LengthAssignment::symbolic(cone));
  for (const auto& row : wl) {
    Scalar sum(0);
    for (const auto& x : row) sum += x;
    CHECK(sum.is_zero());
  }

  std::mt19937_64 rng(41);
  for (int i = 0; i < 80; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 6, 9, true, true});
    auto cert = critical_group_certificate(g);
    CHECK(multiply(multiply(cert.smith.U, cert.reduced), cert.smith.V) == cert.smith.D);
    CHECK(abs(determinant(cert.smith.U)) == 1);
    CHECK(abs(determinant(cert.smith.V)) == 1);
    BigInt p = 1;
    for (const auto& f : cert.factors) p *= f;
    CHECK(p == BigInt(spanning_trees(g).size()));
    for (std::size_t k = 1; k < cert.factors.size(); ++k) CHECK(cert.factors[k] % cert.factors[k - 1] == 0);
  }
}

TEST_CASE("functions and their divisors") {
  auto th = catalog::theta();
  PLFunction f = solve_for_function(th.graph, th.lengths, point(V("y")), point(V("z")));
  auto p = unit_potential(th.graph, th.lengths, "y", "z");
  CHECK(f.values == p.values);
  CHECK(laplacian_divisor(f) == to_scalar_divisor(point(V("y")) - point(V("z"))));
  PLFunction c = solve_for_function(th.graph, th.lengths, point(V("y"), 2), point(V("y"), 2));
  CHECK(laplacian_divisor(c).empty());
  CHECK(code_of([&] { solve_for_function(th.graph, th.lengths, point(V("y"), 2), point(V("z"))); }) ==
        ErrorCode::DegreeMismatch);

  // interior support
  Divisor d = parse_divisor(th.graph, "(e1@1/3) + (e2@1/2)");
  Divisor e = parse_divisor(th.graph, "(y) + (e3@3/4)");
  PLFunction g = solve_for_function(th.graph, th.lengths, d, e);
  CHECK(laplacian_divisor(g) == to_scalar_divisor(d - e));
  CHECK(g.value(V("y")).is_zero());
  Scalar mid = g.value(PointOnGraph::interior("e1", frac(1, 6)));
  CHECK(mid == (g.value(V("y")) + g.value(PointOnGraph::interior("e1", frac(1, 3)))) / Scalar(2));
}

TEST_CASE("torsion classification") {
  auto th = catalog::theta();
  auto v = classify_torsion(th.graph, th.lengths, point(V("y")), point(V("z")));
  CHECK(v.classification == TorsionClass::NonTorsionForVeryGeneral);
  REQUIRE(v.witness);
  CHECK(v.witness->second == S("b*c/(a*b+a*c+b*c)"));
  CHECK(v.witness->first == "e1");

  auto same = classify_torsion(th.graph, th.lengths, point(V("y")), point(V("y")));
  CHECK(same.classification == TorsionClass::IdenticallyPrincipal);

  // +-1/2 cycle witness on the e1, e2 cycle
  Divisor d = point(V("y")) + point(V("z"));
  Divisor e = parse_divisor(th.graph, "(e1@1/2) + (e2@1/2)");
  auto t = classify_torsion(th.graph, th.lengths, d, e);
  CHECK(t.classification == TorsionClass::TorsionAtAllLengths);
  CHECK(t.order == BigInt(2));
  CHECK(t.slope_values == std::vector<Rational>{frac(-1, 2), 0, frac(1, 2)});

  // rational lengths never give the very-general verdict
  auto unit = LengthAssignment::unit(th.graph);
  auto r = classify_torsion(th.graph, unit, point(V("y")), point(V("z")));
  CHECK(r.classification == TorsionClass::TorsionAtGivenLengths);
  CHECK(r.order == BigInt(3));

  // tree: slopes 0/1 independent of lengths
  auto path = catalog::path(3);
  auto tp = classify_torsion(path, LengthAssignment::symbolic(path), point(V("0")), point(V("2")));
  CHECK(tp.classification == TorsionClass::IdenticallyPrincipal);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 5, 7, true, true});
    auto l = catalog::random_lengths(g, rng);
    auto x = classify_torsion(g, l, point(V("v1")), point(PointOnGraph::vertex(g.vertices().back())));
    CHECK(x.classification != TorsionClass::NonTorsionForVeryGeneral);
    auto y = classify_torsion(g, l, point(PointOnGraph::vertex(g.vertices().back())), point(V("v1")));
    CHECK(x.classification == y.classification);
    CHECK(x.order == y.order);
  }
}

TEST_CASE("vertex pairs") {
  auto path = catalog::path(4);
  CHECK(classify_vertex_pair(path, "0", "3").classification == VertexPairClass::SlopesZeroOne);
  auto th = catalog::theta().graph;
  auto v = classify_vertex_pair(th, "y", "z");
  CHECK(v.classification == VertexPairClass::GenericNonTorsion);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->second.is_constant());
  // two triangles joined by a bridge
  MultiGraph tb({"a", "b", "c", "d", "e", "f"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}, {"4", "c", "d"},
                                                 {"5", "d", "e"}, {"6", "e", "f"}, {"7", "f", "d"}});
  CHECK(classify_vertex_pair(tb, "c", "d").classification == VertexPairClass::SlopesZeroOne);
  CHECK(classify_vertex_pair(tb, "a", "d").classification == VertexPairClass::GenericNonTorsion);
  CHECK(code_of([&] { classify_vertex_pair(tb, "a", "q"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("active edges and lemmas") {
  auto th = catalog::theta();
  PLFunction f = solve_for_function(th.graph, th.lengths, point(V("y")), point(V("z")));
  auto a = active_edges(f);
  CHECK(a.current_active == EdgeSet{"e1", "e2", "e3"});
  CHECK(a.voltage_active == EdgeSet{"e1", "e2", "e3"});
  auto rep = check_active_lemmas(f);
  REQUIRE(rep.cut);
  CHECK(rep.cut_disconnects);
  REQUIRE(rep.cycle);

  auto zero = zero_function(th.graph, th.lengths);
  auto za = active_edges(zero);
  CHECK(za.current_active.empty());
  CHECK(za.voltage_active.empty());

  // +-1/2 function on the e1, e2 cycle
  Divisor d = point(V("y")) + point(V("z"));
  Divisor e = parse_divisor(th.graph, "(e1@1/2) + (e2@1/2)");
  PLFunction h = solve_for_function(th.graph, th.lengths, d, e);
  auto ha = active_edges(h);
  CHECK(ha.current_active == EdgeSet{"e1", "e2"});
  CHECK(ha.voltage_active.empty());
  auto hr = check_active_lemmas(h);
  REQUIRE(hr.cycle);
  CHECK(hr.cycle->edge_set(th.graph) == EdgeSet{"e1", "e2"});
  CHECK(code_of([&] { check_active_lemmas(h, {"e1", "e2"}); }) == ErrorCode::HypothesisViolated);

  // interior-supported D != E on designated edges
  Divisor di = parse_divisor(th.graph, "(e1@1/3) + (e2@1/2)");
  Divisor ei = parse_divisor(th.graph, "(e1@2/3) + (e2@1/2)");
  PLFunction k = solve_for_function(th.graph, th.lengths, di, ei);
  auto kr = check_active_lemmas(k, {"e1", "e2"});
  CHECK(kr.hypothesis_checked);
  CHECK(kr.divisor_nonzero);
  CHECK(kr.some_active);
  if (!kr.active.current_active.empty()) CHECK(kr.cycle.has_value());
  if (!kr.active.voltage_active.empty()) CHECK(kr.cut_disconnects);

  auto w = catalog::wheatstone();
  std::mt19937_64 wrng(3);
  auto wl = catalog::random_lengths(w, wrng);
  PLFunction wf = solve_for_function(w, wl, point(V("L")), point(V("B")));
  auto wr = check_active_lemmas(wf);
  REQUIRE(wr.cut);
  CHECK(wr.cut_disconnects);
  for (const auto& c : *wr.cut)
    CHECK(std::find(wr.active.voltage_active.begin(), wr.active.voltage_active.end(), c) !=
          wr.active.voltage_active.end());
}
