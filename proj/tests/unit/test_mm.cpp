#include <random>

#include "doctest.h"
#include "tropjac/catalog.hpp"
#include "tropjac/error.hpp"
#include "tropjac/mm.hpp"

using namespace tropjac;

TEST_CASE("analyze") {
  auto w = catalog::wheatstone();
  auto r = analyze(w, LengthAssignment::unit(w));
  CHECK(r.genus == 2);
  CHECK(r.girth == Extended(3));
  CHECK(r.independent_girth == Extended(2));
  CHECK(r.mm_finite_degrees == std::vector<std::size_t>{1});
  CHECK(r.uniform_bounds.at(1) == 3);
  CHECK(r.edge_bound == BigInt(3));
  CHECK(r.stable_edge_count == 3u);
  CHECK(r.biconnected);

  auto th = catalog::theta();
  CHECK(analyze(th.graph, th.lengths).mm_finite_degrees == std::vector<std::size_t>{1});
  auto hex = catalog::hexagon_spokes();
  auto hr = analyze(hex, LengthAssignment::unit(hex));
  CHECK(hr.mm_finite_degrees == std::vector<std::size_t>{1, 2});
  CHECK(hr.uniform_bounds.at(2) == binomial(6, 2));
  auto db = catalog::dumbbell();
  auto dr = analyze(db, LengthAssignment::unit(db));
  CHECK(dr.mm_finite_degrees.empty());
  CHECK_FALSE(dr.biconnected);
  CHECK_THROWS_AS(analyze(catalog::path(3), LengthAssignment::unit(catalog::path(3))), Error);
}

TEST_CASE("packet witnesses") {
  auto th = catalog::theta();
  auto w = infinite_packet_witness(th.graph, th.lengths, {"e1", "e2"});
  CHECK(w.verified());
  CHECK(w.degree == 2);
  CHECK(w.d.degree() == 2);
  CHECK(w.slope_values == std::vector<Rational>{frac(-1, 2), 0, frac(1, 2)});

  auto ws = catalog::wheatstone();
  auto wl = LengthAssignment::symbolic(ws);
  auto tri = infinite_packet_witness(ws, wl, {"a", "b", "c"});
  CHECK(tri.verified());
  CHECK(tri.degree == 2);
  CHECK(tri.d.degree() == 3);

  auto loop = catalog::dumbbell();
  auto lw = infinite_packet_witness(loop, LengthAssignment::symbolic(loop), {"e1"});
  CHECK(lw.verified());
  CHECK(lw.degree == 1);

  CHECK_THROWS_AS(infinite_packet_witness(ws, wl, {"a", "b"}), Error);
}

TEST_CASE("cells") {
  auto w = catalog::wheatstone();
  auto cells = eff_cells(w, 2);
  CHECK(cells.size() == 8);
  for (const auto& c : cells) CHECK(c.dimension == 2);
  CHECK(eff_cells(w, 0).size() == 1);
  CHECK_THROWS_AS(eff_cells(w, 3), Error);
}

TEST_CASE("girth bound") {
  auto w = catalog::wheatstone();
  CHECK_THROWS_AS(check_girth_log_bound(w), Error);
  auto k4 = catalog::complete(4);
  auto r = check_girth_log_bound(k4);
  CHECK(r.holds);
  CHECK(r.girth == 3);
  CHECK(r.slack == Rational(9 - 2));
  auto p = check_girth_log_bound(catalog::petersen());
  CHECK(p.girth == 5);
  CHECK(p.genus == 6);
  CHECK(p.slack == Rational(36 - 8));
  auto th = check_girth_log_bound(catalog::theta().graph);
  CHECK(th.girth == 2);
  CHECK(th.holds);
}

TEST_CASE("rational length demonstration") {
  auto th = catalog::theta().graph;
  for (std::size_t k = 1; k <= 4; ++k) {
    auto r = rational_length_failure_demo(th, LengthAssignment::unit(th), k);
    CHECK(r.vertices == 2 + 3 * (k - 1));
    CHECK(r.expected_packet_size == r.vertices);
    CHECK(r.all_torsion);
  }
  auto c = catalog::bouquet(1);
  auto r = rational_length_failure_demo(c, LengthAssignment::unit(c), 3);
  CHECK(r.vertices == 3);
  CHECK(r.critical_group == std::vector<BigInt>{3});
  CHECK(r.orders.at("e1@1/3") == 3);

  std::map<EdgeId, Scalar> l{{"e1", Scalar(frac(1, 2))}, {"e2", Scalar(1)}, {"e3", Scalar(frac(3, 2))}};
  MultiGraph g({"y", "z"}, {{"e1", "y", "z"}, {"e2", "y", "z"}, {"e3", "y", "z"}});
  auto rs = rational_length_failure_demo(g, LengthAssignment(g, l), 2);
  CHECK(rs.scale == 2);
  CHECK(rs.unit_edges == 6);
  CHECK(rs.unit_vertices == 5);
  CHECK(rs.vertices == 5 + 6);
  auto t = catalog::theta();
  CHECK_THROWS_AS(rational_length_failure_demo(t.graph, t.lengths, 2), Error);
}
