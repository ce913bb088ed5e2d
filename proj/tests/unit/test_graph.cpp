#include <random>

#include "doctest.h"
#include "tropjac/catalog.hpp"
#include "tropjac/error.hpp"
#include "tropjac/graph.hpp"

using namespace tropjac;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
}  // namespace

TEST_CASE("genus and valence") {
  CHECK(genus(catalog::theta().graph) == 2);
  CHECK(genus(catalog::wheatstone()) == 2);
  CHECK(genus(catalog::path(5)) == 0);
  CHECK(valence(catalog::bouquet(1), "0") == 2);
  CHECK(valence(catalog::ice_cream_cone(), "w") == 2);
  CHECK(valence(catalog::wheatstone(), "T") == 2);
  MultiGraph two({"x", "y"}, {});
  CHECK(code_of([&] { genus(two); }) == ErrorCode::DisconnectedGraph);
  CHECK(code_of([&] { valence(two, "q"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("graph validation") {
  CHECK(code_of([] { MultiGraph({"a", "a"}, {}); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { MultiGraph({"a"}, {{"e", "a", "b"}}); }) == ErrorCode::ValidationError);
  MultiGraph g({"a", "b"}, {{"e", "a", "b"}});
  CHECK(code_of([&] { LengthAssignment(g, {{"e", Scalar(0)}}); }) == ErrorCode::ValidationError);
  CHECK(code_of([&] { LengthAssignment(g, {}); }) == ErrorCode::ValidationError);
}

TEST_CASE("subdivision") {
  MultiGraph g({"p", "q"}, {{"e", "p", "q"}});
  auto s = subdivide(g, LengthAssignment::unit(g), "e", frac(1, 2));
  CHECK(s.new_vertex == "e@1/2");
  CHECK(s.lengths["e#1"] == Scalar(frac(1, 2)));
  CHECK(s.lengths["e#2"] == Scalar(frac(1, 2)));
  CHECK(s.graph.edge("e#1").tail == "p");
  CHECK(s.graph.edge("e#2").head == "q");

  auto th = catalog::theta();
  auto s2 = subdivide(th.graph, th.lengths, "e1", frac(1, 3));
  CHECK(s2.lengths["e1#1"] == parse_scalar("a/3"));
  CHECK(s2.lengths["e1#2"] == parse_scalar("2*a/3"));
  CHECK(genus(s2.graph) == 2);
  CHECK(is_biconnected(s2.graph));
  CHECK(code_of([&] { subdivide(g, LengthAssignment::unit(g), "e", Rational(1)); }) ==
        ErrorCode::OutOfRangePosition);
  CHECK(code_of([&] { subdivide(g, LengthAssignment::unit(g), "f", frac(1, 2)); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("components, bridges, biconnectivity") {
  auto w = catalog::wheatstone();
  CHECK(h0(delete_edges(w, {"d", "e"})) == 2);
  CHECK(bridges(catalog::theta().graph).empty());
  CHECK(is_biconnected(catalog::theta().graph));
  CHECK(bridges(catalog::path(4)).size() == 3);
  CHECK_FALSE(is_biconnected(catalog::path(2)));
  CHECK(is_biconnected(catalog::bouquet(1)));
  CHECK_FALSE(is_biconnected(catalog::bouquet(2)));
  CHECK_FALSE(is_biconnected(catalog::dumbbell()));
  CHECK(bridges(catalog::dumbbell()) == std::vector<EdgeId>{"e2"});
  CHECK(is_biconnected(catalog::wheatstone()));
  CHECK(is_biconnected(catalog::petersen()));
  MultiGraph bowtie = MultiGraph({"a", "b", "c", "d", "e"},
                                 {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}, {"4", "c", "d"}, {"5", "d", "e"}, {"6", "e", "c"}});
  CHECK(bridges(bowtie).empty());
  CHECK_FALSE(is_biconnected(bowtie));
  CHECK(code_of([&] { delete_edges(w, {"zz"}); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("deleting a bridge adds one component") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    MultiGraph g = catalog::random_graph(rng);
    auto br = bridges(g);
    for (const auto& e : g.edges()) {
      bool is_bridge = std::find(br.begin(), br.end(), e.id) != br.end();
      CHECK(h0(delete_edges(g, {e.id})) == h0(g) + (is_bridge ? 1 : 0));
    }
  }
}

TEST_CASE("stabilization") {
  // triangle with a pendant path
  MultiGraph g({"a", "b", "c", "p", "q"},
               {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}, {"4", "a", "p"}, {"5", "p", "q"}});
  auto s = stabilize(g, LengthAssignment::unit(g));
  CHECK(s.graph.vertices() == std::vector<VertexId>{"a", "b", "c"});
  CHECK(s.graph.num_edges() == 3);
  auto w = catalog::wheatstone();
  CHECK(stabilize(w, LengthAssignment::unit(w)).graph == w);
  CHECK(code_of([] { auto p = catalog::path(3); stabilize(p, LengthAssignment::unit(p)); }) == ErrorCode::GenusZero);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    MultiGraph r = catalog::random_graph(rng, {2, 7, 9, true, true});
    if (genus(r) == 0) continue;
    auto st = stabilize(r, LengthAssignment::unit(r));
    CHECK(genus(st.graph) == genus(r));
    for (const auto& v : st.graph.vertices()) CHECK(valence(st.graph, v) >= 2);
  }
}

TEST_CASE("stable model") {
  auto th = catalog::theta();
  Refinement r = refine(th.graph, th.lengths,
                        {PointOnGraph::interior("e1", frac(1, 3)), PointOnGraph::interior("e1", frac(1, 2)),
                         PointOnGraph::interior("e3", frac(1, 4))});
  CHECK(r.model.graph.num_edges() == 6);
  auto st = stable_model(r.model.graph, r.model.lengths);
  CHECK(st.graph == th.graph);
  CHECK(st.lengths == th.lengths);
  auto w = catalog::wheatstone();
  auto sw = stable_model(w, LengthAssignment::unit(w));
  CHECK(sw.graph.num_vertices() == 2);
  CHECK(sw.graph.num_edges() == 3);
  CHECK(sw.lengths["c"] == Scalar(1));
  CHECK(sw.lengths["a+b"] == Scalar(2));
  CHECK(code_of([] { auto c = catalog::cycle(4); stable_model(c, LengthAssignment::unit(c)); }) ==
        ErrorCode::GenusTooSmall);
  auto p = catalog::petersen();
  CHECK(stable_model(p, LengthAssignment::unit(p)).graph == p);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 7, 11, true, true});
    if (genus(g) < 2) continue;
    auto m = stable_model(g, LengthAssignment::unit(g));
    std::size_t gg = genus(g);
    CHECK(genus(m.graph) == gg);
    CHECK(m.graph.num_edges() <= 3 * gg - 3);
    for (const auto& v : m.graph.vertices()) CHECK(valence(m.graph, v) >= 3);
  }
}

TEST_CASE("points") {
  auto th = catalog::theta();
  CHECK(to_string(parse_point(th.graph, "e2@2/6")) == "e2@1/3");
  CHECK(parse_point(th.graph, "y").is_vertex());
  CHECK(code_of([&] { parse_point(th.graph, "q"); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([&] { parse_point(th.graph, "e2@3/2"); }) == ErrorCode::OutOfRangePosition);
  CHECK(LengthAssignment::symbolic(catalog::wheatstone())["a"] == Scalar::symbol("a"));
}
