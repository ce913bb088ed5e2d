#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "tropjac/catalog.hpp"
#include "tropjac/error.hpp"
#include "tropjac/linalg.hpp"
#include "tropjac/matroid.hpp"

using namespace tropjac;

namespace {

std::string joined(const EdgeSet& s) {
  std::string out;
  for (const auto& e : s) out += e;
  return out;
}

std::set<std::string> joined_sets(const std::vector<EdgeSet>& sets) {
  std::set<std::string> out;
  for (const auto& s : sets) out.insert(joined(s));
  return out;
}

MultiGraph without(const MultiGraph& g, const EdgeId& e) { return delete_edges(g, {e}); }

}  // namespace

TEST_CASE("wheatstone enumerations") {
  auto w = catalog::wheatstone();
  std::vector<EdgeSet> trees;
  for (const auto& t : spanning_trees(w)) trees.push_back(t.edges);
  CHECK(joined_sets(trees) == std::set<std::string>{"abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde"});
  CHECK(trees.size() == 8);

  std::vector<EdgeSet> cycles;
  for (const auto& c : graphic_cycles(w)) cycles.push_back(c.edge_set(w));
  CHECK(joined_sets(cycles) == std::set<std::string>{"abc", "abde", "cde"});
  CHECK(cycles.size() == 3);

  CHECK(joined_sets(cographic_independent_sets(w, 2)) ==
        std::set<std::string>{"ac", "ad", "ae", "bc", "bd", "be", "cd", "ce"});
  CHECK(joined_sets(bonds(w)) == std::set<std::string>{"ab", "acd", "ace", "bcd", "bce", "de"});
  CHECK(girth(w) == Extended(3));
  CHECK(independent_girth(w) == Extended(2));
  CHECK(cographic_rank(w, {"a", "b", "c"}) == 2);
  CHECK(cographic_rank(w, {}) == 0);
}

TEST_CASE("theta and small graphs") {
  auto th = catalog::theta().graph;
  CHECK(spanning_trees(th).size() == 3);
  CHECK(spanning_trees(th)[0].edges == EdgeSet{"e1"});
  auto cyc = graphic_cycles(th);
  CHECK(cyc.size() == 3);
  for (const auto& c : cyc) CHECK(c.edges.size() == 2);
  CHECK(bonds(th) == std::vector<EdgeSet>{{"e1", "e2", "e3"}});
  CHECK(cographic_independent_sets(th, 1).size() == 3);
  CHECK(cographic_independent_sets(th, 0) == std::vector<EdgeSet>{{}});
  CHECK(spanning_trees(catalog::ice_cream_cone()).size() == 5);
  CHECK(graphic_cycles(catalog::path(5)).empty());
  CHECK(girth(catalog::path(5)).is_infinite());
  CHECK(independent_girth(catalog::path(5)).is_infinite());
  CHECK(girth(catalog::bouquet(2)) == Extended(1));
  CHECK(independent_girth(catalog::dumbbell()) == Extended(1));
  CHECK(bonds(catalog::path(2)) == std::vector<EdgeSet>{{"e1"}});
  auto p = catalog::path(4);
  CHECK(cographic_rank(p, {"e1", "e2", "e3"}) == 0);
  CHECK(Extended(3) < Extended::infinity());
  CHECK(to_string(Extended::infinity()) == "inf");
}

TEST_CASE("figure graphs") {
  auto hex = catalog::hexagon_spokes();
  std::multiset<std::size_t> sizes;
  for (const auto& c : graphic_cycles(hex)) {
    sizes.insert(c.edges.size());
    CHECK(cographic_rank(hex, c.edges) == 3);
  }
  CHECK(sizes == std::multiset<std::size_t>{4, 4, 4, 6, 6, 6, 6});
  CHECK(girth(hex) == Extended(4));
  CHECK(independent_girth(hex) == Extended(3));
  CHECK(independent_girth(without(hex, "OF")) == Extended(2));

  auto dw = catalog::double_wheel();
  CHECK(dw.num_vertices() == 12);
  CHECK(dw.num_edges() == 20);
  CHECK(genus(dw) == 9);
  CHECK(girth(dw) == Extended(4));
  CHECK(independent_girth(dw) == Extended(3));
  CHECK(independent_girth(without(dw, "CA'")) == Extended(4));
  CHECK(girth(without(dw, "CA'")) == Extended(4));
}

TEST_CASE("cycle limit") {
  try {
    graphic_cycles(catalog::complete(6), 10);
    FAIL("expected the cap to trigger");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CycleLimitExceeded);
  }
}

TEST_CASE("cycles from edge sets") {
  auto w = catalog::wheatstone();
  auto c = cycle_from_edges(w, {"e", "d", "a", "b"});
  CHECK(c.edges.size() == 4);
  CHECK(c.edge_set(w) == EdgeSet{"a", "b", "d", "e"});
  CHECK_THROWS_AS(cycle_from_edges(w, {"a", "b"}), Error);
  CHECK_THROWS_AS(cycle_from_edges(catalog::bouquet(2), {"e1", "e2"}), Error);
  CHECK(cycle_from_edges(catalog::bouquet(2), {"e2"}).vertices == std::vector<VertexId>{"0"});
}

TEST_CASE("cycle basis realizes the cographic matroid") {
  auto th = catalog::theta().graph;
  auto m = cycle_basis_matrix(th);
  CHECK(m.rows.size() == 2);
  CHECK(m.row_edges == std::vector<EdgeId>{"e2", "e3"});
  // e2 traversed z -> y, then e1 back y -> z
  CHECK(m.rows[0] == std::vector<int>{-1, 1, 0});
  for (const auto& pair : std::vector<EdgeSet>{{"e1", "e2"}, {"e1", "e3"}, {"e2", "e3"}})
    CHECK(m.column_rank(th, pair) == 2);
  auto w = catalog::wheatstone();
  CHECK(cycle_basis_matrix(w).column_rank(w, {"a", "b"}) == cographic_rank(w, {"a", "b"}));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 6, 9, true, true});
    auto cb = cycle_basis_matrix(g);
    CHECK(cb.rows.size() == genus(g));
    for (const auto& b : bridges(g)) CHECK(cb.column_rank(g, {b}) == 0);
    std::size_t m = g.num_edges();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) > 4) continue;
      EdgeSet s;
      for (std::size_t e = 0; e < m; ++e)
        if (mask >> e & 1) s.push_back(g.edges()[e].id);
      CHECK(cb.column_rank(g, s) == cographic_rank(g, s));
    }
  }
}

TEST_CASE("enumeration invariants on random graphs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = catalog::random_graph(rng, {2, 6, 9, true, true});
    auto trees = spanning_trees(g);
    std::set<EdgeSet> unique;
    for (const auto& t : trees) {
      CHECK(is_spanning_tree(g, t.edges));
      unique.insert(t.edges);
    }
    CHECK(unique.size() == trees.size());
    // d = genus cells are complements of trees
    CHECK(cographic_independent_sets(g, genus(g)).size() == trees.size());
    CHECK(independent_girth(g) <= girth(g));
    if (genus(g) > 0) CHECK(independent_girth(g).value() <= genus(g));
    for (const auto& c : graphic_cycles(g)) CHECK_NOTHROW(cycle_from_edges(g, c.edges));
    // matrix-tree
    Matrix<BigInt> lap(g.num_vertices() - 1, std::vector<BigInt>(g.num_vertices() - 1, 0));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      std::size_t a = g.tail_index(e), b = g.head_index(e);
      if (a == b) continue;
      if (a > 0) lap[a - 1][a - 1] += 1;
      if (b > 0) lap[b - 1][b - 1] += 1;
      if (a > 0 && b > 0) {
        lap[a - 1][b - 1] -= 1;
        lap[b - 1][a - 1] -= 1;
      }
    }
    CHECK(determinant(lap) == BigInt(trees.size()));
  }
}
