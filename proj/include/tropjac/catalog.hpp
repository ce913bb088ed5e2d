#pragma once

// Named test graphs and a seeded random multigraph generator.

#include <cstdint>
#include <random>

#include "tropjac/graph.hpp"

namespace tropjac::catalog {

/// Vertices y, z; edges e1, e2, e3 all oriented y -> z with lengths a, b, c.
MetricGraph theta();
/// Vertices u, v, w; edges u-w, w-v and a doubled u-v.
MultiGraph ice_cream_cone();
/// Vertices L, T, R, B; edges a = LT, b = TR, c = LR, d = LB, e = BR.
MultiGraph wheatstone();
/// Hexagon A..F with spokes from a center O to B, D, F.
MultiGraph hexagon_spokes();
/// Two hexagons with their long diagonals, joined by C-A' and D-F'.
MultiGraph double_wheel();

MultiGraph path(std::size_t vertices);
MultiGraph cycle(std::size_t edges);
/// One vertex with `loops` loops.
MultiGraph bouquet(std::size_t loops);
MultiGraph complete(std::size_t n);
MultiGraph complete_bipartite(std::size_t m, std::size_t n);
MultiGraph prism();
MultiGraph cube();
MultiGraph wagner();
MultiGraph petersen();
/// Two loops joined by a bridge.
MultiGraph dumbbell();

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  bool loops = true;
  bool parallel = true;
};

/// Connected multigraph: a random spanning tree plus random extra edges.
/// Vertices "v1".., edges "e1".. with random orientations.
MultiGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});
/// Lengths p/q with 1 <= p <= 9 and 1 <= q <= 4.
LengthAssignment random_lengths(const MultiGraph& g, std::mt19937_64& rng);

}  // namespace tropjac::catalog
