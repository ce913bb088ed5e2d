#include "tropjac/catalog.hpp"

#include <algorithm>

namespace tropjac::catalog {

namespace {

// Edges named by concatenating their endpoint names.
MultiGraph from_pairs(std::vector<VertexId> vs, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> es;
  for (const auto& [t, h] : pairs) es.push_back({t + h, t, h});
  return MultiGraph(std::move(vs), std::move(es));
}

// Vertices "0".."n-1", edges "e1"...
MultiGraph numbered(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({"e" + std::to_string(i + 1), vs[pairs[i].first], vs[pairs[i].second]});
  return MultiGraph(std::move(vs), std::move(es));
}

}  // namespace

MetricGraph theta() {
  MultiGraph g({"y", "z"}, {{"e1", "y", "z"}, {"e2", "y", "z"}, {"e3", "y", "z"}});
  LengthAssignment l(g, {{"e1", Scalar::symbol("a")}, {"e2", Scalar::symbol("b")}, {"e3", Scalar::symbol("c")}});
  return {g, l};
}

MultiGraph ice_cream_cone() {
  return MultiGraph({"u", "v", "w"}, {{"uw", "u", "w"}, {"wv", "w", "v"}, {"vu", "v", "u"}, {"uv", "u", "v"}});
}

MultiGraph wheatstone() {
  return MultiGraph({"L", "T", "R", "B"},
                    {{"a", "L", "T"}, {"b", "T", "R"}, {"c", "L", "R"}, {"d", "L", "B"}, {"e", "B", "R"}});
}

MultiGraph hexagon_spokes() {
  return from_pairs({"A", "B", "C", "D", "E", "F", "O"},
                    {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "E"}, {"E", "F"}, {"F", "A"},
                     {"O", "B"}, {"O", "D"}, {"O", "F"}});
}

MultiGraph double_wheel() {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const std::string suffix : {"", "'"}) {
    std::vector<VertexId> h;
    for (char c : std::string("ABCDEF")) h.push_back(std::string(1, c) + suffix);
    vs.insert(vs.end(), h.begin(), h.end());
    for (std::size_t i = 0; i < 6; ++i) pairs.emplace_back(h[i], h[(i + 1) % 6]);
    pairs.emplace_back(h[0], h[3]);
    pairs.emplace_back(h[2], h[5]);
    pairs.emplace_back(h[1], h[4]);
  }
  pairs.emplace_back("C", "A'");
  pairs.emplace_back("D", "F'");
  return from_pairs(std::move(vs), pairs);
}

MultiGraph path(std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i + 1 < vertices; ++i) p.emplace_back(i, i + 1);
  return numbered(vertices, p);
}

MultiGraph cycle(std::size_t edges) {
  if (edges == 1) return bouquet(1);
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < edges; ++i) p.emplace_back(i, (i + 1) % edges);
  return numbered(edges, p);
}

MultiGraph bouquet(std::size_t loops) {
  return numbered(1, std::vector<std::pair<std::size_t, std::size_t>>(loops, {0, 0}));
}

MultiGraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return numbered(n, p);
}

MultiGraph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) p.emplace_back(i, m + j);
  return numbered(m + n, p);
}

MultiGraph prism() {
  return numbered(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph cube() {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t bit = 1; bit < 8; bit <<= 1)
      if (!(i & bit)) p.emplace_back(i, i | bit);
  return numbered(8, p);
}

MultiGraph wagner() {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < 8; ++i) p.emplace_back(i, (i + 1) % 8);
  for (std::size_t i = 0; i < 4; ++i) p.emplace_back(i, i + 4);
  return numbered(8, p);
}

MultiGraph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < 5; ++i) p.emplace_back(i, (i + 1) % 5);
  for (std::size_t i = 0; i < 5; ++i) p.emplace_back(i, i + 5);
  for (std::size_t i = 0; i < 5; ++i) p.emplace_back(5 + i, 5 + (i + 2) % 5);
  return numbered(10, p);
}

MultiGraph dumbbell() { return numbered(2, {{0, 0}, {0, 1}, {1, 1}}); }

MultiGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  std::uniform_int_distribution<std::size_t> nv(opts.min_vertices, opts.max_vertices);
  std::size_t n = nv(rng);
  std::size_t tree_edges = n - 1;
  std::size_t max_edges = std::max(opts.max_edges, tree_edges);
  std::uniform_int_distribution<std::size_t> ne(tree_edges, max_edges);
  std::size_t m = ne(rng);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto has_pair = [&](std::size_t a, std::size_t b) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
  };
  auto oriented = [&](std::size_t a, std::size_t b) {
    return (rng() & 1) ? std::pair{a, b} : std::pair{b, a};
  };
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    pairs.push_back(oriented(parent(rng), v));
  }
  std::uniform_int_distribution<std::size_t> any(0, n - 1);
  for (std::size_t attempts = 0; pairs.size() < m && attempts < 1000; ++attempts) {
    std::size_t a = any(rng), b = any(rng);
    if (a == b && !opts.loops) continue;
    if (!opts.parallel && has_pair(a, b)) continue;
    pairs.push_back(oriented(a, b));
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({"e" + std::to_string(i + 1), vs[pairs[i].first], vs[pairs[i].second]});
  return MultiGraph(std::move(vs), std::move(es));
}

LengthAssignment random_lengths(const MultiGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> p(1, 9), q(1, 4);
  std::map<EdgeId, Scalar> m;
  for (const auto& e : g.edges()) m.emplace(e.id, Scalar(frac(p(rng), q(rng))));
  return LengthAssignment(g, std::move(m));
}

}  // namespace tropjac::catalog
