#include "tropjac/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tropjac/error.hpp"

namespace tropjac {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string fresh_id(std::string candidate, const std::unordered_set<std::string>& taken) {
  while (taken.contains(candidate)) candidate += '\'';
  return candidate;
}

std::string edge_base(const EdgeId& e) { return e.substr(0, e.find('#')); }

}  // namespace

// ---------------------------------------------------------------------------
// MultiGraph

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw Error(ErrorCode::ValidationError, "empty vertex id");
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw Error(ErrorCode::ValidationError, "duplicate vertex id '" + vertices_[i] + "'");
  }
  incident_.resize(vertices_.size());
  ends_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id.empty()) throw Error(ErrorCode::ValidationError, "empty edge id");
    if (!edge_index_.emplace(e.id, i).second)
      throw Error(ErrorCode::ValidationError, "duplicate edge id '" + e.id + "'");
    auto t = vertex_index_.find(e.tail);
    auto h = vertex_index_.find(e.head);
    if (t == vertex_index_.end() || h == vertex_index_.end())
      throw Error(ErrorCode::ValidationError, "edge '" + e.id + "' has an undeclared endpoint");
    ends_.emplace_back(t->second, h->second);
    incident_[t->second].push_back(i);
    if (h->second != t->second) incident_[h->second].push_back(i);
  }
}

std::size_t MultiGraph::vertex_index(const VertexId& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + v + "'");
  return it->second;
}

std::size_t MultiGraph::edge_index(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge '" + e + "'");
  return it->second;
}

// ---------------------------------------------------------------------------
// LengthAssignment

LengthAssignment::LengthAssignment(const MultiGraph& g, std::map<EdgeId, Scalar> lengths)
    : lengths_(std::move(lengths)) {
  for (const auto& e : g.edges()) {
    auto it = lengths_.find(e.id);
    if (it == lengths_.end())
      throw Error(ErrorCode::ValidationError, "no length for edge '" + e.id + "'");
    if (auto c = it->second.constant_value(); c && sgn(*c) <= 0)
      throw Error(ErrorCode::ValidationError, "length of edge '" + e.id + "' is not positive");
  }
  if (lengths_.size() != g.num_edges()) {
    for (const auto& [id, len] : lengths_)
      if (!g.has_edge(id)) throw Error(ErrorCode::UnknownEdge, "length given for unknown edge '" + id + "'");
  }
}

LengthAssignment LengthAssignment::unit(const MultiGraph& g) {
  std::map<EdgeId, Scalar> m;
  for (const auto& e : g.edges()) m.emplace(e.id, Scalar(1));
  return LengthAssignment(g, std::move(m));
}

LengthAssignment LengthAssignment::symbolic(const MultiGraph& g) {
  std::unordered_set<std::string> used;
  for (const auto& e : g.edges())
    if (is_valid_symbol_name(e.id)) used.insert(e.id);
  std::map<EdgeId, Scalar> m;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const EdgeId& id = g.edges()[i].id;
    std::string name = id;
    if (!is_valid_symbol_name(id)) {
      name = "l" + std::to_string(i + 1);
      while (used.contains(name)) name += "_";
      used.insert(name);
    }
    m.emplace(id, Scalar::symbol(name));
  }
  return LengthAssignment(g, std::move(m));
}

const Scalar& LengthAssignment::operator[](const EdgeId& e) const {
  auto it = lengths_.find(e);
  if (it == lengths_.end()) throw Error(ErrorCode::UnknownEdge, "no length for edge '" + e + "'");
  return it->second;
}

bool LengthAssignment::all_rational() const {
  return std::all_of(lengths_.begin(), lengths_.end(),
                     [](const auto& kv) { return kv.second.is_constant(); });
}

std::vector<Symbol> LengthAssignment::symbols() const {
  std::set<Symbol> out;
  for (const auto& [id, len] : lengths_)
    for (Symbol s : len.symbols()) out.insert(s);
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// PointOnGraph

PointOnGraph PointOnGraph::vertex(VertexId v) {
  PointOnGraph p;
  p.is_vertex_ = true;
  p.id_ = std::move(v);
  return p;
}

PointOnGraph PointOnGraph::interior(EdgeId e, Rational t) {
  if (sgn(t) <= 0 || t >= 1)
    throw Error(ErrorCode::OutOfRangePosition,
                "position " + t.get_str() + " on edge '" + e + "' is not strictly between 0 and 1");
  PointOnGraph p;
  p.is_vertex_ = false;
  p.id_ = std::move(e);
  p.t_ = std::move(t);
  return p;
}

bool operator<(const PointOnGraph& a, const PointOnGraph& b) {
  if (a.is_vertex_ != b.is_vertex_) return a.is_vertex_;
  if (a.id_ != b.id_) return a.id_ < b.id_;
  return a.t_ < b.t_;
}

std::string to_string(const PointOnGraph& p) {
  if (p.is_vertex()) return p.id();
  return p.id() + "@" + p.position().get_str();
}

PointOnGraph parse_point(const MultiGraph& g, const std::string& text) {
  if (g.has_vertex(text)) return PointOnGraph::vertex(text);
  auto at = text.rfind('@');
  if (at == std::string::npos) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + text + "'");
  std::string edge = text.substr(0, at);
  if (!g.has_edge(edge)) throw Error(ErrorCode::UnknownEdge, "unknown edge '" + edge + "'");
  return PointOnGraph::interior(edge, parse_rational(text.substr(at + 1)));
}

// ---------------------------------------------------------------------------
// connectivity

namespace detail {

std::vector<std::size_t> component_labels(const MultiGraph& g, const std::vector<char>& keep) {
  UnionFind uf(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (keep[e]) uf.unite(g.tail_index(e), g.head_index(e));
  std::vector<std::size_t> label(g.num_vertices());
  std::vector<std::size_t> remap(g.num_vertices(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::size_t r = uf.find(v);
    if (remap[r] == SIZE_MAX) remap[r] = next++;
    label[v] = remap[r];
  }
  return label;
}

std::size_t component_count(const MultiGraph& g, const std::vector<char>& keep) {
  UnionFind uf(g.num_vertices());
  std::size_t count = g.num_vertices();
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (keep[e] && uf.unite(g.tail_index(e), g.head_index(e))) --count;
  return count;
}

}  // namespace detail

std::size_t h0(const MultiGraph& g) {
  return detail::component_count(g, std::vector<char>(g.num_edges(), 1));
}

bool is_connected(const MultiGraph& g) { return g.num_vertices() > 0 && h0(g) == 1; }

std::size_t genus(const MultiGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  return g.num_edges() + 1 - g.num_vertices();
}

std::size_t valence(const MultiGraph& g, const VertexId& v) {
  std::size_t i = g.vertex_index(v);
  std::size_t val = 0;
  for (std::size_t e : g.incident(i)) val += g.tail_index(e) == g.head_index(e) ? 2 : 1;
  return val;
}

MultiGraph delete_edges(const MultiGraph& g, const std::vector<EdgeId>& removed) {
  std::vector<char> drop(g.num_edges(), 0);
  for (const auto& e : removed) drop[g.edge_index(e)] = 1;
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!drop[e]) kept.push_back(g.edges()[e]);
  return MultiGraph(g.vertices(), std::move(kept));
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  std::vector<char> keep(g.num_edges(), 1);
  std::size_t base = detail::component_count(g, keep);
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.tail_index(e) == g.head_index(e)) continue;
    keep[e] = 0;
    if (detail::component_count(g, keep) > base) out.push_back(g.edges()[e].id);
    keep[e] = 1;
  }
  return out;
}

bool is_biconnected(const MultiGraph& g) {
  if (!is_connected(g)) return false;
  std::size_t n = g.num_vertices();
  if (n == 1) return g.num_edges() <= 1;
  for (const auto& e : g.edges())
    if (e.is_loop()) return false;
  if (!bridges(g).empty()) return false;
  for (std::size_t cut = 0; cut < n; ++cut) {
    UnionFind uf(n);
    std::size_t count = n - 1;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      std::size_t a = g.tail_index(e), b = g.head_index(e);
      if (a == cut || b == cut) continue;
      if (uf.unite(a, b)) --count;
    }
    if (count > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// subdivision and refinement

Subdivision subdivide(const MultiGraph& g, const LengthAssignment& lengths, const EdgeId& e,
                      const Rational& t) {
  g.edge_index(e);
  Refinement r = refine(g, lengths, {PointOnGraph::interior(e, t)});
  VertexId v = r.vertex_of.at(PointOnGraph::interior(e, t));
  return {std::move(r.model.graph), std::move(r.model.lengths), std::move(v)};
}

Refinement refine(const MultiGraph& g, const LengthAssignment& lengths,
                  const std::vector<PointOnGraph>& points) {
  std::map<std::size_t, std::set<Rational>> cuts;
  for (const auto& p : points) {
    if (p.is_vertex())
      g.vertex_index(p.id());
    else
      cuts[g.edge_index(p.id())].insert(p.position());
  }

  std::unordered_set<std::string> vertex_ids(g.vertices().begin(), g.vertices().end());
  std::unordered_set<std::string> edge_ids;
  for (const auto& e : g.edges()) edge_ids.insert(e.id);

  Refinement r;
  std::vector<VertexId> vertices = g.vertices();
  std::vector<Edge> edges;
  std::map<EdgeId, Scalar> lens;
  for (const auto& v : g.vertices()) r.point_of.emplace(v, PointOnGraph::vertex(v));

  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    auto it = cuts.find(i);
    if (it == cuts.end()) {
      edges.push_back(e);
      lens.emplace(e.id, lengths[e.id]);
      r.segment_of.emplace(e.id, Refinement::Segment{e.id, Rational(0), Rational(1)});
      continue;
    }
    std::vector<Rational> ts(it->second.begin(), it->second.end());
    std::vector<VertexId> chain{e.tail};
    for (const auto& t : ts) {
      VertexId v = fresh_id(e.id + "@" + t.get_str(), vertex_ids);
      vertex_ids.insert(v);
      vertices.push_back(v);
      chain.push_back(v);
      PointOnGraph p = PointOnGraph::interior(e.id, t);
      r.vertex_of.emplace(p, v);
      r.point_of.emplace(v, p);
    }
    chain.push_back(e.head);
    ts.insert(ts.begin(), Rational(0));
    ts.push_back(Rational(1));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      EdgeId id = fresh_id(e.id + "#" + std::to_string(k + 1), edge_ids);
      edge_ids.insert(id);
      edges.push_back({id, chain[k], chain[k + 1]});
      Rational frac = ts[k + 1] - ts[k];
      lens.emplace(id, Scalar(frac) * lengths[e.id]);
      r.segment_of.emplace(id, Refinement::Segment{e.id, ts[k], ts[k + 1]});
    }
  }
  for (const auto& p : points)
    if (p.is_vertex()) r.vertex_of.emplace(p, p.id());

  r.model.graph = MultiGraph(std::move(vertices), std::move(edges));
  r.model.lengths = LengthAssignment(r.model.graph, std::move(lens));
  return r;
}

// ---------------------------------------------------------------------------
// stabilization

MetricGraph stabilize(const MultiGraph& g, const LengthAssignment& lengths) {
  if (genus(g) == 0) throw Error(ErrorCode::GenusZero, "a genus-zero graph stabilizes to a point");
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> val(n, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ++val[g.tail_index(e)];
    ++val[g.head_index(e)];
  }
  std::vector<char> vertex_alive(n, 1), edge_alive(g.num_edges(), 1);
  for (;;) {
    std::size_t leaf = n;
    for (std::size_t v = 0; v < n; ++v)
      if (vertex_alive[v] && val[v] == 1) {
        leaf = v;
        break;
      }
    if (leaf == n) break;
    vertex_alive[leaf] = 0;
    for (std::size_t e : g.incident(leaf)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      --val[g.tail_index(e)];
      --val[g.head_index(e)];
    }
  }
  std::vector<VertexId> vs;
  for (std::size_t v = 0; v < n; ++v)
    if (vertex_alive[v]) vs.push_back(g.vertices()[v]);
  std::vector<Edge> es;
  std::map<EdgeId, Scalar> lens;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (edge_alive[e]) {
      es.push_back(g.edges()[e]);
      lens.emplace(g.edges()[e].id, lengths[g.edges()[e].id]);
    }
  MetricGraph out;
  out.graph = MultiGraph(std::move(vs), std::move(es));
  out.lengths = LengthAssignment(out.graph, std::move(lens));
  return out;
}

MetricGraph stable_model(const MultiGraph& g, const LengthAssignment& lengths) {
  if (genus(g) < 2) throw Error(ErrorCode::GenusTooSmall, "stable models need genus at least 2");
  MetricGraph semi = stabilize(g, lengths);
  const MultiGraph& s = semi.graph;
  std::size_t n = s.num_vertices();
  std::vector<char> keep(n, 0);
  for (std::size_t v = 0; v < n; ++v) keep[v] = valence(s, s.vertices()[v]) >= 3;

  auto other_end = [&](std::size_t e, std::size_t v) {
    return s.tail_index(e) == v ? s.head_index(e) : s.tail_index(e);
  };
  // Walks from vertex v away from edge `from` through valence-2 vertices.
  auto walk = [&](std::size_t v, std::size_t from, std::vector<std::size_t>& path) {
    while (!keep[v]) {
      const auto& inc = s.incident(v);
      std::size_t next = inc[0] == from ? inc[1] : inc[0];
      path.push_back(next);
      v = other_end(next, v);
      from = next;
    }
    return v;
  };

  std::vector<char> used(s.num_edges(), 0);
  std::vector<VertexId> vs;
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v]) vs.push_back(s.vertices()[v]);
  std::unordered_set<std::string> taken;
  std::vector<Edge> es;
  std::map<EdgeId, Scalar> lens;
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    if (used[e]) continue;
    std::vector<std::size_t> back, fwd;
    std::size_t tail = walk(s.tail_index(e), e, back);
    std::size_t head = walk(s.head_index(e), e, fwd);
    std::vector<std::size_t> chain(back.rbegin(), back.rend());
    chain.push_back(e);
    chain.insert(chain.end(), fwd.begin(), fwd.end());

    Scalar total(0);
    std::string base = edge_base(s.edges()[chain[0]].id);
    bool same_base = true;
    for (std::size_t c : chain) {
      used[c] = 1;
      total += semi.lengths[s.edges()[c].id];
      same_base = same_base && edge_base(s.edges()[c].id) == base;
    }
    std::string id;
    if (chain.size() == 1) {
      id = s.edges()[e].id;
    } else if (same_base) {
      id = base;
    } else {
      for (std::size_t c : chain) id += (id.empty() ? "" : "+") + s.edges()[c].id;
    }
    id = fresh_id(id, taken);
    taken.insert(id);
    es.push_back({id, s.vertices()[tail], s.vertices()[head]});
    lens.emplace(id, total);
  }
  MetricGraph out;
  out.graph = MultiGraph(std::move(vs), std::move(es));
  out.lengths = LengthAssignment(out.graph, std::move(lens));
  return out;
}

}  // namespace tropjac
