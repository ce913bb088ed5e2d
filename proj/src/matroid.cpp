#include "tropjac/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "tropjac/error.hpp"
#include "tropjac/linalg.hpp"

namespace tropjac {

namespace {

EdgeSet ids_of(const MultiGraph& g, const std::vector<std::size_t>& idx) {
  EdgeSet out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(g.edges()[i].id);
  return out;
}

std::vector<std::size_t> sorted_indices(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<std::size_t> idx;
  for (const auto& e : edges) idx.push_back(g.edge_index(e));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

void require_connected(const MultiGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
}

std::size_t other_end(const MultiGraph& g, std::size_t e, std::size_t v) {
  return g.tail_index(e) == v ? g.head_index(e) : g.tail_index(e);
}

}  // namespace

std::string to_string(const Extended& x) { return x.is_infinite() ? "inf" : std::to_string(x.value()); }

EdgeSet CycleSubgraph::edge_set(const MultiGraph& g) const { return ids_of(g, sorted_indices(g, edges)); }

std::size_t default_cycle_cap() {
  if (const char* env = std::getenv("TROPJAC_MAX_CYCLES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

// ---------------------------------------------------------------------------
// spanning trees

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const MultiGraph& g, const std::function<void(const std::vector<std::size_t>&)>& fn)
      : g_(g), fn_(fn) {}

  void run() {
    std::vector<std::size_t> comp(g_.num_vertices());
    std::iota(comp.begin(), comp.end(), 0);
    recurse(0, comp, g_.num_vertices());
  }

 private:
  // Can the remaining edges join all current classes?
  bool can_connect(std::size_t from, const std::vector<std::size_t>& comp, std::size_t comps) const {
    std::vector<std::size_t> parent(comp.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = from; e < g_.num_edges() && comps > 1; ++e) {
      std::size_t a = find(comp[g_.tail_index(e)]), b = find(comp[g_.head_index(e)]);
      if (a != b) {
        parent[b] = a;
        --comps;
      }
    }
    return comps == 1;
  }

  void recurse(std::size_t idx, std::vector<std::size_t>& comp, std::size_t comps) {
    if (comps == 1) {
      fn_(chosen_);
      return;
    }
    if (idx == g_.num_edges()) return;
    std::size_t a = comp[g_.tail_index(idx)], b = comp[g_.head_index(idx)];
    if (a != b) {
      std::vector<std::size_t> saved = comp;
      for (auto& c : comp)
        if (c == b) c = a;
      chosen_.push_back(idx);
      recurse(idx + 1, comp, comps - 1);
      chosen_.pop_back();
      comp = std::move(saved);
    }
    if (can_connect(idx + 1, comp, comps)) recurse(idx + 1, comp, comps);
  }

  const MultiGraph& g_;
  const std::function<void(const std::vector<std::size_t>&)>& fn_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_spanning_tree(const MultiGraph& g, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  require_connected(g);
  TreeEnumerator(g, fn).run();
}

std::vector<SpanningTree> spanning_trees(const MultiGraph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>& t) { out.push_back({ids_of(g, t)}); });
  return out;
}

std::vector<std::size_t> first_spanning_tree(const MultiGraph& g) {
  require_connected(g);
  std::vector<std::size_t> comp(g.num_vertices());
  std::iota(comp.begin(), comp.end(), 0);
  std::vector<std::size_t> tree;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t a = comp[g.tail_index(e)], b = comp[g.head_index(e)];
    if (a == b) continue;
    for (auto& c : comp)
      if (c == b) c = a;
    tree.push_back(e);
  }
  return tree;
}

bool is_spanning_tree(const MultiGraph& g, const EdgeSet& edges) {
  auto idx = sorted_indices(g, edges);
  if (idx.size() != edges.size() || idx.size() + 1 != g.num_vertices()) return false;
  std::vector<char> keep(g.num_edges(), 0);
  for (std::size_t i : idx) keep[i] = 1;
  return detail::component_count(g, keep) == 1;
}

// ---------------------------------------------------------------------------
// cycles

std::vector<CycleSubgraph> graphic_cycles(const MultiGraph& g, std::optional<std::size_t> cap) {
  std::size_t limit = cap.value_or(default_cycle_cap());
  std::vector<CycleSubgraph> out;
  auto push = [&](CycleSubgraph c) {
    if (out.size() >= limit)
      throw Error(ErrorCode::CycleLimitExceeded,
                  "more than " + std::to_string(limit) +
                      " cycles; raise the cap with --max-cycles or TROPJAC_MAX_CYCLES");
    out.push_back(std::move(c));
  };

  std::vector<char> visited(g.num_vertices(), 0);
  std::vector<std::size_t> path_edges, path_vertices;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t t = g.tail_index(e), h = g.head_index(e);
    if (t == h) {
      push({{g.edges()[e].id}, {g.vertices()[t]}});
      continue;
    }
    // simple paths h -> t through edges of larger index
    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
      for (std::size_t f : g.incident(u)) {
        if (f <= e || g.tail_index(f) == g.head_index(f)) continue;
        std::size_t w = other_end(g, f, u);
        if (w == t) {
          CycleSubgraph c;
          c.edges.push_back(g.edges()[e].id);
          c.vertices.push_back(g.vertices()[t]);
          c.vertices.push_back(g.vertices()[h]);
          for (std::size_t k = 0; k < path_edges.size(); ++k) {
            c.edges.push_back(g.edges()[path_edges[k]].id);
            c.vertices.push_back(g.vertices()[path_vertices[k]]);
          }
          c.edges.push_back(g.edges()[f].id);
          push(std::move(c));
        } else if (!visited[w]) {
          visited[w] = 1;
          path_edges.push_back(f);
          path_vertices.push_back(w);
          dfs(w);
          path_edges.pop_back();
          path_vertices.pop_back();
          visited[w] = 0;
        }
      }
    };
    visited[t] = visited[h] = 1;
    dfs(h);
    visited[t] = visited[h] = 0;
  }
  return out;
}

CycleSubgraph cycle_from_edges(const MultiGraph& g, const EdgeSet& edges) {
  auto idx = sorted_indices(g, edges);
  if (idx.empty() || idx.size() != edges.size())
    throw Error(ErrorCode::NotACycle, "a cycle needs a nonempty set of distinct edges");
  std::vector<std::size_t> deg(g.num_vertices(), 0);
  for (std::size_t e : idx) {
    ++deg[g.tail_index(e)];
    ++deg[g.head_index(e)];
  }
  for (std::size_t d : deg)
    if (d != 0 && d != 2) throw Error(ErrorCode::NotACycle, "edge set is not a cycle");

  CycleSubgraph c;
  std::vector<char> used(g.num_edges(), 0);
  std::size_t e = idx[0];
  std::size_t start = g.tail_index(e), v = start;
  for (;;) {
    used[e] = 1;
    c.edges.push_back(g.edges()[e].id);
    c.vertices.push_back(g.vertices()[v]);
    v = other_end(g, e, v);
    if (v == start) break;
    std::size_t next = g.num_edges();
    for (std::size_t f : g.incident(v))
      if (!used[f] && std::binary_search(idx.begin(), idx.end(), f)) {
        next = f;
        break;
      }
    if (next == g.num_edges()) throw Error(ErrorCode::NotACycle, "edge set is not a cycle");
    e = next;
  }
  if (c.edges.size() != idx.size()) throw Error(ErrorCode::NotACycle, "edge set is not a single cycle");
  return c;
}

// ---------------------------------------------------------------------------
// cographic matroid

std::size_t cographic_rank(const MultiGraph& g, const EdgeSet& a) {
  auto idx = sorted_indices(g, a);
  std::vector<char> keep(g.num_edges(), 1);
  for (std::size_t i : idx) keep[i] = 0;
  return idx.size() + h0(g) - detail::component_count(g, keep);
}

std::vector<EdgeSet> bonds(const MultiGraph& g) {
  require_connected(g);
  std::size_t n = g.num_vertices();
  if (n > 30) throw Error(ErrorCode::ValidationError, "bond enumeration is limited to 30 vertices");
  std::vector<std::vector<std::size_t>> found;
  auto side_connected = [&](std::uint64_t mask, bool in) {
    std::vector<char> keep(g.num_edges(), 0);
    std::size_t members = 0;
    for (std::size_t v = 0; v < n; ++v) members += ((mask >> v) & 1) == in;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      bool a = (mask >> g.tail_index(e)) & 1, b = (mask >> g.head_index(e)) & 1;
      keep[e] = a == in && b == in;
    }
    // components among the side's vertices only
    return detail::component_count(g, keep) - (n - members) == 1;
  };
  for (std::uint64_t rest = 0; rest + 1 < (std::uint64_t{1} << (n - 1)); ++rest) {
    std::uint64_t mask = 1 | (rest << 1);
    if (!side_connected(mask, true) || !side_connected(mask, false)) continue;
    std::vector<std::size_t> cut;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (((mask >> g.tail_index(e)) & 1) != ((mask >> g.head_index(e)) & 1)) cut.push_back(e);
    found.push_back(std::move(cut));
  }
  std::sort(found.begin(), found.end());
  std::vector<EdgeSet> out;
  for (const auto& c : found) out.push_back(ids_of(g, c));
  return out;
}

std::vector<EdgeSet> cographic_independent_sets(const MultiGraph& g, std::size_t d) {
  std::vector<EdgeSet> out;
  std::vector<char> keep(g.num_edges(), 1);
  std::vector<std::size_t> chosen;
  std::size_t base = h0(g);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == d) {
      out.push_back(ids_of(g, chosen));
      return;
    }
    for (std::size_t e = from; e + (d - chosen.size()) <= g.num_edges(); ++e) {
      keep[e] = 0;
      if (detail::component_count(g, keep) == base) {
        chosen.push_back(e);
        rec(e + 1);
        chosen.pop_back();
      }
      keep[e] = 1;
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// girths

Extended girth(const MultiGraph& g) {
  std::size_t best = SIZE_MAX;
  std::size_t n = g.num_vertices();
  for (std::size_t e = 0; e < g.num_edges() && best > 1; ++e) {
    std::size_t s = g.tail_index(e), t = g.head_index(e);
    if (s == t) {
      best = 1;
      break;
    }
    // shortest s -> t path avoiding e
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty() && dist[t] == SIZE_MAX) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (dist[u] + 2 >= best) break;
      for (std::size_t f : g.incident(u)) {
        if (f == e) continue;
        std::size_t w = other_end(g, f, u);
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[t] != SIZE_MAX) best = std::min(best, dist[t] + 1);
  }
  return best == SIZE_MAX ? Extended::infinity() : Extended(best);
}

Extended independent_girth(const MultiGraph& g, std::optional<std::size_t> cap) {
  std::size_t best = SIZE_MAX;
  for (const auto& c : graphic_cycles(g, cap)) {
    best = std::min(best, cographic_rank(g, c.edges));
    if (best == 1) break;
  }
  return best == SIZE_MAX ? Extended::infinity() : Extended(best);
}

// ---------------------------------------------------------------------------
// cycle space realization

CycleBasisMatrix cycle_basis_matrix(const MultiGraph& g) {
  auto tree = first_spanning_tree(g);
  std::vector<char> in_tree(g.num_edges(), 0);
  for (std::size_t e : tree) in_tree[e] = 1;

  // tree rooted at vertex 0: parent edge per vertex
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> parent_edge(n, SIZE_MAX), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t f : g.incident(u)) {
      if (!in_tree[f]) continue;
      std::size_t w = other_end(g, f, u);
      if (seen[w]) continue;
      seen[w] = 1;
      parent_edge[w] = f;
      depth[w] = depth[u] + 1;
      queue.push_back(w);
    }
  }

  CycleBasisMatrix m;
  for (const auto& e : g.edges()) m.columns.push_back(e.id);
  m.tree = ids_of(g, tree);
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    if (in_tree[f]) continue;
    std::vector<int> row(g.num_edges(), 0);
    row[f] = 1;
    // walk tail(f) -> head(f) through the tree
    std::size_t x = g.tail_index(f), y = g.head_index(f);
    std::vector<std::pair<std::size_t, int>> up, down;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        std::size_t pe = parent_edge[x];
        // moving from x to its parent
        up.emplace_back(pe, g.head_index(pe) == x ? 1 : -1);
        x = other_end(g, pe, x);
      } else {
        std::size_t pe = parent_edge[y];
        // traversed later from the parent down to y
        down.emplace_back(pe, g.head_index(pe) == y ? -1 : 1);
        y = other_end(g, pe, y);
      }
    }
    for (const auto& [edge, s] : up) row[edge] = s;
    for (const auto& [edge, s] : down) row[edge] = s;
    m.row_edges.push_back(g.edges()[f].id);
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::size_t CycleBasisMatrix::column_rank(const MultiGraph& g, const EdgeSet& subset) const {
  auto idx = sorted_indices(g, subset);
  Matrix<Rational> sub(rows.size(), std::vector<Rational>(idx.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = rows[r][idx[c]];
  return rank(std::move(sub));
}

}  // namespace tropjac
