#include "tropjac/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "tropjac/error.hpp"
#include "tropjac/kirchhoff.hpp"
#include "tropjac/laplacian.hpp"

namespace tropjac {

// ---------------------------------------------------------------------------
// Divisor

void Divisor::add(const PointOnGraph& p, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

long long Divisor::coefficient(const PointOnGraph& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [p, c] : terms_) d += c;
  return d;
}

std::vector<PointOnGraph> Divisor::support() const {
  std::vector<PointOnGraph> out;
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

Divisor Divisor::operator-() const {
  Divisor r;
  for (const auto& [p, c] : terms_) r.add(p, -c);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor parse_divisor(const MultiGraph& g, const std::string& text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "bad divisor '" + text + "': " + why);
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  Divisor d;
  skip();
  if (text.substr(pos) == "0" || pos == text.size()) return d;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    long long coef = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      try {
        coef = std::stoll(text.substr(start, pos - start));
      } catch (const std::out_of_range&) {
        throw fail("coefficient too large");
      }
      skip();
      if (pos >= text.size() || text[pos] != '*') throw fail("expected '*' after a coefficient");
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '(' before a point");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw fail("missing ')'");
    std::string point = text.substr(pos + 1, close - pos - 1);
    point.erase(0, point.find_first_not_of(" \t"));
    point.erase(point.find_last_not_of(" \t") + 1);
    d.add(parse_point(g, point), sign * coef);
    pos = close + 1;
    first = false;
  }
  return d;
}

std::string to_string(const Divisor& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : d.terms()) {
    long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += std::to_string(mag) + "*(" + to_string(p) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// PL functions

Scalar PLFunction::slope(const EdgeId& model_edge) const {
  const Edge& e = graph().edge(model_edge);
  return (values.at(e.tail) - values.at(e.head)) / lengths()[model_edge];
}

Scalar PLFunction::value(const PointOnGraph& p) const {
  if (p.is_vertex()) return values.at(p.id());
  if (auto it = model.vertex_of.find(p); it != model.vertex_of.end()) return values.at(it->second);
  base.edge_index(p.id());
  for (const auto& [id, seg] : model.segment_of) {
    if (seg.original != p.id() || !(seg.from < p.position() && p.position() < seg.to)) continue;
    const Edge& e = graph().edge(id);
    Rational s = (p.position() - seg.from) / (seg.to - seg.from);
    return values.at(e.tail) + Scalar(s) * (values.at(e.head) - values.at(e.tail));
  }
  throw Error(ErrorCode::Internal, "point not covered by the model");
}

PLFunction zero_function(const MultiGraph& g, const LengthAssignment& lengths) {
  PLFunction f{g, lengths, refine(g, lengths, {}), {}};
  for (const auto& v : g.vertices()) f.values.emplace(v, Scalar(0));
  return f;
}

ScalarDivisor laplacian_divisor(const PLFunction& f) {
  const MultiGraph& m = f.graph();
  ScalarDivisor out;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    const VertexId& id = m.vertices()[v];
    Scalar total(0);
    for (std::size_t e : m.incident(v)) {
      std::size_t a = m.tail_index(e), b = m.head_index(e);
      if (a == b) continue;
      const VertexId& other = m.vertices()[a == v ? b : a];
      total += (f.values.at(id) - f.values.at(other)) / f.lengths()[m.edges()[e].id];
    }
    if (!total.is_zero()) out.emplace(f.model.point_of.at(id), total);
  }
  return out;
}

ScalarDivisor to_scalar_divisor(const Divisor& d) {
  ScalarDivisor out;
  for (const auto& [p, c] : d.terms()) out.emplace(p, Scalar(c));
  return out;
}

PLFunction solve_for_function(const MultiGraph& g, const LengthAssignment& lengths, const Divisor& d,
                              const Divisor& e) {
  if (d.degree() != e.degree())
    throw Error(ErrorCode::DegreeMismatch, "divisors have degrees " + std::to_string(d.degree()) + " and " +
                                               std::to_string(e.degree()));
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  std::vector<PointOnGraph> points = d.support();
  for (const auto& p : e.support()) points.push_back(p);
  PLFunction f{g, lengths, refine(g, lengths, points), {}};
  const MultiGraph& m = f.graph();

  std::vector<Scalar> rhs(m.num_vertices());
  Divisor diff = d - e;
  for (const auto& [p, c] : diff.terms()) rhs[m.vertex_index(f.model.vertex_of.at(p))] += Scalar(c);
  std::size_t ground = 0;
  if (!e.is_zero())
    ground = m.vertex_index(f.model.vertex_of.at(e.terms().begin()->first));
  else if (!d.is_zero())
    ground = m.vertex_index(f.model.vertex_of.at(d.terms().begin()->first));

  std::vector<Scalar> x(m.num_vertices());
  if (!diff.is_zero()) {
    x = solve_grounded(m, f.lengths(), rhs, ground);
    if (std::any_of(x.begin(), x.end(), [](const Scalar& s) { return !s.is_constant(); })) {
      Scalar k = kirchhoff_denominator(g, lengths);
      for (auto& v : x) v = rebase(v, k);
    }
  }
  for (std::size_t v = 0; v < m.num_vertices(); ++v) f.values.emplace(m.vertices()[v], x[v]);
  return f;
}

// ---------------------------------------------------------------------------
// torsion

std::string_view to_string(TorsionClass c) {
  switch (c) {
    case TorsionClass::IdenticallyPrincipal: return "IdenticallyPrincipal";
    case TorsionClass::TorsionAtAllLengths: return "TorsionAtAllLengths";
    case TorsionClass::TorsionAtGivenLengths: return "TorsionAtGivenLengths";
    case TorsionClass::NonTorsionForVeryGeneral: return "NonTorsionForVeryGeneral";
  }
  return "";
}

std::string_view to_string(VertexPairClass c) {
  return c == VertexPairClass::SlopesZeroOne ? "SlopesZeroOne" : "GenericNonTorsion";
}

TorsionVerdict classify_function(const PLFunction& f) {
  TorsionVerdict v{TorsionClass::IdenticallyPrincipal, std::nullopt, std::nullopt, {}, f};
  const MultiGraph& m = f.graph();
  std::map<EdgeId, Rational> slopes;
  for (const auto& e : m.edges()) {
    Scalar s = f.slope(e.id);
    auto c = s.constant_value();
    if (!c) {
      v.classification = TorsionClass::NonTorsionForVeryGeneral;
      v.witness = std::pair{e.id, s};
      return v;
    }
    slopes.emplace(e.id, *c);
  }

  BigInt order = 1;
  std::set<Rational> distinct;
  for (const auto& e : m.edges()) {
    const Rational& s = slopes.at(e.id);
    distinct.insert(s);
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), s.get_den_mpz_t());
    if (!v.witness || s.get_den() > v.witness->second.constant_value()->get_den()) v.witness = std::pair{e.id, Scalar(s)};
  }
  v.order = order;
  v.slope_values.assign(distinct.begin(), distinct.end());

  // Slopes stay a solution for all lengths iff f has no net change along
  // any edge that lies on a cycle.
  auto br = bridges(f.base);
  std::set<EdgeId> bridge_set(br.begin(), br.end());
  std::map<EdgeId, Rational> net;
  for (const auto& [id, seg] : f.model.segment_of) net[seg.original] += (seg.to - seg.from) * slopes.at(id);
  bool length_free = std::all_of(net.begin(), net.end(), [&](const auto& kv) {
    return bridge_set.contains(kv.first) || kv.second == 0;
  });

  if (!length_free)
    v.classification = TorsionClass::TorsionAtGivenLengths;
  else if (order == 1)
    v.classification = TorsionClass::IdenticallyPrincipal;
  else
    v.classification = TorsionClass::TorsionAtAllLengths;
  return v;
}

TorsionVerdict classify_torsion(const MultiGraph& g, const LengthAssignment& lengths, const Divisor& d,
                                const Divisor& e) {
  return classify_function(solve_for_function(g, lengths, d, e));
}

VertexPairVerdict classify_vertex_pair(const MultiGraph& g, const VertexId& x, const VertexId& y) {
  std::size_t a = g.vertex_index(x), b = g.vertex_index(y);
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  std::vector<char> keep(g.num_edges(), 0);
  for (const auto& e : bridges(g)) keep[g.edge_index(e)] = 1;
  auto label = detail::component_labels(g, keep);
  if (label[a] == label[b]) return {VertexPairClass::SlopesZeroOne, std::nullopt};

  LengthAssignment generic = LengthAssignment::symbolic(g);
  PotentialSolution p = unit_potential(g, generic, x, y);
  for (const auto& e : g.edges()) {
    const Scalar& c = p.currents.at(e.id);
    if (!c.is_constant()) return {VertexPairClass::GenericNonTorsion, std::pair{e.id, c}};
  }
  throw Error(ErrorCode::Internal, "no nonconstant current between vertices off a bridge path");
}

// ---------------------------------------------------------------------------
// active edges

ActiveEdges active_edges(const PLFunction& f) {
  std::map<EdgeId, std::vector<std::pair<Rational, EdgeId>>> pieces;
  for (const auto& [id, seg] : f.model.segment_of) pieces[seg.original].emplace_back(seg.from, id);
  ActiveEdges out;
  for (const auto& e : f.base.edges()) {
    auto& ps = pieces.at(e.id);
    std::sort(ps.begin(), ps.end());
    if (!f.slope(ps.front().second).is_zero() && !f.slope(ps.back().second).is_zero())
      out.current_active.push_back(e.id);
    if (!(f.values.at(e.tail) - f.values.at(e.head)).is_zero()) out.voltage_active.push_back(e.id);
  }
  return out;
}

namespace {

std::optional<CycleSubgraph> cycle_within(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<char> allowed(g.num_edges(), 0);
  for (const auto& e : edges) allowed[g.edge_index(e)] = 1;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!allowed[e]) continue;
    std::size_t s = g.tail_index(e), t = g.head_index(e);
    if (s == t) return cycle_from_edges(g, {g.edges()[e].id});
    // path s -> t inside the allowed edges, avoiding e
    std::vector<std::size_t> via(g.num_vertices(), SIZE_MAX);
    std::vector<char> seen(g.num_vertices(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t f : g.incident(u)) {
        if (!allowed[f] || f == e) continue;
        std::size_t w = g.tail_index(f) == u ? g.head_index(f) : g.tail_index(f);
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = f;
        queue.push_back(w);
      }
    }
    if (!seen[t]) continue;
    EdgeSet cyc{g.edges()[e].id};
    for (std::size_t v = t; v != s;) {
      std::size_t f = via[v];
      cyc.push_back(g.edges()[f].id);
      v = g.tail_index(f) == v ? g.head_index(f) : g.tail_index(f);
    }
    return cycle_from_edges(g, cyc);
  }
  return std::nullopt;
}

void check_hypothesis(const PLFunction& f, const EdgeSet& designated, const ScalarDivisor& div) {
  std::set<EdgeId> allowed(designated.begin(), designated.end());
  for (const auto& e : designated) f.base.edge_index(e);
  std::map<EdgeId, std::pair<int, int>> signs;
  for (const auto& [p, c] : div) {
    if (p.is_vertex() || !allowed.contains(p.id()))
      throw Error(ErrorCode::HypothesisViolated,
                  "Div(f) has a point at " + to_string(p) + " outside the interiors of the designated edges");
    auto v = c.constant_value();
    if (!v || (*v != 1 && *v != -1))
      throw Error(ErrorCode::HypothesisViolated, "Div(f) has coefficient " + to_string(c) + " at " + to_string(p));
    auto& [plus, minus] = signs[p.id()];
    (*v == 1 ? plus : minus) += 1;
  }
  for (const auto& [e, pm] : signs)
    if (pm.first != 1 || pm.second != 1)
      throw Error(ErrorCode::HypothesisViolated, "Div(f) restricted to edge " + e + " is not of the form x - y");
}

}  // namespace

ActiveLemmaReport check_active_lemmas(const PLFunction& f, const EdgeSet& designated) {
  ScalarDivisor div = laplacian_divisor(f);
  if (!designated.empty()) check_hypothesis(f, designated, div);

  ActiveLemmaReport r;
  r.hypothesis_checked = !designated.empty();
  r.divisor_nonzero = !div.empty();
  r.active = active_edges(f);
  const MultiGraph& g = f.base;

  if (!r.active.voltage_active.empty()) {
    const Edge& e = g.edge(r.active.voltage_active.front());
    const Scalar& fu = f.values.at(e.tail);
    const Scalar& fw = f.values.at(e.head);
    bool ordered = std::all_of(g.vertices().begin(), g.vertices().end(),
                               [&](const VertexId& v) { return f.values.at(v).is_constant(); });
    std::vector<char> upper(g.num_vertices(), 0);
    if (ordered) {
      Rational threshold = std::max(*fu.constant_value(), *fw.constant_value());
      for (std::size_t v = 0; v < g.num_vertices(); ++v)
        upper[v] = *f.values.at(g.vertices()[v]).constant_value() >= threshold;
    } else {
      for (std::size_t v = 0; v < g.num_vertices(); ++v) upper[v] = f.values.at(g.vertices()[v]) == fu;
    }
    EdgeSet cut;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
      if (upper[g.tail_index(i)] != upper[g.head_index(i)]) cut.push_back(g.edges()[i].id);
    r.cut_disconnects = h0(delete_edges(g, cut)) > h0(g);
    r.cut = std::move(cut);
  }
  if (!r.active.current_active.empty()) r.cycle = cycle_within(g, r.active.current_active);
  r.some_active = !r.divisor_nonzero || !r.active.current_active.empty() || !r.active.voltage_active.empty();
  return r;
}

// ---------------------------------------------------------------------------
// critical group

CriticalGroupCertificate critical_group_certificate(const MultiGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  auto least = std::min_element(g.vertices().begin(), g.vertices().end());
  std::size_t drop = static_cast<std::size_t>(least - g.vertices().begin());
  Matrix<BigInt> full = laplacian_matrix(g);
  CriticalGroupCertificate c;
  c.deleted = *least;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (i == drop) continue;
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < full.size(); ++j)
      if (j != drop) row.push_back(full[i][j]);
    c.reduced.push_back(std::move(row));
  }
  c.smith = smith_normal_form(c.reduced);
  for (const auto& d : c.smith.diagonal)
    if (d > 1) c.factors.push_back(d);
  return c;
}

std::vector<BigInt> critical_group(const MultiGraph& g) { return critical_group_certificate(g).factors; }

}  // namespace tropjac
