#include "tropjac/mm.hpp"

#include <algorithm>

#include "tropjac/error.hpp"

namespace tropjac {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

MMReport analyze(const MultiGraph& g, const LengthAssignment& lengths, std::optional<std::size_t> cycle_cap) {
  MMReport r;
  r.genus = genus(g);
  if (r.genus == 0) throw Error(ErrorCode::GenusZero, "Manin-Mumford analysis needs genus at least 1");
  r.girth = girth(g);
  r.independent_girth = independent_girth(g, cycle_cap);
  for (std::size_t d = 1; d < r.independent_girth.value(); ++d) r.mm_finite_degrees.push_back(d);
  r.biconnected = is_biconnected(g);
  if (r.genus >= 2) {
    std::size_t top = 3 * r.genus - 3;
    r.edge_bound = BigInt(static_cast<unsigned long>(top));
    for (std::size_t d : r.mm_finite_degrees) r.uniform_bounds.emplace(d, binomial(top, d));
    r.stable_edge_count = stable_model(g, lengths).graph.num_edges();
  }
  if (r.independent_girth.value() >= 2)
    r.note = r.biconnected ? "degree 1: finite packets (biconnected, genus >= 2)"
                           : "degree 1: finite packets (every biconnected component has genus >= 2)";
  else
    r.note = "degree 1: infinite packets (a biconnected component has genus 1)";
  return r;
}

PacketWitness infinite_packet_witness(const MultiGraph& g, const LengthAssignment& lengths, const EdgeSet& cycle) {
  PacketWitness w;
  w.cycle = cycle_from_edges(g, cycle);
  w.degree = cographic_rank(g, cycle);

  std::vector<PointOnGraph> mids;
  for (std::size_t i = 0; i < w.cycle.edges.size(); ++i) {
    w.d.add(PointOnGraph::vertex(w.cycle.vertices[i]), 1);
    PointOnGraph m = PointOnGraph::interior(w.cycle.edges[i], frac(1, 2));
    w.e.add(m, 1);
    mids.push_back(m);
  }

  w.f = PLFunction{g, lengths, refine(g, lengths, mids), {}};
  for (const auto& v : w.f.graph().vertices()) w.f.values.emplace(v, Scalar(0));
  for (const auto& m : mids) w.f.values[w.f.model.vertex_of.at(m)] = -lengths[m.id()] / Scalar(4);

  w.divisor_matches = laplacian_divisor(w.f) == to_scalar_divisor(w.d - w.e);
  TorsionVerdict direct = classify_function(w.f);
  w.verdict = direct.classification;
  w.slope_values = direct.slope_values;
  w.slopes_half_integral = std::all_of(w.slope_values.begin(), w.slope_values.end(), [](const Rational& s) {
    return s == 0 || s == frac(1, 2) || s == frac(-1, 2);
  });
  w.solved_verdict = classify_torsion(g, lengths, w.d, w.e).classification;
  return w;
}

std::vector<EffCell> eff_cells(const MultiGraph& g, std::size_t d) {
  std::size_t gg = genus(g);
  if (d > gg)
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(d) + " exceeds the genus " + std::to_string(gg));
  CycleBasisMatrix m = cycle_basis_matrix(g);
  std::vector<EffCell> out;
  for (auto& s : cographic_independent_sets(g, d)) {
    std::size_t dim = m.column_rank(g, s);
    out.push_back({std::move(s), dim});
  }
  return out;
}

GirthBoundReport check_girth_log_bound(const MultiGraph& g) {
  GirthBoundReport r;
  r.genus = genus(g);
  for (const auto& v : g.vertices())
    if (valence(g, v) < 3) throw Error(ErrorCode::NotStable, "vertex '" + v + "' has valence below 3");
  if (r.genus < 2) throw Error(ErrorCode::GenusTooSmall, "the girth bound needs genus at least 2");
  r.girth = girth(g).value();
  r.independent_girth = independent_girth(g);
  Rational power = 1;
  if (r.girth >= 2) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, r.girth - 2);
    power = p;
  } else {
    power = frac(1, 2);
  }
  BigInt g2 = BigInt(static_cast<unsigned long>(r.genus)) * BigInt(static_cast<unsigned long>(r.genus));
  r.slack = Rational(g2) - power;
  r.holds = sgn(r.slack) > 0;
  r.independent_at_most_girth = r.independent_girth <= Extended(r.girth);
  return r;
}

BigInt class_order(const CriticalGroupCertificate& cert, const MultiGraph& g, const std::vector<long long>& coeffs) {
  std::size_t drop = g.vertex_index(cert.deleted);
  std::vector<BigInt> x;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (i != drop) x.push_back(BigInt(static_cast<long>(coeffs[i])));
  BigInt order = 1;
  for (std::size_t i = 0; i < cert.smith.U.size(); ++i) {
    BigInt y = 0;
    for (std::size_t j = 0; j < x.size(); ++j) y += cert.smith.U[i][j] * x[j];
    const BigInt& d = cert.smith.diagonal[i];
    if (d == 0) throw Error(ErrorCode::Internal, "critical group of a disconnected graph");
    BigInt gcd, part;
    mpz_gcd(gcd.get_mpz_t(), d.get_mpz_t(), y.get_mpz_t());
    part = d / gcd;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
  }
  return order;
}

RationalDemoReport rational_length_failure_demo(const MultiGraph& g, const LengthAssignment& lengths,
                                                std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::ValidationError, "subdivision depth must be at least 1");
  if (genus(g) == 0) throw Error(ErrorCode::GenusZero, "the demonstration needs genus at least 1");
  RationalDemoReport r;
  r.depth = depth;
  r.scale = 1;
  std::map<EdgeId, Rational> len;
  for (const auto& e : g.edges()) {
    auto c = lengths[e.id].constant_value();
    if (!c) throw Error(ErrorCode::IrrationalLength, "edge '" + e.id + "' does not have a rational length");
    len.emplace(e.id, *c);
    mpz_lcm(r.scale.get_mpz_t(), r.scale.get_mpz_t(), c->get_den_mpz_t());
  }

  std::vector<PointOnGraph> unit_points, fine_points;
  r.unit_edges = 0;
  for (const auto& e : g.edges()) {
    Rational units = len.at(e.id) * r.scale;
    unsigned long n = units.get_num().get_ui();
    r.unit_edges += n;
    for (unsigned long j = 1; j < n; ++j) unit_points.push_back(PointOnGraph::interior(e.id, frac(j, n)));
    for (unsigned long j = 1; j < n * depth; ++j)
      fine_points.push_back(PointOnGraph::interior(e.id, frac(j, n * depth)));
  }
  r.unit_vertices = g.num_vertices() + unit_points.size();
  r.expected_packet_size = r.unit_vertices + (depth - 1) * r.unit_edges;
  Refinement fine = refine(g, lengths, fine_points);
  r.model = fine.model;
  const MultiGraph& m = r.model.graph;
  r.vertices = m.num_vertices();

  CriticalGroupCertificate cert = critical_group_certificate(m);
  r.critical_group = cert.factors;
  r.base = m.vertices().front();
  r.all_torsion = true;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    std::vector<long long> coeffs(m.num_vertices(), 0);
    coeffs[v] += 1;
    coeffs[0] -= 1;
    BigInt order = class_order(cert, m, coeffs);
    r.orders.emplace(m.vertices()[v], order);
    r.all_torsion = r.all_torsion && order >= 1;
  }
  return r;
}

}  // namespace tropjac
