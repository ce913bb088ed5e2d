#include "tropjac/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropjac/catalog.hpp"
#include "tropjac/divisor.hpp"
#include "tropjac/error.hpp"
#include "tropjac/graph_io.hpp"
#include "tropjac/kirchhoff.hpp"
#include "tropjac/matroid.hpp"
#include "tropjac/mm.hpp"

namespace tropjac::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string format = "json";
  std::optional<std::size_t> max_cycles;
  std::string from, to;
  std::string d_text, e_text;
  std::string cycle;
  std::size_t degree = 0;
  std::size_t depth = 1;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
};

std::size_t cycle_cap(const Options& o) { return o.max_cycles ? *o.max_cycles : default_cycle_cap(); }

json ids(EdgeSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string str(const Scalar& s) { return to_string(s); }
std::string str(const Rational& r) { return r.get_str(); }
std::string str(const BigInt& n) { return n.get_str(); }

json extended(const Extended& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

json factors(const std::vector<BigInt>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(str(f));
  return out;
}

json rationals(const std::vector<Rational>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(str(r));
  return out;
}

json function_json(const PLFunction& f) {
  json values = json::object(), slopes = json::object();
  for (const auto& v : f.graph().vertices()) values[v] = str(f.values.at(v));
  for (const auto& e : f.graph().edges()) slopes[e.id] = str(f.slope(e.id));
  return {{"values", values}, {"slopes", slopes}};
}

json witness_edge(const std::optional<std::pair<EdgeId, Scalar>>& w) {
  if (!w) return nullptr;
  return {{"edge", w->first}, {"slope", str(w->second)}};
}

// --- subcommands -------------------------------------------------------------

json cmd_analyze(const MetricGraph& m, const Options& o) {
  const MultiGraph& g = m.graph;
  json out;
  out["vertices"] = g.num_vertices();
  out["edges"] = g.num_edges();
  out["connected"] = is_connected(g);
  if (!is_connected(g)) return out;
  out["genus"] = genus(g);
  out["biconnected"] = is_biconnected(g);
  out["bridges"] = ids(bridges(g));
  out["girth"] = extended(girth(g));
  out["independent_girth"] = extended(independent_girth(g, cycle_cap(o)));
  std::size_t trees = 0;
  for_each_spanning_tree(g, [&](const std::vector<std::size_t>&) { ++trees; });
  out["spanning_tree_count"] = trees;
  out["invariant_factors"] = factors(critical_group(g));
  out["kirchhoff_denominator"] = str(kirchhoff_denominator(g, m.lengths));
  return out;
}

json cmd_spanning_trees(const MetricGraph& m, const Options&) {
  json trees = json::array();
  for (const auto& t : spanning_trees(m.graph)) trees.push_back(ids(t.edges));
  json out;
  out["count"] = trees.size();
  out["trees"] = std::move(trees);
  out["kirchhoff_denominator"] = str(kirchhoff_denominator(m.graph, m.lengths));
  return out;
}

json cmd_cycles(const MetricGraph& m, const Options& o) {
  const MultiGraph& g = m.graph;
  auto cycles = graphic_cycles(g, cycle_cap(o));
  json list = json::array();
  for (const auto& c : cycles) {
    Scalar length(0);
    for (const auto& e : c.edges) length += m.lengths[e];
    list.push_back({{"edges", ids(c.edges)},
                    {"vertices", c.vertices},
                    {"size", c.edges.size()},
                    {"length", str(length)},
                    {"cographic_rank", cographic_rank(g, c.edges)}});
  }
  json out;
  out["count"] = cycles.size();
  out["cycles"] = std::move(list);
  out["girth"] = extended(girth(g));
  out["independent_girth"] = extended(independent_girth(g, cycle_cap(o)));
  return out;
}

json cmd_jacobian(const MetricGraph& m, const Options&) {
  return {{"invariant_factors", factors(critical_group(m.graph))}};
}

json cmd_potential(const MetricGraph& m, const Options& o) {
  if (o.from.empty() || o.to.empty())
    throw Error(ErrorCode::ValidationError, "potential needs --from and --to");
  PointOnGraph y = parse_point(m.graph, o.from), z = parse_point(m.graph, o.to);
  PotentialSolution s = unit_potential(m.graph, m.lengths, y, z);
  json values = json::object(), slopes = json::object();
  for (const auto& v : s.graph.vertices()) values[v] = str(s.values.at(v));
  for (const auto& e : s.graph.edges()) slopes[e.id] = str(s.currents.at(e.id));
  json out;
  out["source"] = s.source;
  out["sink"] = s.sink;
  out["voltage_drop"] = str(s.values.at(s.source) - s.values.at(s.sink));
  out["values"] = std::move(values);
  out["slopes"] = std::move(slopes);
  return out;
}

json cmd_torsion_test(const MetricGraph& m, const Options& o) {
  if (o.d_text.empty() || o.e_text.empty())
    throw Error(ErrorCode::ValidationError, "torsion-test needs --D and --E");
  Divisor d = parse_divisor(m.graph, o.d_text), e = parse_divisor(m.graph, o.e_text);
  TorsionVerdict v = classify_torsion(m.graph, m.lengths, d, e);
  json out;
  out["D"] = to_string(d);
  out["E"] = to_string(e);
  out["classification"] = std::string(to_string(v.classification));
  out["order"] = v.order ? json(str(*v.order)) : json(nullptr);
  out["witness"] = witness_edge(v.witness);
  out["slope_values"] = rationals(v.slope_values);
  json f = function_json(v.function);
  out["values"] = std::move(f["values"]);
  out["slopes"] = std::move(f["slopes"]);
  return out;
}

json cmd_mm(const MetricGraph& m, const Options& o) {
  MMReport r = analyze(m.graph, m.lengths, cycle_cap(o));
  json out;
  out["genus"] = r.genus;
  out["girth"] = extended(r.girth);
  out["independent_girth"] = extended(r.independent_girth);
  out["mm_finite_degrees"] = r.mm_finite_degrees;
  out["biconnected"] = r.biconnected;
  if (r.edge_bound) out["edge_bound"] = str(*r.edge_bound);
  if (r.stable_edge_count) out["stable_edge_count"] = *r.stable_edge_count;
  if (!r.uniform_bounds.empty()) {
    json b = json::object();
    for (const auto& [d, n] : r.uniform_bounds) b[std::to_string(d)] = str(n);
    out["uniform_bounds"] = std::move(b);
  }
  out["note"] = r.note;
  return out;
}

EdgeSet parse_cycle_option(const MultiGraph& g, const std::string& text) {
  EdgeSet edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    edges.push_back(item.substr(b, e - b + 1));
  }
  if (edges.empty()) throw Error(ErrorCode::ValidationError, "--cycle needs a comma-separated list of edge ids");
  for (const auto& e : edges) g.edge_index(e);
  return edges;
}

json cmd_witness(const MetricGraph& m, const Options& o) {
  const MultiGraph& g = m.graph;
  EdgeSet cycle;
  if (!o.cycle.empty()) {
    cycle = parse_cycle_option(g, o.cycle);
  } else {
    // the first cycle of least cographic rank: a witness at degree gamma^ind
    std::optional<std::size_t> best;
    for (const auto& c : graphic_cycles(g, cycle_cap(o))) {
      std::size_t r = cographic_rank(g, c.edges);
      if (!best || r < *best) best = r, cycle = c.edges;
    }
    if (!best) throw Error(ErrorCode::GenusZero, "the graph has no cycles");
  }
  PacketWitness w = infinite_packet_witness(g, m.lengths, cycle);
  json out;
  out["cycle"] = {{"edges", ids(w.cycle.edges)}, {"vertices", w.cycle.vertices}};
  out["degree"] = w.degree;
  out["D"] = to_string(w.d);
  out["E"] = to_string(w.e);
  out["divisor_matches"] = w.divisor_matches;
  out["slopes_half_integral"] = w.slopes_half_integral;
  out["classification"] = std::string(to_string(w.verdict));
  out["solved_classification"] = std::string(to_string(w.solved_verdict));
  out["verified"] = w.verified();
  out["slope_values"] = rationals(w.slope_values);
  json f = function_json(w.f);
  out["values"] = std::move(f["values"]);
  out["slopes"] = std::move(f["slopes"]);
  return out;
}

json cmd_cells(const MetricGraph& m, const Options& o) {
  auto cells = eff_cells(m.graph, o.degree);
  json list = json::array();
  for (const auto& c : cells) list.push_back({{"edges", ids(c.edges)}, {"dimension", c.dimension}});
  json out;
  out["degree"] = o.degree;
  out["count"] = cells.size();
  std::size_t g = genus(m.graph);
  bool stable = std::all_of(m.graph.vertices().begin(), m.graph.vertices().end(),
                            [&](const VertexId& v) { return valence(m.graph, v) >= 3; });
  if (stable && g >= 2) out["stable_bound"] = str(binomial(3 * g - 3, o.degree));
  out["cells"] = std::move(list);
  return out;
}

json cmd_demo_rational(const MetricGraph& m, const Options& o) {
  RationalDemoReport r = rational_length_failure_demo(m.graph, m.lengths, o.depth);
  json orders = json::object();
  for (const auto& v : r.model.graph.vertices()) orders[v] = str(r.orders.at(v));
  json out;
  out["scale"] = str(r.scale);
  out["unit_vertices"] = r.unit_vertices;
  out["unit_edges"] = r.unit_edges;
  out["depth"] = r.depth;
  out["packet_size"] = r.vertices;
  out["expected_packet_size"] = r.expected_packet_size;
  out["critical_group"] = factors(r.critical_group);
  out["base"] = r.base;
  out["all_torsion"] = r.all_torsion;
  out["orders"] = std::move(orders);
  return out;
}

json cmd_random(const Options& o) {
  std::mt19937_64 rng(o.seed);
  catalog::RandomGraphOptions opts;
  opts.max_vertices = std::max<std::size_t>(o.max_vertices, opts.min_vertices);
  opts.max_edges = std::max<std::size_t>(o.max_edges, opts.max_vertices - 1);
  MetricGraph m;
  m.graph = catalog::random_graph(rng, opts);
  m.lengths = catalog::random_lengths(m.graph, rng);
  return graph_to_json(m);
}

// --- text rendering ------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const json& v) {
  if (v.is_object()) return false;
  if (v.is_array())
    return std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_object(); });
  return true;
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_flat(v)) {
    rows.emplace_back(prefix, scalar_text(v));
  } else if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, rows);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
  }
}

std::string render(const json& v, const std::string& format) {
  if (format == "json") return v.dump() + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(v, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, x] : rows) out += k + std::string(width - k.size() + 2, ' ') + x + "\n";
  return out;
}

std::string error_text(std::string_view code, const std::string& message, const std::string& format) {
  if (format == "text") return "error: " + std::string(code) + ": " + message + "\n";
  return json{{"error", {{"code", code}, {"message", message}}}}.dump() + "\n";
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact computations on metric graphs", "tropjac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tropjac 1.0.0");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-cycles", o.max_cycles, "Cap on enumerated cycles (overrides TROPJAC_MAX_CYCLES)")
      ->check(CLI::PositiveNumber);

  auto with_graph = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("graph", o.graph, "Graph JSON file")->required();
    return sub;
  };
  CLI::App* analyze_cmd = with_graph("analyze", "Structural summary");
  CLI::App* trees_cmd = with_graph("spanning-trees", "Enumerate spanning trees");
  CLI::App* cycles_cmd = with_graph("cycles", "Enumerate cycles with cographic ranks");
  CLI::App* jacobian_cmd = with_graph("jacobian", "Critical group invariant factors");
  CLI::App* potential_cmd = with_graph("potential", "Unit potential between two points");
  potential_cmd->add_option("--from", o.from, "Source point")->required();
  potential_cmd->add_option("--to", o.to, "Sink point")->required();
  CLI::App* torsion_cmd = with_graph("torsion-test", "Classify the class of D - E");
  torsion_cmd->add_option("--D", o.d_text, "Divisor literal")->required();
  torsion_cmd->add_option("--E", o.e_text, "Divisor literal")->required();
  CLI::App* mm_cmd = with_graph("mm", "Manin-Mumford report");
  CLI::App* witness_cmd = with_graph("witness", "Infinite torsion packet witness for a cycle");
  witness_cmd->add_option("--cycle", o.cycle, "Comma-separated edge ids of a cycle");
  CLI::App* cells_cmd = with_graph("cells", "Cells of the effective locus in degree d");
  cells_cmd->add_option("--degree", o.degree, "Degree d")->required();
  CLI::App* demo_cmd = with_graph("demo-rational", "Infinite packets at rational lengths");
  demo_cmd->add_option("--depth", o.depth, "Subdivision depth k")->check(CLI::PositiveNumber);
  CLI::App* random_cmd = app.add_subcommand("random", "Emit a random connected graph file");
  random_cmd->fallthrough();
  random_cmd->add_option("--seed", o.seed, "Generator seed");
  random_cmd->add_option("--vertices", o.max_vertices, "Maximum vertex count")->check(CLI::Range(2, 64));
  random_cmd->add_option("--edges", o.max_edges, "Maximum edge count")->check(CLI::Range(1, 256));

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream out, err;
    result.status = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = 2;
    result.out = error_text("ValidationError", e.what(), o.format);
    return result;
  }

  try {
    json report;
    if (random_cmd->parsed()) {
      report = cmd_random(o);
    } else {
      MetricGraph m = load_graph(o.graph);
      if (analyze_cmd->parsed()) report = cmd_analyze(m, o);
      else if (trees_cmd->parsed()) report = cmd_spanning_trees(m, o);
      else if (cycles_cmd->parsed()) report = cmd_cycles(m, o);
      else if (jacobian_cmd->parsed()) report = cmd_jacobian(m, o);
      else if (potential_cmd->parsed()) report = cmd_potential(m, o);
      else if (torsion_cmd->parsed()) report = cmd_torsion_test(m, o);
      else if (mm_cmd->parsed()) report = cmd_mm(m, o);
      else if (witness_cmd->parsed()) report = cmd_witness(m, o);
      else if (cells_cmd->parsed()) report = cmd_cells(m, o);
      else if (demo_cmd->parsed()) report = cmd_demo_rational(m, o);
    }
    result.out = render(report, o.format);
  } catch (const Error& e) {
    std::string message = e.what();
    if (e.code() == ErrorCode::CycleLimitExceeded && message.find("--max-cycles") == std::string::npos)
      message += "; raise --max-cycles";
    result.status = 2;
    result.out = error_text(to_string(e.code()), message, o.format);
  } catch (const std::exception& e) {
    result.status = 2;
    result.out = error_text("Internal", e.what(), o.format);
  }
  return result;
}

}  // namespace tropjac::cli
