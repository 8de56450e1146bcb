#include "spacecross/cli.hpp"

#include "spacecross/errors.hpp"
#include "spacecross/generators.hpp"
#include "spacecross/pipeline.hpp"
#include "spacecross/sametype.hpp"
#include "spacecross/stair.hpp"
#include "spacecross/topology.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace spacecross {

using nlohmann::json;

namespace {

enum class LogLevel { Error, Warn, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("SPACECROSSING_LOG");
  if (!env) return LogLevel::Warn;
  const std::string v = env;
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  if (v == "error") return LogLevel::Error;
  return LogLevel::Warn;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[info] " << msg << "\n";
}

json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ValidationError("input is not valid JSON: " + std::string(e.what()));
  }
}

json witness_to_json(const CrossingWitness& w) {
  json j{{"edges", w.edges}, {"segment_index", w.segment_index}};
  if (w.line) j["line"] = line_to_json(*w.line);
  json params = json::array();
  for (const auto& p : w.params) params.push_back(quadext_to_json(p));
  j["params"] = params;
  return j;
}

json cycle_to_json(const PolygonalCycle& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  return pts;
}

PolygonalCycle cycle_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + " must be an array of points");
  PolygonalCycle c;
  for (std::size_t i = 0; i < j.size(); ++i) c.points.push_back(point_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  c.validate();
  return c;
}

std::vector<PolygonalCycle> cycles_from_input(const json& j, std::size_t count) {
  if (!j.contains("cycles") || !j.at("cycles").is_array() || j.at("cycles").size() != count)
    throw ValidationError("input needs \"cycles\" with exactly " + std::to_string(count) + " cycles");
  std::vector<PolygonalCycle> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(cycle_from_json(j.at("cycles")[i], "cycles[" + std::to_string(i) + "]"));
  return out;
}

json multiset_to_json(const PointMultiset& F) {
  json pts = json::array();
  for (const auto& p : F.points) {
    json q = json::array();
    for (const auto& x : p) q.push_back(rational_to_json(x));
    pts.push_back(q);
  }
  return {{"dim", F.dim}, {"points", pts}};
}

PointMultiset multiset_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw ValidationError(where + " needs \"dim\" and \"points\"");
  PointMultiset F;
  if (!j.at("dim").is_number_integer()) throw ValidationError(where + ".dim must be an integer");
  F.dim = j.at("dim").get<int>();
  int i = 0;
  for (const auto& p : j.at("points")) {
    const std::string at = where + ".points[" + std::to_string(i++) + "]";
    if (!p.is_array()) throw ValidationError(at + " must be an array");
    BlockPoint q;
    for (const auto& x : p) q.push_back(rational_from_json(x, at));
    F.points.push_back(std::move(q));
  }
  F.validate();
  return F;
}

json partition_to_json(const YaoYaoPartition& p) {
  auto pt = [](const BlockPoint& b) {
    json a = json::array();
    for (const auto& x : b) a.push_back(rational_to_json(x));
    return a;
  };
  json gens = json::array(), verts = json::array(), cells = json::array();
  for (const auto& g : p.generators) gens.push_back(pt(g));
  for (const auto& v : p.vertices) verts.push_back(pt(v));
  for (const auto& c : p.cells)
    cells.push_back({{"generators", c.generators}, {"simplex", c.simplex}, {"count", c.members.size()}});
  return {{"dim", p.dim},           {"center", pt(p.center)}, {"generators", gens}, {"vertices", verts},
          {"scale", rational_to_json(p.scale)}, {"cells", cells}, {"perturbed", p.perturbed},
          {"halfspace_property", halfspace_property(p)}};
}

SpatialDrawing drawing_input(const CommandConfig& cfg) {
  if (cfg.input.empty()) throw ValidationError(cfg.command + " needs --input");
  return drawing_from_json(read_input(cfg.input));
}

CrossingOptions crossing_options(const CommandConfig& cfg) {
  CrossingOptions opt;
  opt.k = cfg.k;
  opt.mode = cfg.mode;
  opt.tol = cfg.tol;
  opt.threads = static_cast<int>(cfg.threads);
  return opt;
}

json mode_fields(Mode m) { return m == Mode::Exact ? json{{"mode", "exact"}} : json{{"mode", "float"}}; }

json cmd_count_crossings(const CommandConfig& cfg) {
  const auto d = drawing_input(cfg);
  const auto rep = count_line_crossings(d, crossing_options(cfg));
  json out = mode_fields(rep.mode);
  out["k"] = rep.k;
  out["count"] = rep.count;
  out["tuples"] = rep.tuples;
  if (rep.mode == Mode::Float) out["tol"] = cfg.tol;
  return out;
}

json cmd_count_planar(const CommandConfig& cfg) {
  return {{"count", count_planar_crossings(drawing_input(cfg))}};
}

json cmd_lift_sphere(const CommandConfig& cfg) {
  const auto planar = drawing_input(cfg);
  LiftParams lp;
  lp.subdivision = static_cast<int>(cfg.subdivision);
  lp.seed = cfg.seed;
  const auto lifted = lift_to_sphere(planar, lp);
  json out{{"subdivision", cfg.subdivision}, {"planar_crossings", count_planar_crossings(planar)}};
  if (cfg.count) out["space_crossings"] = count_line_crossings(lifted, crossing_options(cfg)).count;
  out["drawing"] = drawing_to_json(lifted);
  return out;
}

json cmd_gen_stair(const CommandConfig& cfg) {
  const int n = cfg.n;
  const std::int64_t m = cfg.m;
  if (n < 2) throw ValidationError("gen-stair needs --n >= 2");
  if (m < 0 || m > static_cast<std::int64_t>(n) * (n - 1) / 2) throw ValidationError("gen-stair needs 0 <= m <= C(n, 2)");
  const StretchedGrid grid(3, 5 * n);
  const auto sd = standard_stair_drawing(n, m, grid);
  const auto cc = count_candidate_quadruples(n, m);
  const int D = interval_D(n, m);
  json edges = json::array();
  for (std::size_t e = 0; e < sd.graph.m(); ++e) {
    json path = json::array();
    const auto& sp = sd.edge_paths[e];
    auto idx = [](const std::vector<Rational>& v) {
      json a = json::array();
      for (const auto& x : v) a.push_back(rational_to_json(x));
      return a;
    };
    path.push_back(idx(sp.a));
    for (const auto& s : sp.segments) path.push_back(idx(s.to));
    edges.push_back({{"u", sd.graph.edges()[e].u}, {"v", sd.graph.edges()[e].v}, {"stair_path", path}});
  }
  json out{{"n", n}, {"m", m}, {"D", D}, {"count", cc.count}, {"stair_drawing", {{"diagonal_index", sd.diagonal_index}, {"edges", edges}}}};
  if (cfg.check_bounds) {
    Integer m6 = 1, n4 = 1;
    for (int i = 0; i < 6; ++i) m6 *= Integer(static_cast<long>(m));
    for (int i = 0; i < 4; ++i) n4 *= n;
    const Rational bound_m(6720 * m6, n4);
    Integer d6 = 1;
    for (int i = 0; i < 6; ++i) d6 *= D;
    const Integer bound_d = 105 * Integer(n) * n * d6;
    const bool ok_m = Rational(Integer(static_cast<long>(cc.count))) <= bound_m;
    const bool ok_d = Integer(static_cast<long>(cc.count)) <= bound_d;
    out["bound_m6_n4"] = rational_to_json(bound_m);
    out["bound_n2_D6"] = bound_d.get_str();
    out["pass"] = ok_m && ok_d;
  }
  return out;
}

json cmd_gen_hexgrid(const CommandConfig& cfg) {
  const auto h = hexgrid_construction(cfg.k, static_cast<int>(cfg.subdivision), cfg.seed);
  json out{{"k", cfg.k},
           {"subdivision", cfg.subdivision},
           {"rows", h.rows},
           {"special_edge", {h.special_edge.u, h.special_edge.v}},
           {"face_distance", h.face_distance},
           {"vertices", h.graph.n()},
           {"edges", h.graph.m()}};
  if (cfg.count) {
    CrossingOptions opt = crossing_options(cfg);
    opt.k = 4;
    out["space_crossings"] = count_line_crossings(h.drawing, opt).count;
  }
  out["drawing"] = drawing_to_json(h.drawing);
  return out;
}

json cmd_linking(const CommandConfig& cfg) {
  std::vector<PolygonalCycle> c;
  if (cfg.input.empty()) {
    const auto h = hopf_pair();
    c = {h[0], h[1]};
  } else {
    c = cycles_from_input(read_input(cfg.input), 2);
  }
  const long t = generic_direction(c[0], c[1]);
  return {{"lk", linking_number(c[0], c[1])}, {"direction", {1, t, t * t}}};
}

json cmd_conway_gordon(const CommandConfig& cfg) {
  std::array<Point3, 6> pts;
  if (cfg.input.empty()) {
    const auto r = random_points(6, cfg.den, cfg.seed);
    std::copy(r.begin(), r.end(), pts.begin());
  } else {
    const json j = read_input(cfg.input);
    if (!j.contains("points") || j.at("points").size() != 6) throw ValidationError("input needs exactly 6 \"points\"");
    for (int i = 0; i < 6; ++i) pts[i] = point_from_json(j.at("points")[i], "points[" + std::to_string(i) + "]");
  }
  const auto r = conway_gordon_check(pts);
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"first", p.first}, {"second", p.second}, {"lk", p.lk}});
  json points = json::array();
  for (const auto& p : pts) points.push_back(point_to_json(p));
  return {{"points", points},
          {"parity_sum", r.parity_sum},
          {"odd_pair", {{"first", r.odd_pair.first}, {"second", r.odd_pair.second}, {"lk", r.odd_pair.lk}}},
          {"pairs", pairs}};
}

json cmd_transversal_4cycles(const CommandConfig& cfg) {
  std::array<PolygonalCycle, 4> c;
  if (cfg.input.empty()) {
    c = stacked_hopf_pairs();
  } else {
    const auto v = cycles_from_input(read_input(cfg.input), 4);
    std::copy(v.begin(), v.end(), c.begin());
  }
  const auto r = transversal_through_cycles(c);
  json out{{"linked_hypothesis", r.linked_hypothesis}, {"lemma_violation", r.lemma_violation}, {"found", r.witness.has_value()}};
  if (r.witness) out["witness"] = witness_to_json(*r.witness);
  json cycles = json::array();
  for (const auto& x : c) cycles.push_back(cycle_to_json(x));
  out["cycles"] = cycles;
  return out;
}

json cmd_witness_pipeline(const CommandConfig& cfg) {
  SpatialDrawing d;
  BoostOptions opt;
  opt.seed = cfg.seed;
  opt.budget = static_cast<long>(cfg.budget);
  if (cfg.input.empty()) {
    auto fx = disjoint_k6_fixture(2, cfg.seed);
    d = std::move(fx.drawing);
    opt.sides = std::move(fx.sides);
  } else {
    const json j = read_input(cfg.input);
    d = drawing_from_json(j);
    if (j.contains("sides")) opt.sides = j.at("sides").get<std::vector<int>>();
  }
  const auto rep = boost_witness_pipeline(d, opt);
  json ws = json::array();
  int verified = 0;
  for (const auto& w : rep.witnesses) {
    const bool ok = verify_witness(d, w);
    verified += ok;
    json jw = witness_to_json(w);
    jw["verified"] = ok;
    ws.push_back(jw);
  }
  return {{"bisection", {{"e1", rep.bisection.e1}, {"e2", rep.bisection.e2}, {"retries", rep.bisection.retries}}},
          {"subdivisions", {rep.subdivisions[0].size(), rep.subdivisions[1].size()}},
          {"pairs_searched", rep.pairs_searched},
          {"lemma_violations", rep.lemma_violations},
          {"verified", verified},
          {"witnesses", ws}};
}

json cmd_order_types(const CommandConfig&) {
  const auto types = enumerate_order_types();
  json by = json::object();
  json list = json::array();
  for (const auto& t : types) {
    const std::string key = std::to_string(t.components);
    by[key] = by.value(key, 0) + 1;
    list.push_back({{"pairs", t.pairs}, {"components", t.components}});
  }
  return {{"total", types.size()}, {"by_components", by}, {"types", list}};
}

json cmd_yao_yao(const CommandConfig& cfg) {
  PointMultiset F;
  if (cfg.input.empty()) {
    if (cfg.n < 1) throw ValidationError("yao-yao without --input needs --n");
    F = random_multiset(cfg.dim, cfg.n, cfg.den, cfg.seed);
  } else {
    F = multiset_from_json(read_input(cfg.input), "input");
  }
  const auto p = yao_yao_partition(F);
  return {{"size", F.size()}, {"count_check", cells_meet_count(p, F)}, {"partition", partition_to_json(p)}};
}

json cmd_same_type(const CommandConfig& cfg) {
  std::vector<PointMultiset> sets;
  std::vector<SparsePolynomial> polys;
  if (cfg.input.empty()) {
    auto inst = random_same_type_instance(cfg.n > 0 ? cfg.n : 81, cfg.seed);
    sets = std::move(inst.sets);
    polys = std::move(inst.polys);
  } else {
    const json j = read_input(cfg.input);
    if (!j.contains("multisets") || !j.contains("polynomials"))
      throw ValidationError("input needs \"multisets\" and \"polynomials\"");
    int i = 0;
    for (const auto& m : j.at("multisets")) sets.push_back(multiset_from_json(m, "multisets[" + std::to_string(i++) + "]"));
    for (const auto& f : j.at("polynomials")) polys.push_back(polynomial_from_json(f));
  }
  const auto r = same_type_refine(sets, polys);
  json polys_json = json::array();
  for (const auto& f : polys) polys_json.push_back(polynomial_to_json(f));
  json sizes = json::array();
  for (const auto& v : r.retained) sizes.push_back(v.size());
  return {{"retained", r.retained},
          {"sizes", sizes},
          {"signs", r.signs},
          {"epsilon", "3^-" + r.epsilon_exponent.get_str()},
          {"partitions_built", r.partitions_built},
          {"perturbed", r.perturbed},
          {"polynomials", polys_json}};
}

json cmd_generate(const CommandConfig& cfg) {
  const std::string& kind = cfg.kind;
  if (kind == "points") {
    json pts = json::array();
    for (const auto& p : random_points(cfg.n, cfg.den, cfg.seed)) pts.push_back(point_to_json(p));
    return {{"points", pts}};
  }
  if (kind == "drawing") return drawing_to_json(random_spatial_drawing(cfg.n, cfg.m, cfg.den, cfg.seed));
  if (kind == "planar-drawing") return drawing_to_json(random_planar_drawing(cfg.n, cfg.m, cfg.den, cfg.seed));
  if (kind == "erdos-renyi") {
    const Graph g = erdos_renyi(cfg.n, cfg.p, cfg.seed);
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.n()}, {"edges", edges}};
  }
  if (kind == "hopf") {
    const auto h = hopf_pair();
    return {{"cycles", {cycle_to_json(h[0]), cycle_to_json(h[1])}}};
  }
  if (kind == "stacked-hopf") {
    json cycles = json::array();
    for (const auto& c : stacked_hopf_pairs()) cycles.push_back(cycle_to_json(c));
    return {{"cycles", cycles}};
  }
  if (kind == "multiset") return multiset_to_json(random_multiset(cfg.dim, cfg.n, cfg.den, cfg.seed));
  throw ValidationError("unknown generator kind \"" + kind + "\"");
}

using Handler = json (*)(const CommandConfig&);

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t{
      {"count-crossings", cmd_count_crossings}, {"count-planar", cmd_count_planar},
      {"lift-sphere", cmd_lift_sphere},         {"gen-stair", cmd_gen_stair},
      {"gen-hexgrid", cmd_gen_hexgrid},         {"linking", cmd_linking},
      {"conway-gordon", cmd_conway_gordon},     {"transversal-4cycles", cmd_transversal_4cycles},
      {"witness-pipeline", cmd_witness_pipeline}, {"order-types", cmd_order_types},
      {"yao-yao", cmd_yao_yao},                 {"same-type", cmd_same_type},
      {"generate", cmd_generate}};
  return t;
}

json error_report(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

void CommandConfig::validate() const {
  if (mode == Mode::Float && !(tol > 0)) throw ValidationError("--tol must be positive in float mode");
  if (k != 3 && k != 4 && command == "count-crossings") throw ValidationError("--k must be 3 or 4");
  if (den < 1) throw ValidationError("--den must be positive");
  if (dim != 1 && dim != 2 && (command == "yao-yao" || kind == "multiset"))
    throw ValidationError("--dim must be 1 or 2");
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : table()) v.push_back(name);
    return v;
  }();
  return names;
}

CommandResult run(const CommandConfig& cfg) {
  try {
    cfg.validate();
    for (const auto& [name, handler] : table()) {
      if (name != cfg.command) continue;
      const auto start = std::chrono::steady_clock::now();
      CommandResult r{0, handler(cfg)};
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      log_info(cfg.command + " finished in " + std::to_string(dt.count()) + " s");
      return r;
    }
    return {1, error_report("UnknownSubcommand", "unknown subcommand \"" + cfg.command + "\"")};
  } catch (const Error& e) {
    return {e.category() == Error::Category::Internal ? 2 : 1, error_report(e.code(), e.what())};
  } catch (const json::exception& e) {
    return {1, error_report("ValidationError", e.what())};
  } catch (const std::exception& e) {
    return {2, error_report("InternalError", e.what())};
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space crossing numbers: counters, generators and verifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  CommandConfig cfg;
  std::string mode = "exact";
  app.add_option("--input", cfg.input, "input JSON document");
  app.add_option("--output", cfg.output, "report path (default: stdout)");
  app.add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", cfg.tol, "float-mode tolerance");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--budget", cfg.budget, "search budget");
  app.add_option("--subdivision", cfg.subdivision, "polyline subdivision depth");
  app.add_option("--k", cfg.k, "tuple size or grid size");
  app.add_option("--threads", cfg.threads, "OpenMP threads (0: default)");
  app.add_option("--n", cfg.n, "vertex or point count");
  app.add_option("--m", cfg.m, "edge count");
  app.add_option("--dim", cfg.dim, "point dimension");
  app.add_option("--den", cfg.den, "denominator bound");
  app.add_option("--p", cfg.p, "edge probability");
  app.add_option("--kind", cfg.kind, "generator kind");
  app.add_flag("--check-bounds", cfg.check_bounds, "compare counts against the bounds");
  app.add_flag("--count", cfg.count, "also count space crossings");
  for (const auto& name : subcommands()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_report("UsageError", e.what()).dump() << "\n";
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.mode = mode == "float" ? Mode::Float : Mode::Exact;

  const CommandResult r = run(cfg);
  if (r.status != 0) {
    err << r.report.dump() << "\n";
    return r.status;
  }
  if (cfg.output.empty()) {
    out << r.report.dump(2) << "\n";
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << error_report("UnwritableOutput", "cannot write " + cfg.output).dump() << "\n";
      return 1;
    }
    f << r.report.dump(2) << "\n";
  }
  return 0;
}

}  // namespace spacecross
