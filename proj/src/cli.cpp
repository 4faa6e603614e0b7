#include "gentile/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gentile/angles.hpp"
#include "gentile/constructions.hpp"
#include "gentile/dual.hpp"
#include "gentile/enumeration.hpp"
#include "gentile/io.hpp"
#include "gentile/render.hpp"
#include "gentile/sfc.hpp"

namespace gt {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;

Json report(const std::string& command, const std::string& digest) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["input_digest"] = digest;
  return j;
}

std::string file_digest(const std::string& path) { return sha256_hex(read_file(path)); }

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::array<Rational, 3> parse_angles(const std::string& s) {
  auto v = parse_rational_list(s);
  if (v.size() != 3) throw Error(Errc::InvalidArgument, "expected three angles");
  return {v[0], v[1], v[2]};
}

Json angles_json(const std::array<Rational, 3>& a) {
  return Json::array({a[0].str(), a[1].str(), a[2].str()});
}

Json path_json(const PathResult& r) {
  Json j;
  j["found"] = r.found;
  j["exhaustive"] = r.exhaustive;
  j["nodes_explored"] = r.nodes;
  j["order"] = r.order;
  return j;
}

Tri default_master() { return {pt(0, 0), pt(4, 0), pt(1, 2)}; }

struct Args {
  // construct
  std::string kind, master_file, out;
  int n = 2;
  long r = 0, p = 0, q = 0, l = 1, m = 2;
  bool refine = false;
  // shared
  std::string input;
  bool reptiling = false;
  long long budget = 1000000;
  long long max_tilings = 100000;
  std::string outer;
  std::vector<std::string> inner;
  // angles
  std::string angles, target = "full", obtuse;
  int family = 0, mm = 0, k = 0, bound = 10;
  // curve / render
  std::string name, eval, curve_input, save;
  bool check = false, want_polyline = false, glyphs = false, no_curve = false;
  int depth = 1, width = 600;
};

int run_construct(const Args& a, std::ostream& out) {
  Tri master = default_master();
  std::string digest;
  if (!a.master_file.empty()) {
    master = load_tiling(a.master_file).master;
    digest = file_digest(a.master_file);
  }
  std::ostringstream params;
  params << a.kind << " n=" << a.n << " r=" << a.r << " p=" << a.p << " q=" << a.q << " l=" << a.l << " m=" << a.m
         << " refine=" << a.refine;
  if (digest.empty()) digest = sha256_hex(params.str());
  Tiling t;
  if (a.kind == "trivial") {
    t = trivial_reptiling(master, a.n);
  } else if (a.kind == "trivial-gentile") {
    t = trivial_gentiling(master, static_cast<int>(a.r));
  } else if (a.kind == "rhombus-flip") {
    if (a.master_file.empty()) master = master_ratio(a.p, a.q);
    t = rhombus_flip(master, a.p, a.q, a.n);
  } else if (a.kind == "corner-split") {
    SplitParams s{a.p, a.r, a.q > 0 ? std::optional<long>(a.q) : std::nullopt};
    t = corner_split(s, a.refine);
  } else if (a.kind == "right2") {
    if (a.master_file.empty()) master = master_right_legs(a.l, a.m);
    t = right_2gentiling(master);
  } else if (a.kind == "snover") {
    t = snover_reptiling(a.l, a.m);
  } else if (a.kind == "kaiser5") {
    t = kaiser_5gentiling();
  } else if (a.kind == "rep3") {
    t = rep3_306090();
  } else if (a.kind == "sierpinski") {
    t = sierpinski_split();
  } else {
    throw Error(Errc::InvalidArgument, "unknown kind '" + a.kind + "'");
  }
  std::string bytes = dump(tiling_to_json(t));
  write_file(a.out, bytes);
  Json j = report("construct", digest);
  j["kind"] = a.kind;
  j["tiles"] = t.size();
  j["radicand"] = t.radicand.str();
  j["out"] = a.out;
  j["output_digest"] = sha256_hex(bytes);
  out << dump(j);
  return kOk;
}

Json validation_json(const ValidationReport& v) {
  Json j;
  j["ok"] = v.ok;
  j["r"] = v.tile_count;
  Json vs = Json::array();
  for (const auto& x : v.violations) {
    Json e;
    e["kind"] = violation_name(x.kind);
    e["tile_a"] = x.tile_a;
    e["tile_b"] = x.tile_b;
    e["count"] = x.count;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

int run_validate(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  ValidationReport v = a.reptiling ? validate_reptiling(t) : validate_gentiling(t);
  Json j = report("validate", file_digest(a.input));
  j["mode"] = a.reptiling ? "reptiling" : "gentiling";
  j.update(validation_json(v));
  out << dump(j);
  return v.ok ? kOk : kNegative;
}

int run_graph(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  ValidationReport v = validate_gentiling(t);
  if (!v.ok) throw Error(Errc::PreconditionFailed, "graph needs a valid gentiling");
  TilingGraph g = build_graph(t);
  auto cf = detect_caps_fans(t, g);
  Json j = report("graph", file_digest(a.input));
  j["r"] = t.size();
  j["f"] = g.f;
  j["h"] = g.h;
  j["euler"] = check_euler(g, static_cast<int>(t.size()));
  j["hanging"] = g.hanging_count();
  j["shape"] = shape_name(g.classes.shape);
  j["corners"] = Json::array({cf[0].str(), cf[1].str(), cf[2].str()});
  j["trivial"] = is_trivial_tiling(t);
  auto rr = side_ratio_rationality(t);
  Json ratios = Json::array();
  for (const auto& p : rr.pairs) {
    Json e;
    e["sides"] = Json::array({p.i, p.j});
    e["rational"] = p.rational;
    if (p.rational) e["ratio"] = p.ratio.str();
    ratios.push_back(std::move(e));
  }
  j["ratios"] = std::move(ratios);
  j["rational_triangle"] = rr.triangle_rational;
  if (!a.out.empty()) {
    Json gj;
    gj["version"] = kVersion;
    gj["radicand"] = t.radicand.str();
    gj["angle_classes"] = g.classes.labels;
    Json vs = Json::array();
    for (const auto& x : g.vertices) {
      Json e;
      e["point"] = point_to_json(x.p, t.radicand);
      e["class"] = vertex_class_name(x.cls);
      e["hanging"] = x.hanging;
      e["edge_adjacency"] = x.edge_adjacency;
      Json z;
      for (std::size_t c = 0; c < g.classes.labels.size(); ++c) z[g.classes.labels[c]] = x.zeta[c];
      e["zeta"] = std::move(z);
      vs.push_back(std::move(e));
    }
    gj["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& [u, w] : g.edges) es.push_back(Json::array({u, w}));
    gj["edges"] = std::move(es);
    gj["f"] = g.f;
    gj["h"] = g.h;
    write_file(a.out, dump(gj));
    j["out"] = a.out;
  }
  out << dump(j);
  return kOk;
}

int run_audit(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  TilingGraph g = build_graph(t);
  AuditReport r = audit_vertex_degrees(t, g);
  Json j = report("audit", file_digest(a.input));
  j["shape"] = shape_name(r.shape);
  j["declined"] = r.declined;
  if (r.declined) j["reason"] = r.reason;
  j["ok"] = r.ok;
  Json fs = Json::array();
  for (const auto& f : r.failures) {
    Json e;
    e["vertex"] = f.vertex;
    e["where"] = f.where;
    e["found"] = f.found;
    e["expected"] = f.expected;
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  out << dump(j);
  return r.ok ? kOk : kNegative;
}

int run_dual(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  DualGraph d = build_dual(t);
  Json dj;
  dj["version"] = kVersion;
  dj["nodes"] = d.n;
  dj["adjacency"] = d.adj;
  std::string bytes = dump(dj);
  if (!a.out.empty()) write_file(a.out, bytes);
  Json j = report("dual", file_digest(a.input));
  j["nodes"] = d.n;
  j["edges"] = d.edges.size();
  if (a.out.empty()) j["adjacency"] = d.adj;
  else j["out"] = a.out;
  out << dump(j);
  return kOk;
}

int run_hampath(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  SearchBudget b{a.budget, a.max_tilings};
  PathResult r = hamiltonian_path(build_dual(t), b);
  Json j = report("hampath", file_digest(a.input));
  j.update(path_json(r));
  out << dump(j);
  return r.found ? kOk : kNegative;
}

int run_conforming(const Args& a, std::ostream& out) {
  Tiling outer = load_tiling(a.outer);
  std::vector<Tiling> inner;
  std::string digests = read_file(a.outer);
  for (const auto& f : a.inner) {
    inner.push_back(load_tiling(f));
    digests += read_file(f);
  }
  if (inner.empty()) inner.push_back(outer);
  TwoLevelTiling t2 = two_level(outer, inner);
  ValidationReport v = validate_reptiling(t2.atomic);
  SearchBudget b{a.budget, a.max_tilings};
  PathResult r = conforming_hamiltonian_path(t2, b);
  Json j = report("conforming", sha256_hex(digests));
  j["atomic_tiles"] = t2.atomic.size();
  j["atomic_valid"] = v.ok;
  j.update(path_json(r));
  out << dump(j);
  return r.found ? kOk : kNegative;
}

int run_enumerate(const Args& a, std::ostream& out) {
  Tiling src = load_tiling(a.input);
  SearchBudget b{a.budget, a.max_tilings};
  EnumerationResult r = enumerate_reptilings(src.master, a.n, b);
  Json manifest = report("enumerate", file_digest(a.input));
  manifest["n"] = a.n;
  manifest["count"] = r.tilings.size();
  manifest["exhaustive"] = r.exhaustive;
  manifest["nodes"] = r.nodes;
  manifest["unrepresentable"] = r.unrepresentable;
  Json files = Json::array();
  if (!a.out.empty()) std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < r.tilings.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "tiling_%04zu.json", i);
    std::string bytes = dump(tiling_to_json(r.tilings[i]));
    if (!a.out.empty()) write_file((std::filesystem::path(a.out) / name).string(), bytes);
    Json e;
    e["file"] = name;
    e["trivial"] = is_trivial_tiling(r.tilings[i]);
    e["digest"] = sha256_hex(bytes);
    files.push_back(std::move(e));
  }
  manifest["tilings"] = std::move(files);
  if (!a.out.empty()) write_file((std::filesystem::path(a.out) / "manifest.json").string(), dump(manifest));
  out << dump(manifest);
  return kOk;
}

int run_solve_angles(const Args& a, std::ostream& out) {
  AngleSpec spec;
  std::string desc;
  if (a.family > 0) {
    spec = AngleSpec::family(a.family);
    desc = "family k=" + std::to_string(a.family);
  } else if (a.mm > 0) {
    spec = AngleSpec::two_pi_over_m(a.mm, a.k);
    desc = "2pi/m m=" + std::to_string(a.mm) + " k=" + std::to_string(a.k);
  } else if (!a.angles.empty()) {
    auto v = parse_angles(a.angles);
    spec = AngleSpec::rational_pi(v[0], v[1], v[2]);
    desc = a.angles;
  } else {
    throw Error(Errc::InvalidArgument, "give --angles, --family or --m");
  }
  if (a.target != "full" && a.target != "half") throw Error(Errc::InvalidArgument, "target must be full or half");
  Target target = a.target == "full" ? Target::Full : Target::Half;
  auto sigs = vertex_signatures(spec, target);
  Json j = report("solve-angles", sha256_hex(desc + " " + a.target));
  j["spec"] = desc;
  j["target"] = a.target;
  Json list = Json::array();
  for (const auto& s : sigs) list.push_back(Json::array({s.da, s.db, s.dc}));
  j["count"] = sigs.size();
  j["signatures"] = std::move(list);
  out << dump(j);
  return kOk;
}

int run_split_candidates(const Args& a, std::ostream& out) {
  Json j = report("split-candidates", sha256_hex("k=" + std::to_string(a.k) + " obtuse=" + a.obtuse));
  j["k"] = a.k;
  if (!a.obtuse.empty()) {
    ObtuseVerdict v = obtuse_split_check(parse_angles(a.obtuse), a.k);
    j["angles"] = a.obtuse;
    j["declined"] = v.declined;
    if (v.declined) j["reason"] = v.reason;
    j["impossible"] = v.impossible;
    if (v.impossible) j["limiting"] = v.limiting;
    j["corners"] = v.corner;
    out << dump(j);
    return v.impossible ? kOk : kNegative;
  }
  Json list = Json::array();
  for (const auto& c : splitting_candidates(a.k)) list.push_back(angles_json(c));
  j["candidates"] = std::move(list);
  out << dump(j);
  return kOk;
}

int run_side_relations(const Args& a, std::ostream& out) {
  Tiling t = load_tiling(a.input);
  auto rel = side_relation_search(t.master, a.bound);
  Json j = report("side-relations", file_digest(a.input));
  j["bound"] = a.bound;
  Json list = Json::array();
  for (const auto& r : rel) {
    Json e;
    e["lhs_side"] = r.lhs;
    e["lambda"] = r.lambda;
    e["mu"] = r.mu;
    e["nu"] = r.nu;
    list.push_back(std::move(e));
  }
  j["relations"] = std::move(list);
  out << dump(j);
  return kOk;
}

CurveRule load_rule(const Args& a, std::string* digest) {
  if (!a.curve_input.empty() || (!a.input.empty() && a.name.empty())) {
    const std::string& f = a.curve_input.empty() ? a.input : a.curve_input;
    *digest = file_digest(f);
    return load_curve(f);
  }
  if (a.name.empty()) throw Error(Errc::InvalidArgument, "give --name or --input");
  std::optional<Tri> master;
  if (!a.master_file.empty()) {
    master = load_tiling(a.master_file).master;
    *digest = file_digest(a.master_file);
  } else {
    *digest = sha256_hex("curve " + a.name);
  }
  return builtin_curve(a.name, master);
}

Json points_json(const std::vector<Point>& pts, const Rational& d) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(point_to_json(p, d));
  return j;
}

int run_curve(const Args& a, std::ostream& out) {
  std::string digest;
  CurveRule rule = load_rule(a, &digest);
  Json j = report("curve", digest);
  j["name"] = rule.name;
  j["children"] = rule.size();
  int code = kOk;
  EntryExit ee = solve_entry_exit(rule);
  j["entry"] = point_to_json(ee.entry, rule.radicand);
  j["exit"] = point_to_json(ee.exit, rule.radicand);
  Json bps = Json::array();
  for (const auto& b : rule.breakpoints()) bps.push_back(b.str());
  j["breakpoints"] = std::move(bps);
  if (a.check) {
    auto v = validate_gentiling(rule.tiling());
    auto c = check_continuity(rule);
    bool measure = check_measure(rule);
    Json cj;
    cj["gentiling"] = v.ok;
    cj["continuity"] = c.ok;
    cj["failing_junctions"] = c.failing;
    cj["measure"] = measure;
    bool face_ok = false;
    if (c.ok) {
      auto f = check_face_continuity(rule, a.depth);
      face_ok = f.ok;
      cj["face_continuity"] = f.ok;
      cj["checked_depth"] = f.checked_depth;
      if (!f.ok) cj["first_failure"] = Json::array({f.level, f.index});
    } else {
      cj["face_continuity"] = nullptr;
    }
    cj["depth"] = a.depth;
    j["check"] = std::move(cj);
    if (!(v.ok && c.ok && measure && face_ok)) code = kNegative;
  }
  if (!a.eval.empty()) {
    Rational t = Rational::parse(a.eval);
    EvalResult e = evaluate(rule, t, a.depth);
    Json ej;
    ej["t"] = t.str();
    ej["depth"] = a.depth;
    ej["point"] = point_to_json(e.point, rule.radicand);
    ej["tile"] = tri_to_json(e.tile.tile, rule.radicand);
    ej["path"] = e.tile.path;
    j["eval"] = std::move(ej);
  }
  if (a.want_polyline) {
    Json pj;
    pj["depth"] = a.depth;
    pj["radicand"] = rule.radicand.str();
    pj["polyline"] = points_json(polyline(rule, a.depth), rule.radicand);
    pj["junctions"] = points_json(junction_points(rule, a.depth), rule.radicand);
    if (!a.out.empty()) {
      write_file(a.out, dump(pj));
      j["out"] = a.out;
    } else {
      j["polyline"] = std::move(pj);
    }
  }
  if (!a.save.empty()) {
    save_curve(a.save, rule);
    j["saved"] = a.save;
  }
  out << dump(j);
  return code;
}

int run_render(const Args& a, std::ostream& out) {
  RenderOptions o;
  o.width_px = a.width;
  o.depth = a.depth;
  o.show_R_glyphs = a.glyphs;
  o.show_order_curve = !a.no_curve;
  std::string svg, digest;
  if (!a.name.empty() || !a.curve_input.empty()) {
    CurveRule rule = load_rule(a, &digest);
    svg = render_curve(rule, o);
  } else {
    if (a.input.empty()) throw Error(Errc::InvalidArgument, "give --input, --name or --curve-input");
    svg = render_tiling(load_tiling(a.input), o);
    digest = file_digest(a.input);
  }
  write_file(a.out, svg);
  Json j = report("render", digest);
  j["out"] = a.out;
  j["svg_digest"] = sha256_hex(svg);
  out << dump(j);
  return kOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reptiling, gentiling and space-filling-curve toolkit", "gentile"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Args a;

  auto* construct = app.add_subcommand("construct", "build a tiling");
  construct->add_option("--kind", a.kind, "trivial|trivial-gentile|rhombus-flip|corner-split|right2|snover|kaiser5|rep3|sierpinski")
      ->required();
  construct->add_option("--n", a.n, "grid size");
  construct->add_option("--r", a.r, "tile count (trivial-gentile) or r (corner-split)");
  construct->add_option("--p", a.p);
  construct->add_option("--q", a.q);
  construct->add_option("--l", a.l, "leg / l");
  construct->add_option("--m", a.m, "leg / m");
  construct->add_flag("--refine", a.refine, "refine corner-split into a reptiling");
  construct->add_option("--master", a.master_file, "tiling file whose master is used");
  construct->add_option("--out", a.out)->required();

  auto* validate = app.add_subcommand("validate", "validate a tiling");
  validate->add_option("--input", a.input)->required();
  validate->add_flag("--reptiling", a.reptiling);

  auto* graph = app.add_subcommand("graph", "tiling graph, Euler identity, caps and fans");
  graph->add_option("--input", a.input)->required();
  graph->add_option("--out", a.out);

  auto* audit = app.add_subcommand("audit", "vertex degree audit");
  audit->add_option("--input", a.input)->required();

  auto* dual = app.add_subcommand("dual", "dual graph");
  dual->add_option("--input", a.input)->required();
  dual->add_option("--out", a.out);

  auto* hampath = app.add_subcommand("hampath", "Hamiltonian path in the dual");
  hampath->add_option("--input", a.input)->required();
  hampath->add_option("--budget", a.budget);

  auto* conforming = app.add_subcommand("conforming", "conforming Hamiltonian path of a two-level reptiling");
  conforming->add_option("--outer", a.outer)->required();
  conforming->add_option("--inner", a.inner, "one shared inner tiling or one per outer tile");
  conforming->add_option("--budget", a.budget);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate n^2-reptilings");
  enumerate->add_option("--input", a.input)->required();
  enumerate->add_option("--n", a.n)->required();
  enumerate->add_option("--max-nodes", a.budget);
  enumerate->add_option("--max-tilings", a.max_tilings);
  enumerate->add_option("--out", a.out);

  auto* solve = app.add_subcommand("solve-angles", "vertex angle signatures");
  solve->add_option("--angles", a.angles, "three fractions of pi, e.g. 2/13,5/13,6/13");
  solve->add_option("--family", a.family, "alpha, k alpha, pi - (k+1) alpha");
  solve->add_option("--m", a.mm, "alpha = 2pi/m");
  solve->add_option("--k", a.k);
  solve->add_option("--target", a.target, "full|half");

  auto* split = app.add_subcommand("split-candidates", "acute k-splitting candidates");
  split->add_option("--k", a.k)->required();
  split->add_option("--obtuse", a.obtuse, "check an obtuse triangle instead (fractions of pi)");

  auto* side = app.add_subcommand("side-relations", "integer side-length relations");
  side->add_option("--input", a.input)->required();
  side->add_option("--bound", a.bound);

  auto* curve = app.add_subcommand("curve", "space-filling curve rules");
  curve->add_option("--name", a.name, "sierpinski|rep3|polya|kaiser5");
  curve->add_option("--input", a.curve_input, "curve rule file");
  curve->add_option("--master", a.master_file, "master for polya");
  curve->add_flag("--check", a.check);
  curve->add_option("--depth", a.depth);
  curve->add_option("--eval", a.eval, "parameter t in [0,1)");
  curve->add_flag("--polyline", a.want_polyline);
  curve->add_option("--out", a.out);
  curve->add_option("--save", a.save, "write the rule file");

  auto* render = app.add_subcommand("render", "SVG of a tiling or curve");
  render->add_option("--input", a.input, "tiling file");
  render->add_option("--name", a.name, "built-in curve");
  render->add_option("--curve-input", a.curve_input, "curve rule file");
  render->add_option("--master", a.master_file, "master for polya");
  render->add_option("--depth", a.depth);
  render->add_option("--width", a.width);
  render->add_flag("--glyphs", a.glyphs);
  render->add_flag("--no-curve", a.no_curve);
  render->add_option("--out", a.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return run_construct(a, out);
    if (*validate) return run_validate(a, out);
    if (*graph) return run_graph(a, out);
    if (*audit) return run_audit(a, out);
    if (*dual) return run_dual(a, out);
    if (*hampath) return run_hampath(a, out);
    if (*conforming) return run_conforming(a, out);
    if (*enumerate) return run_enumerate(a, out);
    if (*solve) return run_solve_angles(a, out);
    if (*split) return run_split_candidates(a, out);
    if (*side) return run_side_relations(a, out);
    if (*curve) return run_curve(a, out);
    if (*render) return run_render(a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gt
