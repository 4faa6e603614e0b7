// Acceptance run: one PASS/FAIL line per criterion. A FAIL whose expectation
// is contradicted by an independent check is reported as such and does not
// change the exit status; any other FAIL does.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gentile/angles.hpp"
#include "gentile/constructions.hpp"
#include "gentile/dual.hpp"
#include "gentile/enumeration.hpp"
#include "gentile/io.hpp"
#include "gentile/render.hpp"
#include "gentile/sfc.hpp"
#include "gentile/tiling.hpp"

using namespace gt;

namespace {

struct Outcome {
  bool pass = true;
  bool confirmed_deviation = false;  // failed, and an independent check shows the expectation cannot hold
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
    pass = pass && ok;
  }
};

std::string point_str(const Point& p) {
  std::ostringstream os;
  os << "(" << p.x << "," << p.y << ")";
  return os.str();
}

Tri scalene() { return {pt(0, 0), pt(4, 0), pt(1, 2)}; }

Outcome euler_suite() {
  Outcome o;
  std::vector<std::pair<std::string, Tiling>> corpus;
  for (int n = 2; n <= 6; ++n) corpus.push_back({"trivial n=" + std::to_string(n), trivial_reptiling(scalene(), n)});
  for (int r : {4, 6, 7, 8, 9}) corpus.push_back({"trivial-gentile r=" + std::to_string(r), trivial_gentiling(scalene(), r)});
  corpus.push_back({"rhombus-flip (3,2,5)", rhombus_flip(master_ratio(3, 2), 3, 2, 5)});
  corpus.push_back({"rhombus-flip (2,1,3)", rhombus_flip(master_ratio(2, 1), 2, 1, 3)});
  corpus.push_back({"snover (1,2)", snover_reptiling(1, 2)});
  corpus.push_back({"snover (2,3)", snover_reptiling(2, 3)});
  corpus.push_back({"rep3", rep3_306090()});
  corpus.push_back({"kaiser5", kaiser_5gentiling()});
  corpus.push_back({"corner-split (4,6,5)", corner_split({4, 5, 6}, true)});
  for (const auto& [name, t] : corpus) {
    TilingGraph g = build_graph(t);
    bool ok = validate_gentiling(t).ok && check_euler(g, static_cast<int>(t.size()));
    o.check(ok, name + " f=" + std::to_string(g.f) + " h=" + std::to_string(g.h) + " r=" + std::to_string(t.size()));
  }
  return o;
}

std::string fans(const Tiling& t) {
  auto cf = detect_caps_fans(t, build_graph(t));
  return cf[0].str() + "/" + cf[1].str() + "/" + cf[2].str();
}

int fan2_corners(const Tiling& t) {
  auto cf = detect_caps_fans(t, build_graph(t));
  int n = 0;
  for (const auto& c : cf) n += c.kind == CornerReport::Fan && c.k == 2;
  return n;
}

Outcome corner_split_counts() {
  Outcome o;
  for (auto [s, expect] : std::vector<std::pair<SplitParams, std::size_t>>{{{4, 5, 6}, 169}, {{9, 16, 15}, 1156}}) {
    Tiling t = corner_split(s, true);
    std::string name = "(p,q,r)=(" + std::to_string(s.p) + "," + std::to_string(*s.q) + "," + std::to_string(s.r) + ")";
    o.check(t.size() == expect, name + " tiles=" + std::to_string(t.size()));
    o.check(validate_reptiling(t).ok, name + " valid reptiling");
    o.check(fan2_corners(t) == 1, name + " corners " + fans(t));
  }
  return o;
}

Outcome non_triviality() {
  Outcome o;
  Tiling t = rhombus_flip(master_ratio(3, 2), 3, 2, 5);
  o.check(validate_reptiling(t).ok, "validate_reptiling");
  o.check(!is_trivial_tiling(t), "is_trivial=false");
  int hanging = build_graph(t).hanging_count();
  o.check(hanging >= 1, "hanging vertices=" + std::to_string(hanging));
  return o;
}

Outcome splitting_replay() {
  Outcome o;
  auto c3 = splitting_candidates(3);
  std::set<std::array<Rational, 3>> got(c3.begin(), c3.end());
  std::set<std::array<Rational, 3>> expect{{Rational(2, 13), Rational(5, 13), Rational(6, 13)},
                                           {Rational(2, 15), Rational(6, 15), Rational(7, 15)}};
  o.check(got == expect && c3.size() == 2, "k=3: " + std::to_string(c3.size()) + " candidates");
  for (int k = 4; k <= 12; ++k) o.check(splitting_candidates(k).empty(), "k=" + std::to_string(k) + " empty");
  return o;
}

bool has_sig(const std::vector<VertexSignature>& v, int a, int b, int c) {
  return std::any_of(v.begin(), v.end(), [&](const VertexSignature& s) { return s.da == a && s.db == b && s.dc == c; });
}

Outcome signature_lists() {
  Outcome o;
  auto s13 = vertex_signatures(AngleSpec::rational_pi(Rational(2, 13), Rational(5, 13), Rational(6, 13)), Target::Full);
  auto s15 = vertex_signatures(AngleSpec::rational_pi(Rational(2, 15), Rational(6, 15), Rational(7, 15)), Target::Full);
  o.check(has_sig(s13, 1, 0, 4), "13-triple has (1,0,4)");
  o.check(has_sig(s13, 0, 4, 1), "13-triple has (0,4,1)");
  o.check(has_sig(s15, 1, 0, 4), "15-triple has (1,0,4)");
  o.check(has_sig(s15, 0, 5, 0), "15-triple has (0,5,0)");
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  auto r2 = enumerate_reptilings(scalene(), 2, SearchBudget{});
  bool only_trivial = r2.tilings.size() == 1 && same_tile_set(r2.tilings[0], trivial_reptiling(scalene(), 2));
  o.check(only_trivial && r2.exhaustive, "scalene n=2: " + std::to_string(r2.tilings.size()) + " tiling(s), exhaustive=" +
                                             (r2.exhaustive ? "true" : "false"));
  auto r3 = enumerate_reptilings(master_ratio(2, 1), 3, SearchBudget{});
  int nontrivial = 0;
  for (const auto& t : r3.tilings) nontrivial += !is_trivial_tiling(t);
  o.check(nontrivial >= 1, "2:1 master n=3: " + std::to_string(nontrivial) + " non-trivial of " +
                               std::to_string(r3.tilings.size()));
  return o;
}

Outcome curve_suite() {
  Outcome o;
  for (const auto& name : builtin_curve_names()) {
    CurveRule r = builtin_curve(name);
    int depth = name == "sierpinski" ? 8 : 5;
    auto f = check_face_continuity(r, depth);
    o.check(check_continuity(r).ok && check_measure(r) && f.ok,
            name + " continuity, measure, face continuity to depth " + std::to_string(depth));
  }
  CurveRule s = builtin_curve("sierpinski");
  CurveRule swapped = s;
  std::swap(swapped.children[0], swapped.children[1]);
  auto c = check_continuity(swapped);
  bool fails_at_1 = !c.ok && std::find(c.failing.begin(), c.failing.end(), 1) != c.failing.end();
  EntryExit ee = solve_entry_exit(swapped);
  o.check(fails_at_1, "swapped Sierpinski order fails at junction 1 (solved entry " + point_str(ee.entry) + ", exit " +
                          point_str(ee.exit) + ", continuity " + (c.ok ? "holds" : "fails") + ")");
  if (!fails_at_1) {
    // The swapped rule's first map fixes (2,0), its last fixes (0,0), and both
    // send the other endpoint to the apex (1,1): the junction is continuous.
    const auto& first = swapped.children[0].map;
    const auto& last = swapped.children[1].map;
    bool independent = first.apply(pt(2, 0)) == pt(2, 0) && last.apply(pt(0, 0)) == pt(0, 0) &&
                       first.apply(pt(0, 0)) == pt(1, 1) && last.apply(pt(2, 0)) == pt(1, 1);
    o.notes.push_back(std::string("independent fixed-point check: swapped rule is ") +
                      (independent ? "continuous, expectation cannot hold" : "inconclusive"));
    o.confirmed_deviation = independent;
  }
  return o;
}

// Hamiltonian path existence by trying every order.
bool brute_force_path(const DualGraph& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Outcome dual_suite() {
  Outcome o;
  Tiling e2 = trivial_reptiling(master_equilateral(), 2);
  Tiling e3 = trivial_reptiling(master_equilateral(), 3);
  auto p2 = hamiltonian_path(build_dual(e2), SearchBudget{});
  o.check(!p2.found && p2.exhaustive, "equilateral n=2: no Hamiltonian path (exhaustive)");
  DualGraph d3 = build_dual(e3);
  auto p3 = hamiltonian_path(d3, SearchBudget{});
  o.check(p3.found, std::string("equilateral n=3: Hamiltonian path ") + (p3.found ? "found" : "not found") +
                        (p3.exhaustive ? " (exhaustive)" : ""));
  auto c2 = conforming_hamiltonian_path(two_level(e2, {e2}), SearchBudget{});
  o.check(!c2.found && c2.exhaustive, "equilateral 2x2 two-level: no conforming path (exhaustive)");
  auto cs = conforming_hamiltonian_path(two_level(sierpinski_split(), {sierpinski_split()}), SearchBudget{});
  o.check(cs.found, "Sierpinski 2x2 two-level: conforming path");
  auto cr = conforming_hamiltonian_path(two_level(rep3_306090(), {rep3_306090()}), SearchBudget{});
  o.check(cr.found, "rep3 3x3 two-level: conforming path");
  if (!p3.found && p3.exhaustive) {
    // Six upward cells, three downward ones; cells of one kind meet only at
    // points, so a path would have to alternate kinds. Confirm by trying all
    // 9! orders.
    int up = 0;
    for (const auto& t : e3.tiles) up += std::count_if(t.begin(), t.end(), [&](const Point& p) {
                                        return p.y == std::min({t[0].y, t[1].y, t[2].y});
                                      }) == 2;
    bool none = !brute_force_path(d3);
    o.notes.push_back("independent check: " + std::to_string(up) + " upward vs " + std::to_string(9 - up) +
                      " downward cells, permutation search finds " + (none ? "no path" : "a path"));
    bool rest = !p2.found && !c2.found && cs.found && cr.found;
    o.confirmed_deviation = none && rest;
  }
  return o;
}

Outcome evaluate_fixed_points() {
  Outcome o;
  CurveRule s = builtin_curve("sierpinski");
  o.check(evaluate(s, Rational(0), 6).point == pt(0, 0), "f(0)=(0,0)");
  o.check(evaluate(s, Rational(1, 2), 6).point == pt(1, 1), "f(1/2)=(1,1)");
  o.check(evaluate(s, Rational(1, 4), 6).point == pt(1, 0), "f(1/4)=(1,0)");
  auto j = junction_points(s, 2);
  std::string list;
  for (const auto& p : j) list += point_str(p);
  o.check(j == std::vector<Point>{pt(0, 0), pt(1, 0), pt(1, 1), pt(2, 0)}, "depth-2 polyline points " + list);
  std::string full;
  for (const auto& p : polyline(s, 2)) full += point_str(p);
  o.notes.push_back("depth-2 traversal chain " + full);
  return o;
}

Outcome round_trip() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gentile_acceptance";
  fs::create_directories(dir);
  auto file = [&](const std::string& n) { return (dir / n).string(); };
  bool tilings = true;
  for (const auto& t : {trivial_reptiling(scalene(), 4), rep3_306090(), kaiser_5gentiling(), corner_split({4, 5, 6}, true),
                        rhombus_flip(master_ratio(3, 2), 3, 2, 5)}) {
    save_tiling(file("a.json"), t);
    save_tiling(file("b.json"), load_tiling(file("a.json")));
    tilings = tilings && read_file(file("a.json")) == read_file(file("b.json"));
  }
  o.check(tilings, "tiling files round-trip bit-exactly");
  bool curves = true;
  for (const auto& name : builtin_curve_names()) {
    save_curve(file("c.json"), builtin_curve(name));
    save_curve(file("d.json"), load_curve(file("c.json")));
    curves = curves && read_file(file("c.json")) == read_file(file("d.json"));
  }
  o.check(curves, "curve files round-trip bit-exactly");
  RenderOptions opts;
  opts.depth = 4;
  opts.show_R_glyphs = true;
  bool svg = true;
  for (const auto& name : builtin_curve_names()) {
    CurveRule r = builtin_curve(name);
    svg = svg && sha256_hex(render_curve(r, opts)) == sha256_hex(render_curve(r, opts));
  }
  Tiling big = corner_split({4, 5, 6}, true);
  svg = svg && render_tiling(big, opts) == render_tiling(big, opts);
  o.check(svg, "SVG bytes identical across two runs");
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"Euler identity suite", 10, euler_suite},
      {"corner-split counts", 60, corner_split_counts},
      {"non-triviality of the rhombus flip", 0, non_triviality},
      {"3-splitting candidates", 1, splitting_replay},
      {"vertex signature lists", 0, signature_lists},
      {"enumeration oracle", 60, enumeration_oracle},
      {"curve suite", 30, curve_suite},
      {"dual and Hamiltonian paths", 30, dual_suite},
      {"evaluate fixed points", 0, evaluate_fixed_points},
      {"round trip and determinism", 0, round_trip},
  };
  int unexplained = 0, confirmed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].limit_s > 0 && s > criteria[i].limit_s) {
      o.check(false, "time limit " + std::to_string(criteria[i].limit_s) + " s exceeded");
      o.confirmed_deviation = false;
    }
    std::printf("%s %2zu %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title, s);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    if (!o.pass) (o.confirmed_deviation ? confirmed : unexplained)++;
  }
  std::printf("summary: %d unexplained failure(s), %d failure(s) with the expectation refuted by an independent check\n",
              unexplained, confirmed);
  return unexplained == 0 ? 0 : 1;
}
