#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "gentile/constructions.hpp"
#include "gentile/dual.hpp"
#include "gentile/error.hpp"
#include "gentile/sfc.hpp"

using namespace gt;

namespace {

// Two tile sides overlap in a segment of positive length.
bool sides_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
  Point u = b - a;
  if (cross(u, c - a).sign() != 0 || cross(u, d - a).sign() != 0) return false;
  QuadScalar len = dot(u, u), tc = dot(c - a, u), td = dot(d - a, u);
  QuadScalar lo = std::max(QuadScalar(0), std::min(tc, td));
  QuadScalar hi = std::min(len, std::max(tc, td));
  return lo < hi;
}

bool touch_along_side(const Tri& s, const Tri& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (sides_overlap(s[i], s[(i + 1) % 3], t[j], t[(j + 1) % 3])) return true;
  return false;
}

// First Hamiltonian path in lexicographic order, by trying permutations.
std::optional<std::vector<int>> brute_path(const DualGraph& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

// Conforming path by trying every group order and every order inside groups.
bool brute_conforming(const TwoLevelTiling& t2) {
  DualGraph d = build_dual(t2.atomic);
  int r = static_cast<int>(t2.outer.size());
  std::vector<std::vector<int>> groups(r);
  for (std::size_t k = 0; k < t2.membership.size(); ++k) groups[t2.membership[k]].push_back(static_cast<int>(k));
  // Per group: every (first, last) pair with a Hamiltonian path of the group.
  std::vector<std::vector<std::pair<int, int>>> ends(r);
  for (int gi = 0; gi < r; ++gi) {
    auto p = groups[gi];
    std::sort(p.begin(), p.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = d.adjacent(p[i], p[i + 1]);
      if (ok) ends[gi].push_back({p.front(), p.back()});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  do {
    // reachable exits of the current group
    std::vector<int> exits{-1};
    for (int gi : order) {
      std::vector<int> next;
      for (auto [first, last] : ends[gi]) {
        bool reach = false;
        for (int e : exits) reach = reach || e < 0 || d.adjacent(e, first);
        if (reach && std::find(next.begin(), next.end(), last) == next.end()) next.push_back(last);
      }
      exits = next;
      if (exits.empty()) break;
    }
    if (!exits.empty()) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::vector<corpus::Named> small_tilings() {
  std::vector<corpus::Named> out;
  for (auto& c : corpus::constructions())
    if (c.tiling.size() <= 9) out.push_back(std::move(c));
  out.push_back({"equilateral n=2", trivial_reptiling(master_equilateral(), 2)});
  out.push_back({"equilateral n=3", trivial_reptiling(master_equilateral(), 3)});
  out.push_back({"sierpinski", sierpinski_split()});
  out.push_back({"right2", right_2gentiling(master_right_legs(1, 2))});
  return out;
}

}  // namespace

TEST(Dual, AdjacencyMatchesSideOverlap) {
  for (const auto& [name, t] : corpus::constructions()) {
    if (t.size() > 60) continue;
    SCOPED_TRACE(name);
    DualGraph d = build_dual(t);
    ASSERT_EQ(d.n, static_cast<int>(t.size()));
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        EXPECT_EQ(d.adjacent(i, j), i != j && touch_along_side(t.tiles[i], t.tiles[j])) << i << "," << j;
  }
}

TEST(DualProperty, SymmetricIrreflexiveNonEmpty) {
  for (const auto& [name, t] : corpus::constructions()) {
    SCOPED_TRACE(name);
    DualGraph d = build_dual(t);
    EXPECT_FALSE(d.edges.empty());
    for (int i = 0; i < d.n; ++i) {
      EXPECT_FALSE(d.adjacent(i, i));
      EXPECT_TRUE(std::is_sorted(d.adj[i].begin(), d.adj[i].end()));
      for (int j : d.adj[i]) EXPECT_TRUE(d.adjacent(j, i));
    }
    for (auto [a, b] : d.edges) EXPECT_LT(a, b);
  }
}

TEST(HamiltonianProperty, AgreesWithPermutationSearch) {
  for (const auto& [name, t] : small_tilings()) {
    SCOPED_TRACE(name);
    DualGraph d = build_dual(t);
    auto r = hamiltonian_path(d, SearchBudget{});
    auto b = brute_path(d);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.found, b.has_value());
    if (b) {
      EXPECT_EQ(r.order, *b);
    }
  }
}

TEST(HamiltonianProperty, FoundPathsVerify) {
  for (const auto& [name, t] : corpus::constructions()) {
    SCOPED_TRACE(name);
    DualGraph d = build_dual(t);
    auto r = hamiltonian_path(d, SearchBudget{200000, 1});
    if (r.found) {
      EXPECT_TRUE(is_hamiltonian_path(d, r.order));
    }
  }
}

TEST(Hamiltonian, EquilateralGrids) {
  auto two = hamiltonian_path(build_dual(trivial_reptiling(master_equilateral(), 2)), SearchBudget{});
  EXPECT_FALSE(two.found);
  EXPECT_TRUE(two.exhaustive);
  // Six upward cells against three downward ones, and cells of the same kind
  // only share points, so no path alternates through all nine.
  auto three = hamiltonian_path(build_dual(trivial_reptiling(master_equilateral(), 3)), SearchBudget{});
  EXPECT_FALSE(three.found);
  EXPECT_TRUE(three.exhaustive);
}

TEST(Hamiltonian, BudgetReportsNonExhaustive) {
  auto r = hamiltonian_path(build_dual(trivial_reptiling(master_equilateral(), 5)), SearchBudget{3, 1});
  EXPECT_FALSE(r.found);
  EXPECT_FALSE(r.exhaustive);
}

TEST(Hamiltonian, RejectsBadOrders) {
  DualGraph d = build_dual(rep3_306090());
  EXPECT_FALSE(is_hamiltonian_path(d, {0, 1}));
  EXPECT_FALSE(is_hamiltonian_path(d, {0, 0, 1}));
}

TEST(TwoLevel, AtomsAreAValidReptiling) {
  for (const auto& t : {sierpinski_split(), rep3_306090(), trivial_reptiling(master_equilateral(), 2)}) {
    TwoLevelTiling t2 = two_level(t, {t});
    EXPECT_EQ(t2.atomic.size(), t.size() * t.size());
    EXPECT_TRUE(validate_reptiling(t2.atomic).ok);
    for (std::size_t k = 0; k < t2.atomic.size(); ++k)
      EXPECT_TRUE(triangle_in_triangle(t2.atomic.tiles[k], t2.outer.tiles[t2.membership[k]]));
  }
}

TEST(TwoLevel, MismatchedCountsRejected) {
  EXPECT_THROW(two_level(rep3_306090(), {sierpinski_split()}), Error);
  EXPECT_THROW(two_level(rep3_306090(), {rep3_306090(), rep3_306090()}), Error);
}

TEST(ConformingProperty, AgreesWithBruteForce) {
  std::vector<std::pair<std::string, Tiling>> cases{
      {"sierpinski", sierpinski_split()},
      {"rep3", rep3_306090()},
      {"equilateral n=2", trivial_reptiling(master_equilateral(), 2)},
      {"scalene n=2", trivial_reptiling(corpus::scalene_master(), 2)},
      {"right2", right_2gentiling(master_right_legs(1, 1))},
  };
  for (const auto& [name, t] : cases) {
    SCOPED_TRACE(name);
    TwoLevelTiling t2 = two_level(t, {t});
    auto r = conforming_hamiltonian_path(t2, SearchBudget{});
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.found, brute_conforming(t2));
    if (r.found) {
      EXPECT_TRUE(is_conforming(t2, r.order));
      EXPECT_TRUE(hamiltonian_path(build_dual(t2.atomic), SearchBudget{}).found);
    }
  }
}

TEST(Conforming, KnownInstances) {
  auto eq = trivial_reptiling(master_equilateral(), 2);
  auto none = conforming_hamiltonian_path(two_level(eq, {eq}), SearchBudget{});
  EXPECT_FALSE(none.found);
  EXPECT_TRUE(none.exhaustive);
  for (const auto& t : {sierpinski_split(), rep3_306090()}) {
    auto r = conforming_hamiltonian_path(two_level(t, {t}), SearchBudget{});
    EXPECT_TRUE(r.found);
  }
}

TEST(Conforming, MixedInnerTilings) {
  // Right isosceles grid whose cells alternate between the grid refinement
  // and the twice-halved one.
  CurveRule halves = builtin_curve("sierpinski");
  Tiling split;
  split.master = halves.master;
  for (const auto& e : expand(halves, 2)) split.tiles.push_back(e.tile);
  Tiling grid = trivial_reptiling(halves.master, 2);
  TwoLevelTiling t2 = two_level(grid, {grid, split, grid, split});
  EXPECT_TRUE(validate_reptiling(t2.atomic).ok);
  auto r = conforming_hamiltonian_path(t2, SearchBudget{});
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.found, brute_conforming(t2));
  if (r.found) {
    EXPECT_TRUE(is_conforming(t2, r.order));
  }
}

TEST(CrossModule, FaceContinuousOrderIsDualPath) {
  for (const auto& name : builtin_curve_names()) {
    CurveRule rule = builtin_curve(name);
    for (int k = 1; k <= 4; ++k) {
      auto tiles = expand(rule, k);
      Tiling t;
      t.master = rule.master;
      for (const auto& e : tiles) t.tiles.push_back(e.tile);
      std::vector<int> order(tiles.size());
      std::iota(order.begin(), order.end(), 0);
      EXPECT_TRUE(is_hamiltonian_path(build_dual(t), order)) << name << " depth " << k;
    }
  }
}

TEST(Dual, SmallGridShapes) {
  DualGraph star = build_dual(trivial_reptiling(master_equilateral(), 2));
  std::vector<std::size_t> deg;
  for (const auto& a : star.adj) deg.push_back(a.size());
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<std::size_t>{1, 1, 1, 3}));
  EXPECT_EQ(star.edges.size(), 3u);

  DualGraph halves = build_dual(sierpinski_split());
  EXPECT_EQ(halves.edges, (std::vector<std::pair<int, int>>{{0, 1}}));

  // Each of the three downward cells touches three upward ones.
  DualGraph three = build_dual(trivial_reptiling(master_equilateral(), 3));
  EXPECT_EQ(three.n, 9);
  EXPECT_EQ(three.edges.size(), 9u);
  int hubs = 0;
  for (const auto& a : three.adj) hubs += a.size() == 3;
  EXPECT_EQ(hubs, 3);
}

TEST(TwoLevel, GridsCompose) {
  Tiling g2 = trivial_reptiling(corpus::scalene_master(), 2);
  TwoLevelTiling t2 = two_level(g2, {g2});
  EXPECT_EQ(t2.atomic.size(), 16u);
  EXPECT_TRUE(same_tile_set(t2.atomic, trivial_reptiling(corpus::scalene_master(), 4)));
  EXPECT_EQ(two_level(sierpinski_split(), {sierpinski_split()}).atomic.size(), 4u);
}

TEST(TwoLevel, OneRefinedCellIsNotGloballyTrivial) {
  CurveRule halves = builtin_curve("sierpinski");
  Tiling split;
  split.master = halves.master;
  for (const auto& e : expand(halves, 2)) split.tiles.push_back(e.tile);
  Tiling grid = trivial_reptiling(halves.master, 2);
  TwoLevelTiling t2 = two_level(grid, {split, grid, grid, grid});
  EXPECT_EQ(t2.atomic.size(), 16u);
  EXPECT_TRUE(validate_reptiling(t2.atomic).ok);
  EXPECT_FALSE(is_trivial_tiling(t2.atomic));
}

namespace {

// Independent check: a path must join the two leaves, and every unvisited
// node other than the far end needs two free neighbours.
struct LeafToLeaf {
  const DualGraph& d;
  std::vector<char> vis;
  int target = -1;

  bool viable(int cur) const {
    std::vector<char> s(vis);
    std::vector<int> q{cur};
    std::size_t reach = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int v : d.adj[q[i]])
        if (!s[v]) s[v] = 1, q.push_back(v), ++reach;
    if (reach != static_cast<std::size_t>(std::count(vis.begin(), vis.end(), 0))) return false;
    for (int i = 0; i < d.n; ++i) {
      if (vis[i] || i == target) continue;
      int free = 0;
      for (int v : d.adj[i]) free += !vis[v] || v == cur;
      if (free < 2) return false;
    }
    return true;
  }

  bool run(int cur, int left) {
    if (left == 0) return cur == target;
    if (!viable(cur)) return false;
    for (int v : d.adj[cur]) {
      if (vis[v] || (v == target && left > 1)) continue;
      vis[v] = 1;
      if (run(v, left - 1)) return true;
      vis[v] = 0;
    }
    return false;
  }
};

}  // namespace

TEST(Hamiltonian, LargeCornerSplitUnderBudget) {
  Tiling t = corner_split(SplitParams{4, 5, 6}, true);
  ASSERT_EQ(t.size(), 169u);
  DualGraph d = build_dual(t);
  auto r = hamiltonian_path(d, SearchBudget{200000, 1});
  if (r.found) {
    EXPECT_TRUE(is_hamiltonian_path(d, r.order));
    return;
  }
  if (!r.exhaustive) return;
  std::vector<int> leaves;
  for (int i = 0; i < d.n; ++i)
    if (d.adj[i].size() == 1) leaves.push_back(i);
  ASSERT_EQ(leaves.size(), 2u);
  LeafToLeaf o{d, std::vector<char>(d.n, 0), leaves[1]};
  o.vis[leaves[0]] = 1;
  EXPECT_FALSE(o.run(leaves[0], d.n - 1));
}
