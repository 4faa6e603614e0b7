#include "gentile/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace gt {

namespace {

struct Box {
  QuadScalar x0, x1, y0, y1;
};

Box box_of(const Tri& t) {
  Box b{t[0].x, t[0].x, t[0].y, t[0].y};
  for (int i = 1; i < 3; ++i) {
    if (t[i].x < b.x0) b.x0 = t[i].x;
    if (t[i].x > b.x1) b.x1 = t[i].x;
    if (t[i].y < b.y0) b.y0 = t[i].y;
    if (t[i].y > b.y1) b.y1 = t[i].y;
  }
  return b;
}

bool boxes_touch(const Box& a, const Box& b) {
  return !(a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0);
}

}  // namespace

bool DualGraph::adjacent(int i, int j) const {
  return std::binary_search(adj[i].begin(), adj[i].end(), j);
}

DualGraph build_dual(const Tiling& t) {
  DualGraph g;
  g.n = static_cast<int>(t.tiles.size());
  g.adj.assign(g.n, {});
  std::vector<Box> boxes;
  boxes.reserve(g.n);
  for (const auto& tile : t.tiles) boxes.push_back(box_of(tile));
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (!boxes_touch(boxes[i], boxes[j])) continue;
      if (triangles_share_edge_piece(t.tiles[i], t.tiles[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        g.edges.emplace_back(i, j);
      }
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool is_hamiltonian_path(const DualGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n) return false;
  std::vector<char> seen(g.n, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
    if (k > 0 && !g.adjacent(order[k - 1], v)) return false;
  }
  return true;
}

namespace {

class HamSearch {
 public:
  HamSearch(const DualGraph& g, const SearchBudget& b) : g_(g), budget_(b), used_(g.n, 0) {}

  PathResult run() {
    PathResult r;
    if (g_.n == 0) {
      r.found = true;
      r.exhaustive = true;
      return r;
    }
    for (int s = 0; s < g_.n && !stopped_; ++s) {
      if (visit(s)) {
        r.found = true;
        r.order = path_;
        break;
      }
    }
    r.exhaustive = r.found || !stopped_;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool visit(int v) {
    if (++nodes_ > budget_.max_nodes) {
      stopped_ = true;
      return false;
    }
    used_[v] = 1;
    path_.push_back(v);
    if (static_cast<int>(path_.size()) == g_.n) return true;
    if (viable(v)) {
      for (int w : g_.adj[v]) {
        if (used_[w]) continue;
        if (visit(w)) return true;
        if (stopped_) break;
      }
    }
    used_[v] = 0;
    path_.pop_back();
    return false;
  }

  // The unvisited nodes must stay connected and reachable from v, and at most
  // one of them may be a dead end (it would have to be the last node).
  bool viable(int v) const {
    int remaining = 0, first = -1, dead_ends = 0;
    for (int u = 0; u < g_.n; ++u) {
      if (used_[u]) continue;
      ++remaining;
      if (first < 0) first = u;
      int deg = 0;
      for (int w : g_.adj[u])
        if (!used_[w] || w == v) ++deg;
      if (deg == 0) return false;
      if (deg == 1) ++dead_ends;
    }
    if (remaining == 0) return true;
    if (remaining > 1 && dead_ends > 1) return false;
    bool touches = false;
    for (int w : g_.adj[v])
      if (!used_[w]) touches = true;
    if (!touches) return false;
    std::vector<char> seen(g_.n, 0);
    std::vector<int> stack{first};
    seen[first] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g_.adj[u]) {
        if (used_[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return reached == remaining;
  }

  const DualGraph& g_;
  SearchBudget budget_;
  std::vector<char> used_;
  std::vector<int> path_;
  long long nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

PathResult hamiltonian_path(const DualGraph& g, const SearchBudget& budget) {
  HamSearch s(g, budget);
  PathResult r = s.run();
  if (r.found && !is_hamiltonian_path(g, r.order)) throw Error(Errc::PreconditionFailed, "internal: bad witness");
  return r;
}

TwoLevelTiling two_level(const Tiling& outer, const std::vector<Tiling>& inner) {
  const std::size_t r = outer.tiles.size();
  if (inner.size() != 1 && inner.size() != r)
    throw Error(Errc::MismatchedTileCounts, "need one shared inner tiling or one per outer tile");
  for (const auto& in : inner)
    if (in.tiles.size() != r) throw Error(Errc::MismatchedTileCounts, "inner tilings must have as many tiles as the outer");
  TwoLevelTiling t2;
  t2.outer = outer;
  t2.atomic.master = outer.master;
  t2.atomic.radicand = outer.radicand;
  for (std::size_t i = 0; i < r; ++i) {
    const Tiling& rule = inner.size() == 1 ? inner[0] : inner[i];
    if (rule.radicand != Rational(1)) t2.atomic.radicand = rule.radicand;
    const Tri& dst = outer.tiles[i];
    std::optional<AffineSimilarity> map;
    for (const auto& p : kPerms) {
      try {
        map = similarity_from_triangles(rule.master, Tri{dst[p[0]], dst[p[1]], dst[p[2]]});
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::NotASimilarity) throw;
      }
    }
    if (!map) throw Error(Errc::NotASimilarity, "inner master not similar to an outer tile");
    for (const auto& tile : rule.tiles) {
      t2.atomic.tiles.push_back(map->apply(tile));
      t2.membership.push_back(static_cast<int>(i));
    }
  }
  return t2;
}

bool is_conforming(const TwoLevelTiling& t2, const std::vector<int>& order) {
  if (!is_hamiltonian_path(build_dual(t2.atomic), order)) return false;
  std::set<int> closed;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int m = t2.membership[order[k]];
    if (k > 0 && t2.membership[order[k - 1]] != m) {
      if (closed.count(m)) return false;
      closed.insert(t2.membership[order[k - 1]]);
    }
    if (closed.count(m)) return false;
  }
  return true;
}

namespace {

constexpr int kMaxInner = 20;

// Which (entry, exit) pairs of a small graph admit a Hamiltonian path, each
// with one witness. Subset dynamic programming per start node.
struct PairTable {
  std::vector<std::pair<int, int>> pairs;  // sorted
  std::map<std::pair<int, int>, std::vector<int>> witness;
};

PairTable pair_table(const std::vector<std::uint32_t>& nbr) {
  const int k = static_cast<int>(nbr.size());
  PairTable t;
  const std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);
  std::vector<std::uint32_t> reach(std::size_t(1) << k);
  for (int s = 0; s < k; ++s) {
    std::fill(reach.begin(), reach.end(), 0u);
    reach[1u << s] = 1u << s;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t ends = reach[mask];
      if (!ends) continue;
      for (int v = 0; v < k; ++v) {
        if (!(ends >> v & 1)) continue;
        std::uint32_t next = nbr[v] & ~mask;
        for (int w = 0; w < k; ++w)
          if (next >> w & 1) reach[mask | (1u << w)] |= 1u << w;
      }
    }
    for (int e = 0; e < k; ++e) {
      if (!(reach[full] >> e & 1)) continue;
      std::vector<int> path{e};
      std::uint32_t mask = full;
      int cur = e;
      while (mask != (1u << s)) {
        std::uint32_t prev = mask & ~(1u << cur);
        int u = 0;
        while (!((reach[prev] >> u & 1) && (nbr[u] >> cur & 1))) ++u;
        path.push_back(u);
        mask = prev;
        cur = u;
      }
      std::reverse(path.begin(), path.end());
      t.pairs.emplace_back(s, e);
      t.witness[{s, e}] = std::move(path);
    }
  }
  std::sort(t.pairs.begin(), t.pairs.end());
  return t;
}

class ConformingSearch {
 public:
  ConformingSearch(const TwoLevelTiling& t2, const SearchBudget& b) : budget_(b) {
    dual_ = build_dual(t2.atomic);
    const int R = static_cast<int>(t2.outer.tiles.size());
    if (R > 64) throw Error(Errc::PreconditionFailed, "conforming search supports at most 64 intermediate tiles");
    atoms_.assign(R, {});
    for (int a = 0; a < static_cast<int>(t2.membership.size()); ++a) atoms_[t2.membership[a]].push_back(a);
    for (int i = 0; i < R; ++i) {
      const auto& at = atoms_[i];
      if (static_cast<int>(at.size()) > kMaxInner)
        throw Error(Errc::PreconditionFailed, "intermediate tile has too many atoms for the pair tables");
      std::vector<std::uint32_t> nbr(at.size(), 0);
      for (std::size_t x = 0; x < at.size(); ++x)
        for (std::size_t y = 0; y < at.size(); ++y)
          if (x != y && dual_.adjacent(at[x], at[y])) nbr[x] |= 1u << y;
      // Tables depend only on the local adjacency pattern.
      auto it = memo_.find(nbr);
      if (it == memo_.end()) it = memo_.emplace(nbr, pair_table(nbr)).first;
      tables_.push_back(&it->second);
    }
  }

  PathResult run() {
    PathResult r;
    if (dfs(0, -1)) {
      r.found = true;
      for (auto [i, pr] : steps_) {
        for (int local : tables_[i]->witness.at(pr)) r.order.push_back(atoms_[i][local]);
      }
    }
    r.exhaustive = r.found || !stopped_;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool dfs(std::uint64_t used, int last_atom) {
    const int R = static_cast<int>(atoms_.size());
    if (static_cast<int>(steps_.size()) == R) return true;
    if (failed_.count({used, last_atom})) return false;
    for (int j = 0; j < R; ++j) {
      if (used >> j & 1) continue;
      for (const auto& pr : tables_[j]->pairs) {
        int entry = atoms_[j][pr.first];
        if (last_atom >= 0 && !dual_.adjacent(last_atom, entry)) continue;
        if (++nodes_ > budget_.max_nodes) {
          stopped_ = true;
          return false;
        }
        steps_.emplace_back(j, pr);
        if (dfs(used | (std::uint64_t(1) << j), atoms_[j][pr.second])) return true;
        steps_.pop_back();
        if (stopped_) return false;
      }
    }
    failed_.insert({used, last_atom});
    return false;
  }

  SearchBudget budget_;
  std::map<std::vector<std::uint32_t>, PairTable> memo_;
  DualGraph dual_;
  std::vector<std::vector<int>> atoms_;
  std::vector<const PairTable*> tables_;
  std::vector<std::pair<int, std::pair<int, int>>> steps_;
  std::set<std::pair<std::uint64_t, int>> failed_;
  long long nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

PathResult conforming_hamiltonian_path(const TwoLevelTiling& t2, const SearchBudget& budget) {
  ConformingSearch s(t2, budget);
  PathResult r = s.run();
  if (r.found && !is_conforming(t2, r.order)) throw Error(Errc::PreconditionFailed, "internal: bad witness");
  return r;
}

}  // namespace gt
