#pragma once

#include <utility>
#include <vector>

#include "gentile/search.hpp"
#include "gentile/tiling.hpp"

namespace gt {

// One node per tile; an edge joins tiles whose boundaries share a segment of
// positive length.
struct DualGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;        // ascending
  std::vector<std::pair<int, int>> edges;   // i < j, sorted
  bool adjacent(int i, int j) const;
};

DualGraph build_dual(const Tiling& t);

struct PathResult {
  bool found = false;
  std::vector<int> order;
  bool exhaustive = false;
  long long nodes = 0;
};

// Every node exactly once, consecutive nodes adjacent.
bool is_hamiltonian_path(const DualGraph& g, const std::vector<int>& order);

// Backtracking with neighbours in ascending order, so a found path is the
// lexicographically smallest one.
PathResult hamiltonian_path(const DualGraph& g, const SearchBudget& budget);

// An r^2-reptiling whose atoms are grouped by the intermediate tile they
// refine. atomic.tiles[k] lies in outer.tiles[membership[k]].
struct TwoLevelTiling {
  Tiling outer;
  Tiling atomic;
  std::vector<int> membership;
};

// Maps each inner tiling onto its intermediate tile. `inner` holds either one
// shared tiling or one per outer tile; every inner tiling needs r tiles.
TwoLevelTiling two_level(const Tiling& outer, const std::vector<Tiling>& inner);

// Hamiltonian path of the atomic dual that keeps the atoms of each
// intermediate tile consecutive.
PathResult conforming_hamiltonian_path(const TwoLevelTiling& t2, const SearchBudget& budget);
bool is_conforming(const TwoLevelTiling& t2, const std::vector<int>& order);

}  // namespace gt
