#pragma once

#include <vector>

#include "gentile/search.hpp"
#include "gentile/tiling.hpp"

namespace gt {

struct EnumerationOptions {
  bool reverse_order = false;  // try placements in the opposite order
};

struct EnumerationResult {
  std::vector<Tiling> tilings;  // canonical, sorted, distinct
  bool exhaustive = false;
  long long nodes = 0;
  // Complete tilings whose coordinates leave Q(sqrt d) of the master; they
  // are counted but cannot be written in the tiling file format.
  long long unrepresentable = 0;
};

// All n^2-reptilings of the master by congruent tiles of scale 1/n. The
// squared side lengths of the master must be rational; the search runs in the
// multi-quadratic field they generate together with the master's radicand.
EnumerationResult enumerate_reptilings(const Tri& master, int n, const SearchBudget& budget,
                                       const EnumerationOptions& opts = {});

}  // namespace gt
