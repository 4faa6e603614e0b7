#pragma once

namespace gt {

// Node and result caps for the backtracking searches. A search that hits a cap
// reports itself as non-exhaustive instead of failing.
struct SearchBudget {
  long long max_nodes = 1000000;
  long long max_tilings = 100000;
};

}  // namespace gt
