#ifndef POLYDIST_BUDGETS_HPP
#define POLYDIST_BUDGETS_HPP

#include <cstdint>

namespace polydist {

// Enumeration ceilings shared across modules; exceeding one raises
// BudgetExceeded instead of silently grinding.
struct Budgets {
  std::uint64_t points = std::uint64_t(1) << 20;      // set cardinality
  std::uint64_t values = std::uint64_t(1) << 26;      // materialized value sets
  std::uint64_t km_vectors = std::uint64_t(1) << 24;  // coefficient vectors
  std::uint64_t centers = std::uint64_t(1) << 20;     // stage materialization
};

}  // namespace polydist

#endif
