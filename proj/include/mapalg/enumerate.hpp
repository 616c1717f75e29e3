#pragma once

#include <cstdint>
#include <vector>

#include "mapalg/simplex_table.hpp"

namespace mapalg {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool parallel = true;
};

/// A pointed map from an EZ set into a table: for every source cell c of
/// dimension n, an element of level n.
using Assignment = std::vector<Index>;

/// Every pointed map source -> target, in lexicographic order of assignments.
/// A node is one candidate tried for one cell; exceeding the budget throws
/// BudgetError. Both variants return identical results.
std::vector<Assignment> enumerate_maps_serial(const SimplicialSet& source, const SimplexTable& target,
                                              std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<Assignment> enumerate_maps_parallel(const SimplicialSet& source, const SimplexTable& target,
                                                std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<Assignment> enumerate_maps(const SimplicialSet& source, const SimplexTable& target,
                                       const EnumerationOptions& options = {});

/// Value of an assignment on an arbitrary simplex of the source.
Index evaluate(const SimplicialSet& source, const SimplexTable& target, const Assignment& f, const Simplex& s);

}  // namespace mapalg
