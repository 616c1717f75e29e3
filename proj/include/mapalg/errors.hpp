#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mapalg {

/// Malformed input: bad face tables, non-composable maps, bad subcomplexes.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation would create cells above the dimension cap of its inputs.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Backtracking exceeded its node budget. Carries the number of complete
/// maps found before the search was abandoned.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t budget, std::uint64_t partial)
      : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                           " nodes exceeded after " + std::to_string(partial) +
                           " complete maps"),
        budget_(budget),
        partial_(partial) {}

  std::uint64_t budget() const { return budget_; }
  std::uint64_t partial_count() const { return partial_; }

 private:
  std::uint64_t budget_;
  std::uint64_t partial_;
};

/// Text input (interchange files, catalog expressions) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mapalg
