#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jchi {

/// Malformed or out-of-domain input: unstable (g, n), invalid graph, bad file.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource caps shared by every enumerating operation.
struct Budget {
  // Largest edge count for which edge subsets may be scanned exhaustively.
  int max_edges = 22;
  // Largest number of edge subsets a single scan may visit.
  std::uint64_t max_subsets = std::uint64_t{1} << 22;
  // Largest number of stable graphs a single enumeration may produce.
  std::uint64_t max_graphs = 50'000'000;

  /// Throws BudgetExceeded unless 2^edges subsets fit both caps.
  void require_subsets(int edges, const char* what) const;
};

}  // namespace jchi
