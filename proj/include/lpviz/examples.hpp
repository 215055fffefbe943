#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpviz/linear_program.hpp"

namespace lpviz {

struct ExampleEntry {
  std::string name;
  LinearProgram lp;
  std::string notes;
  /// (optimal value, optimal point) under the dantzig rule, when pinned.
  std::optional<std::pair<Rational, Vector>> expected;
};

/// Throws UnknownExample listing the catalog.
const ExampleEntry& example(std::string_view name);

std::span<const ExampleEntry> example_catalog();

/// maximize sum_j 2^(n-j) x_j subject to
///   2 * sum_{j<i} 2^(i-j) x_j + x_i <= 5^i   (i = 1..n)
/// Throws std::invalid_argument for n < 1.
LinearProgram klee_minty(int n);

}  // namespace lpviz
