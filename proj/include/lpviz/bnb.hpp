#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpviz/errors.hpp"
#include "lpviz/geometry.hpp"
#include "lpviz/simplex.hpp"

namespace lpviz {

enum class BoundSense { at_most, at_least };

struct VariableBound {
  VarId var = 0;
  BoundSense sense = BoundSense::at_most;
  Integer value;

  friend bool operator==(const VariableBound&, const VariableBound&) = default;
};

/// e.g. "x2 <= 1"
std::string format_bound(const VariableBound& bound, const LinearProgram& lp);

enum class NodeStatus { branched, integral, pruned_by_bound, infeasible };

std::string_view to_string(NodeStatus status);
std::optional<NodeStatus> parse_node_status(std::string_view name);

enum class BranchRule { most_fractional, lowest_index };

struct BnbNode {
  int id = 0;
  std::optional<int> parent;
  std::vector<VariableBound> added_bounds;
  /// Set when this node was split: (x_j <= floor v, x_j >= ceil v).
  std::optional<std::pair<VariableBound, VariableBound>> branch_pair;
  LinearProgram lp;
  SimplexTrace trace;
  std::optional<Polytope> polytope;
  NodeStatus status = NodeStatus::infeasible;
  /// Incumbent value when this node was explored.
  std::optional<Rational> incumbent_value;
};

struct Incumbent {
  int node = 0;
  Vector solution;
  Rational value;

  friend bool operator==(const Incumbent&, const Incumbent&) = default;
};

struct BnbTrace {
  LinearProgram lp;
  std::vector<BnbNode> nodes;
  std::vector<Incumbent> incumbent_history;
  std::optional<Incumbent> optimal;
};

struct BnbOptions {
  BranchRule branch_rule = BranchRule::most_fractional;
  PivotRule pivot_rule = PivotRule::dantzig;
  std::size_t node_limit = 1000;
  /// Per decision variable; empty means every variable is integer.
  std::vector<bool> integer_vars;
  /// Compute a polytope snapshot for every feasible node (n <= 3 only).
  bool record_polytopes = true;
};

class NodeLimitExceeded : public Error {
 public:
  explicit NodeLimitExceeded(BnbTrace partial)
      : Error("branch and bound node limit exceeded"), partial_(std::move(partial)) {}
  const BnbTrace& partial() const noexcept { return partial_; }

 private:
  BnbTrace partial_;
};

/// Raised when a node relaxation is unbounded or its simplex run does not terminate.
class RelaxationFailure : public Error {
 public:
  using Error::Error;
};

/// Floor and ceiling bounds around a fractional value. Throws NotFractional.
std::pair<VariableBound, VariableBound> branch(VarId var, const Rational& value);

/// Depth-first, floor child first. Nodes are numbered in exploration order;
/// a node is pruned when its relaxation value is <= the incumbent.
BnbTrace branch_and_bound(const LinearProgram& lp, const BnbOptions& options = {});

}  // namespace lpviz
