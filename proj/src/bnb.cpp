#include "lpviz/bnb.hpp"

#include <algorithm>

namespace lpviz {

std::string format_bound(const VariableBound& bound, const LinearProgram& lp) {
  return lp.name(bound.var) + (bound.sense == BoundSense::at_most ? " <= " : " >= ") +
         bound.value.str();
}

std::string_view to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::branched: return "branched";
    case NodeStatus::integral: return "integral";
    case NodeStatus::pruned_by_bound: return "pruned_by_bound";
    case NodeStatus::infeasible: return "infeasible";
  }
  return "infeasible";
}

std::optional<NodeStatus> parse_node_status(std::string_view name) {
  for (auto s : {NodeStatus::branched, NodeStatus::integral, NodeStatus::pruned_by_bound,
                 NodeStatus::infeasible}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::pair<VariableBound, VariableBound> branch(VarId var, const Rational& value) {
  if (value.is_integer()) {
    throw NotFractional("cannot branch on x" + std::to_string(var + 1) + " = " + value.to_string() +
                        ": value is integral");
  }
  return {VariableBound{var, BoundSense::at_most, value.floor()},
          VariableBound{var, BoundSense::at_least, value.ceil()}};
}

namespace {

LinearProgram with_bounds(const LinearProgram& base, const std::vector<VariableBound>& bounds) {
  Matrix rows;
  Vector rhs;
  for (const auto& bound : bounds) {
    Vector row(static_cast<std::size_t>(base.n()));
    if (bound.sense == BoundSense::at_most) {
      row[bound.var] = 1;
      rhs.emplace_back(bound.value);
    } else {
      row[bound.var] = -1;
      rhs.emplace_back(Integer(-bound.value));
    }
    rows.push_back(std::move(row));
  }
  return base.with_rows(rows, rhs);
}

/// Distance from `value` to the nearest integer.
Rational fractionality(const Rational& value) {
  Rational down = value - Rational(value.floor());
  Rational up = Rational(value.ceil()) - value;
  return std::min(down, up);
}

std::optional<VarId> pick_branch_variable(const Vector& x, const std::vector<bool>& integer,
                                          BranchRule rule) {
  std::optional<VarId> chosen;
  Rational best;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!integer[j] || x[j].is_integer()) continue;
    if (rule == BranchRule::lowest_index) return static_cast<VarId>(j);
    Rational f = fractionality(x[j]);
    if (!chosen || f > best) {
      chosen = static_cast<VarId>(j);
      best = f;
    }
  }
  return chosen;
}

struct Pending {
  std::optional<int> parent;
  std::vector<VariableBound> bounds;
};

}  // namespace

BnbTrace branch_and_bound(const LinearProgram& lp, const BnbOptions& options) {
  std::vector<bool> integer = options.integer_vars;
  if (integer.empty()) integer.assign(static_cast<std::size_t>(lp.n()), true);
  if (static_cast<int>(integer.size()) != lp.n()) {
    throw DimensionMismatch("integer_vars must have one flag per decision variable");
  }

  BnbTrace out{lp, {}, {}, std::nullopt};
  std::vector<Pending> stack{{std::nullopt, {}}};
  while (!stack.empty()) {
    if (out.nodes.size() == options.node_limit) throw NodeLimitExceeded(std::move(out));
    Pending next = std::move(stack.back());
    stack.pop_back();

    LinearProgram node_lp = with_bounds(lp, next.bounds);
    SimplexTrace trace = simplex_solve(node_lp, options.pivot_rule);
    BnbNode node{static_cast<int>(out.nodes.size()),
                 next.parent,
                 next.bounds,
                 std::nullopt,
                 node_lp,
                 trace,
                 std::nullopt,
                 NodeStatus::infeasible,
                 out.optimal ? std::optional<Rational>(out.optimal->value) : std::nullopt};

    switch (trace.status) {
      case SolveStatus::optimal:
      case SolveStatus::infeasible:
        break;
      case SolveStatus::unbounded:
        throw RelaxationFailure("LP relaxation is unbounded; branch and bound needs a bounded LP");
      case SolveStatus::iteration_limit:
      case SolveStatus::cycling_detected:
        throw RelaxationFailure("simplex did not terminate on a node relaxation (" +
                                std::string(to_string(trace.status)) +
                                "); try the bland pivot rule");
    }

    if (trace.status == SolveStatus::optimal) {
      if (options.record_polytopes && lp.n() <= 3) node.polytope = polytope_of(node_lp);
      const Rational& value = *trace.optimal_value;
      Vector x = *trace.optimal_point();
      if (out.optimal && value <= out.optimal->value) {
        node.status = NodeStatus::pruned_by_bound;
      } else if (auto var = pick_branch_variable(x, integer, options.branch_rule)) {
        node.status = NodeStatus::branched;
        node.branch_pair = branch(*var, x[*var]);
        std::vector<VariableBound> floor_bounds = next.bounds;
        floor_bounds.push_back(node.branch_pair->first);
        std::vector<VariableBound> ceil_bounds = next.bounds;
        ceil_bounds.push_back(node.branch_pair->second);
        // Ceiling is pushed first so the floor child is explored first.
        stack.push_back({node.id, std::move(ceil_bounds)});
        stack.push_back({node.id, std::move(floor_bounds)});
      } else {
        node.status = NodeStatus::integral;
        Incumbent inc{node.id, x, value};
        out.incumbent_history.push_back(inc);
        out.optimal = std::move(inc);
      }
    }
    out.nodes.push_back(std::move(node));
  }
  return out;
}

}  // namespace lpviz
