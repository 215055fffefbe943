#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpviz/linear_program.hpp"

namespace lpviz {

enum class PivotRule { dantzig, bland, greatest_increase };

std::string_view to_string(PivotRule rule);
/// Throws ParseError for unknown names.
PivotRule parse_pivot_rule(std::string_view name);

/// Dictionary form: every basic variable and the objective written in terms
/// of the nonbasic variables,
///
///   x_B[i] = constants[i] + sum_k coeffs[i][k] * x_N[k]
///   z      = objective_constant + sum_k objective_coeffs[k] * x_N[k]
///
/// Both variable lists are kept in ascending id order. The Phase I auxiliary
/// variable (kArtificial) may appear while an auxiliary problem is active.
struct Dictionary {
  std::vector<VarId> basic;
  std::vector<VarId> nonbasic;
  Vector constants;
  Matrix coeffs;
  Rational objective_constant;
  Vector objective_coeffs;

  /// Row index of a basic variable, or -1.
  int row_of(VarId var) const;
  /// Column index of a nonbasic variable, or -1.
  int column_of(VarId var) const;

  bool is_feasible() const;

  /// Value of `var` in the basic solution (nonbasic variables are zero).
  Rational value(VarId var) const;

  /// Basic solution over ids 0..count-1.
  Vector basic_solution(int count) const;

  friend bool operator==(const Dictionary&, const Dictionary&) = default;
};

/// Standard tableau layout. Each row holds one entry per column followed by
/// the right-hand side; the objective row holds -reduced costs and the z cell.
struct Tableau {
  std::vector<VarId> columns;
  std::vector<VarId> basic;
  Vector objective_row;
  Matrix rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

Tableau dictionary_to_tableau(const Dictionary& d);
/// Throws std::invalid_argument when the basic columns are not an identity.
Dictionary tableau_to_dictionary(const Tableau& t);

struct Iteration {
  Dictionary dictionary;
  Tableau tableau;
  /// Values of x1..x(n+m); the auxiliary variable is reported separately.
  Vector basic_solution;
  std::optional<Rational> artificial_value;
  Rational objective_value;
  /// The pivot taken from this dictionary, if any. An unbounded final
  /// iteration carries the entering variable with no leaving variable.
  std::optional<VarId> entering;
  std::optional<VarId> leaving;
  bool degenerate_step = false;

  friend bool operator==(const Iteration&, const Iteration&) = default;
};

enum class SolveStatus { optimal, unbounded, infeasible, iteration_limit, cycling_detected };

std::string_view to_string(SolveStatus status);
std::optional<SolveStatus> parse_solve_status(std::string_view name);

struct SimplexTrace {
  LinearProgram lp;
  PivotRule rule = PivotRule::dantzig;
  std::optional<std::vector<Iteration>> phase1;
  std::vector<Iteration> phase2;
  SolveStatus status = SolveStatus::optimal;
  std::optional<Rational> optimal_value;

  /// Decision-variable values of the final phase-2 iteration when optimal.
  std::optional<Vector> optimal_point() const;
};

/// Slack-basis dictionary, or nullopt when the origin is infeasible.
std::optional<Dictionary> initial_dictionary(const LinearProgram& lp);

struct PhaseOneResult {
  std::vector<Iteration> iterations;
  /// Feasible dictionary for the original LP when one exists.
  std::optional<Dictionary> feasible;
  /// optimal (feasible found), infeasible, iteration_limit or cycling_detected.
  SolveStatus status = SolveStatus::optimal;
};

/// Single-artificial-variable auxiliary problem: maximize -x0 subject to
/// A x - x0 <= b. Requires some b_i < 0 (throws std::invalid_argument).
PhaseOneResult phase_one(const LinearProgram& lp, PivotRule rule = PivotRule::dantzig,
                         std::optional<std::size_t> iteration_limit = std::nullopt);

/// Entering variable, or nullopt when the dictionary is optimal. Ties go to
/// the lowest variable id.
std::optional<VarId> choose_entering(const Dictionary& d, PivotRule rule);

/// Minimum-ratio leaving variable, or nullopt when `entering` can increase
/// without bound. Ties go to the lowest variable id.
std::optional<VarId> choose_leaving(const Dictionary& d, VarId entering);

/// Exact basis exchange. Throws SingularPivot on a zero pivot coefficient and
/// std::invalid_argument when entering/leaving are not nonbasic/basic.
Dictionary pivot(const Dictionary& d, VarId entering, VarId leaving);

/// 2 * C(n+m, m), saturating.
std::size_t default_iteration_limit(const LinearProgram& lp);

SimplexTrace simplex_solve(const LinearProgram& lp, PivotRule rule = PivotRule::dantzig,
                           std::optional<std::size_t> iteration_limit = std::nullopt);

std::string format_dictionary(const Dictionary& d, const LinearProgram& lp);
std::string format_tableau(const Tableau& t, const LinearProgram& lp);

}  // namespace lpviz
