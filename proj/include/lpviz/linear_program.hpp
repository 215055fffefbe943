#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpviz/rational.hpp"

namespace lpviz {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Variable index. Decision variables are 0..n-1, the slack of row i is n+i.
/// Displayed 1-based: id k prints as "x{k+1}".
using VarId = int;

/// The Phase I auxiliary variable; displayed as "x0".
inline constexpr VarId kArtificial = -1;

/// maximize c.x subject to A x <= b, x >= 0. Nonnegativity is implicit.
class LinearProgram {
 public:
  /// Throws DimensionMismatch. `variable_names` may be empty (defaults), hold
  /// n decision names (slacks default), or hold all n+m names.
  LinearProgram(Matrix A, Vector b, Vector c, std::vector<std::string> variable_names = {});

  int n() const noexcept { return static_cast<int>(c_.size()); }
  int m() const noexcept { return static_cast<int>(b_.size()); }
  int variable_count() const noexcept { return n() + m(); }

  const Matrix& A() const noexcept { return A_; }
  const Vector& b() const noexcept { return b_; }
  const Vector& c() const noexcept { return c_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }

  /// Display name; kArtificial maps to "x0".
  std::string name(VarId var) const;

  bool is_slack(VarId var) const noexcept { return var >= n() && var < variable_count(); }

  Rational objective(std::span<const Rational> x) const;

  /// b - A x.
  Vector slack_values(std::span<const Rational> x) const;

  /// Decision values followed by slack values (length n+m).
  Vector full_solution(std::span<const Rational> x) const;

  bool is_feasible(std::span<const Rational> x) const;

  /// Copy with extra rows appended (their slacks take the next ids). Custom
  /// slack names are not carried over.
  LinearProgram with_rows(const Matrix& rows, const Vector& rhs) const;

  friend bool operator==(const LinearProgram&, const LinearProgram&) = default;

 private:
  Matrix A_;
  Vector b_;
  Vector c_;
  std::vector<std::string> names_;
};

/// Validating constructor mirroring LP(A, b, c).
LinearProgram lp_new(Matrix A, Vector b, Vector c);

/// x_{slack} = constant + sum_j coeffs[j] * x_j, with coeffs = -A_i.
struct SlackRow {
  VarId slack = 0;
  Rational constant;
  Vector coeffs;
};

struct EqualityForm {
  LinearProgram base;
  std::vector<VarId> slack_indices;
  std::vector<SlackRow> rows;

  /// Slack values induced by decision values x.
  Vector evaluate(std::span<const Rational> x) const;
};

EqualityForm to_equality_form(const LinearProgram& lp);

/// LP file: {"A": [[...]], "b": [...], "c": [...], "variable_names": [...]?}.
/// Numbers may be JSON numbers (decimals kept exact) or "p/q" strings.
/// Throws ParseError or DimensionMismatch.
LinearProgram parse_lp_json(std::string_view text);

/// Slide shorthand: "A=[[2,2],[2,1]];b=[8,6];c=[16,10]". Bare p/q tokens allowed.
LinearProgram parse_lp_inline(std::string_view text);

/// Human-readable constraint row, e.g. "2x1 + 2x2 <= 8".
std::string format_constraint(const LinearProgram& lp, int row);

/// Linear expression over decision variables, e.g. "16x1 + 10x2".
std::string format_linear(const LinearProgram& lp, std::span<const Rational> coeffs);

}  // namespace lpviz
