#include "lpviz/simplex.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

std::string_view to_string(PivotRule rule) {
  switch (rule) {
    case PivotRule::dantzig: return "dantzig";
    case PivotRule::bland: return "bland";
    case PivotRule::greatest_increase: return "greatest_increase";
  }
  return "dantzig";
}

PivotRule parse_pivot_rule(std::string_view name) {
  if (name == "dantzig") return PivotRule::dantzig;
  if (name == "bland") return PivotRule::bland;
  if (name == "greatest_increase") return PivotRule::greatest_increase;
  throw ParseError("unknown pivot rule \"" + std::string(name) +
                   "\" (expected dantzig, bland, greatest_increase)");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::iteration_limit: return "iteration_limit";
    case SolveStatus::cycling_detected: return "cycling_detected";
  }
  return "optimal";
}

std::optional<SolveStatus> parse_solve_status(std::string_view name) {
  for (auto s : {SolveStatus::optimal, SolveStatus::unbounded, SolveStatus::infeasible,
                 SolveStatus::iteration_limit, SolveStatus::cycling_detected}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dictionary

namespace {

int index_in(const std::vector<VarId>& vars, VarId var) {
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return -1;
  return static_cast<int>(it - vars.begin());
}

}  // namespace

int Dictionary::row_of(VarId var) const { return index_in(basic, var); }
int Dictionary::column_of(VarId var) const { return index_in(nonbasic, var); }

bool Dictionary::is_feasible() const {
  return std::all_of(constants.begin(), constants.end(),
                     [](const Rational& v) { return v.sign() >= 0; });
}

Rational Dictionary::value(VarId var) const {
  int r = row_of(var);
  return r < 0 ? Rational() : constants[r];
}

Vector Dictionary::basic_solution(int count) const {
  Vector out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < basic.size(); ++i) {
    if (basic[i] >= 0 && basic[i] < count) out[basic[i]] = constants[i];
  }
  return out;
}

std::optional<Vector> SimplexTrace::optimal_point() const {
  if (status != SolveStatus::optimal || phase2.empty()) return std::nullopt;
  const Vector& full = phase2.back().basic_solution;
  return Vector(full.begin(), full.begin() + lp.n());
}

// ---------------------------------------------------------------------------
// Tableau

Tableau dictionary_to_tableau(const Dictionary& d) {
  Tableau t;
  t.columns = d.basic;
  t.columns.insert(t.columns.end(), d.nonbasic.begin(), d.nonbasic.end());
  std::sort(t.columns.begin(), t.columns.end());
  t.basic = d.basic;

  const std::size_t width = t.columns.size() + 1;
  t.objective_row.assign(width, Rational());
  for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
    t.objective_row[index_in(t.columns, d.nonbasic[k])] = -d.objective_coeffs[k];
  }
  t.objective_row.back() = d.objective_constant;

  for (std::size_t i = 0; i < d.basic.size(); ++i) {
    Vector row(width);
    row[index_in(t.columns, d.basic[i])] = 1;
    for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
      row[index_in(t.columns, d.nonbasic[k])] = -d.coeffs[i][k];
    }
    row.back() = d.constants[i];
    t.rows.push_back(std::move(row));
  }
  return t;
}

Dictionary tableau_to_dictionary(const Tableau& t) {
  if (t.rows.size() != t.basic.size()) throw std::invalid_argument("tableau row/label count differs");
  Dictionary d;
  d.basic = t.basic;
  for (VarId v : t.columns) {
    if (index_in(t.basic, v) < 0) d.nonbasic.push_back(v);
  }
  const std::size_t width = t.columns.size() + 1;
  if (t.objective_row.size() != width) throw std::invalid_argument("tableau objective row width");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Vector& row = t.rows[i];
    if (row.size() != width) throw std::invalid_argument("tableau row width");
    for (std::size_t j = 0; j < t.basic.size(); ++j) {
      const Rational& cell = row[index_in(t.columns, t.basic[j])];
      if (cell != (i == j ? Rational(1) : Rational(0))) {
        throw std::invalid_argument("basic columns do not form an identity");
      }
    }
    Vector coeffs;
    for (VarId v : d.nonbasic) coeffs.push_back(-row[index_in(t.columns, v)]);
    d.coeffs.push_back(std::move(coeffs));
    d.constants.push_back(row.back());
  }
  for (VarId v : d.nonbasic) d.objective_coeffs.push_back(-t.objective_row[index_in(t.columns, v)]);
  d.objective_constant = t.objective_row.back();
  return d;
}

// ---------------------------------------------------------------------------
// Pivoting

namespace {

struct Ratio {
  VarId leaving;
  Rational step;
};

std::optional<Ratio> ratio_test(const Dictionary& d, int column) {
  std::optional<Ratio> best;
  for (std::size_t i = 0; i < d.basic.size(); ++i) {
    const Rational& a = d.coeffs[i][column];
    if (a.sign() >= 0) continue;
    Rational step = d.constants[i] / -a;
    // Rows are in ascending id order, so strict < keeps the lowest id on ties.
    if (!best || step < best->step) best = Ratio{d.basic[i], std::move(step)};
  }
  return best;
}

}  // namespace

std::optional<VarId> choose_entering(const Dictionary& d, PivotRule rule) {
  std::optional<VarId> chosen;
  switch (rule) {
    case PivotRule::bland:
      for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
        if (d.objective_coeffs[k].sign() > 0) return d.nonbasic[k];
      }
      return std::nullopt;

    case PivotRule::dantzig: {
      const Rational* best = nullptr;
      for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
        const Rational& coeff = d.objective_coeffs[k];
        if (coeff.sign() > 0 && (best == nullptr || coeff > *best)) {
          best = &coeff;
          chosen = d.nonbasic[k];
        }
      }
      return chosen;
    }

    case PivotRule::greatest_increase: {
      std::optional<Rational> best_gain;
      for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
        const Rational& coeff = d.objective_coeffs[k];
        if (coeff.sign() <= 0) continue;
        auto ratio = ratio_test(d, static_cast<int>(k));
        if (!ratio) return d.nonbasic[k];  // unbounded gain
        Rational gain = coeff * ratio->step;
        if (!best_gain || gain > *best_gain) {
          best_gain = std::move(gain);
          chosen = d.nonbasic[k];
        }
      }
      return chosen;
    }
  }
  return std::nullopt;
}

std::optional<VarId> choose_leaving(const Dictionary& d, VarId entering) {
  int column = d.column_of(entering);
  if (column < 0) throw std::invalid_argument("entering variable is not nonbasic");
  auto ratio = ratio_test(d, column);
  if (!ratio) return std::nullopt;
  return ratio->leaving;
}

Dictionary pivot(const Dictionary& d, VarId entering, VarId leaving) {
  const int col = d.column_of(entering);
  const int row = d.row_of(leaving);
  if (col < 0) throw std::invalid_argument("entering variable is not nonbasic");
  if (row < 0) throw std::invalid_argument("leaving variable is not basic");
  const Rational& a = d.coeffs[row][col];
  if (a.is_zero()) {
    throw SingularPivot("pivot coefficient of entering variable in the leaving row is zero");
  }

  const std::size_t m = d.basic.size();
  const std::size_t width = d.nonbasic.size();

  // Solve the leaving row for the entering variable. Column `col` of the
  // rewritten row now refers to the leaving variable.
  const Rational inv = Rational(1) / a;
  Vector solved(width);
  for (std::size_t k = 0; k < width; ++k) {
    solved[k] = (static_cast<int>(k) == col) ? inv : -d.coeffs[row][k] * inv;
  }
  const Rational solved_constant = -d.constants[row] * inv;

  auto substitute = [&](const Rational& constant, const Vector& coeffs, Rational& out_constant,
                        Vector& out_coeffs) {
    const Rational& factor = coeffs[col];
    out_constant = constant;
    out_coeffs = coeffs;
    out_coeffs[col] = Rational();
    if (factor.is_zero()) return;
    out_constant += factor * solved_constant;
    for (std::size_t k = 0; k < width; ++k) {
      if (!solved[k].is_zero()) out_coeffs[k] += factor * solved[k];
    }
  };

  // Unsorted intermediate: row `row` becomes the entering variable, column
  // `col` becomes the leaving variable.
  std::vector<VarId> basic = d.basic;
  std::vector<VarId> nonbasic = d.nonbasic;
  basic[row] = entering;
  nonbasic[col] = leaving;
  Vector constants(m);
  Matrix coeffs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<int>(i) == row) {
      constants[i] = solved_constant;
      coeffs[i] = solved;
    } else {
      substitute(d.constants[i], d.coeffs[i], constants[i], coeffs[i]);
    }
  }
  Rational objective_constant;
  Vector objective_coeffs;
  substitute(d.objective_constant, d.objective_coeffs, objective_constant, objective_coeffs);

  // Restore ascending order of both variable lists.
  std::vector<std::size_t> row_order(m);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::sort(row_order.begin(), row_order.end(),
            [&](std::size_t x, std::size_t y) { return basic[x] < basic[y]; });
  std::vector<std::size_t> col_order(width);
  std::iota(col_order.begin(), col_order.end(), 0);
  std::sort(col_order.begin(), col_order.end(),
            [&](std::size_t x, std::size_t y) { return nonbasic[x] < nonbasic[y]; });

  Dictionary out;
  out.basic.reserve(m);
  out.constants.reserve(m);
  out.coeffs.reserve(m);
  for (std::size_t k : col_order) {
    out.nonbasic.push_back(nonbasic[k]);
    out.objective_coeffs.push_back(objective_coeffs[k]);
  }
  for (std::size_t i : row_order) {
    out.basic.push_back(basic[i]);
    out.constants.push_back(constants[i]);
    Vector r;
    r.reserve(width);
    for (std::size_t k : col_order) r.push_back(coeffs[i][k]);
    out.coeffs.push_back(std::move(r));
  }
  out.objective_constant = std::move(objective_constant);
  return out;
}

// ---------------------------------------------------------------------------
// Solving

namespace {

constexpr std::size_t kLimitCap = 100'000'000;

std::size_t saturating_binomial(std::size_t total, std::size_t choose) {
  choose = std::min(choose, total - choose);
  long double acc = 1;
  for (std::size_t i = 1; i <= choose; ++i) {
    acc = acc * static_cast<long double>(total - choose + i) / static_cast<long double>(i);
    if (acc > kLimitCap) return kLimitCap;
  }
  return static_cast<std::size_t>(acc + 0.5L);
}

Iteration record(const Dictionary& d, int variable_count) {
  Iteration it;
  it.dictionary = d;
  it.tableau = dictionary_to_tableau(d);
  it.basic_solution = d.basic_solution(variable_count);
  if (d.row_of(kArtificial) >= 0 || d.column_of(kArtificial) >= 0) {
    it.artificial_value = d.value(kArtificial);
  }
  it.objective_value = d.objective_constant;
  return it;
}

struct RunResult {
  Dictionary last;
  SolveStatus status;
};

/// Pivots `start` to optimality, appending each dictionary to `out`.
RunResult run_pivots(Dictionary start, PivotRule rule, std::size_t limit, int variable_count,
                     std::vector<Iteration>& out) {
  std::set<std::vector<VarId>> seen;
  seen.insert(start.basic);
  out.push_back(record(start, variable_count));
  Dictionary current = std::move(start);
  std::size_t pivots = 0;
  while (true) {
    auto entering = choose_entering(current, rule);
    if (!entering) return {current, SolveStatus::optimal};
    auto leaving = choose_leaving(current, *entering);
    if (!leaving) {
      out.back().entering = entering;
      return {current, SolveStatus::unbounded};
    }
    if (pivots == limit) return {current, SolveStatus::iteration_limit};
    out.back().entering = entering;
    out.back().leaving = leaving;
    out.back().degenerate_step = current.value(*leaving).is_zero();
    current = pivot(current, *entering, *leaving);
    ++pivots;
    out.push_back(record(current, variable_count));
    if (!seen.insert(current.basic).second) return {current, SolveStatus::cycling_detected};
  }
}

Dictionary auxiliary_dictionary(const LinearProgram& lp) {
  Dictionary d;
  d.nonbasic.push_back(kArtificial);
  for (int j = 0; j < lp.n(); ++j) d.nonbasic.push_back(j);
  d.objective_coeffs.assign(d.nonbasic.size(), Rational());
  d.objective_coeffs[0] = -1;
  for (int i = 0; i < lp.m(); ++i) {
    d.basic.push_back(lp.n() + i);
    d.constants.push_back(lp.b()[i]);
    Vector row;
    row.push_back(1);
    for (const auto& a : lp.A()[i]) row.push_back(-a);
    d.coeffs.push_back(std::move(row));
  }
  return d;
}

/// Drops the (nonbasic) auxiliary column and rewrites the original objective
/// in terms of the current nonbasic variables.
Dictionary restore_objective(const Dictionary& aux, const LinearProgram& lp) {
  Dictionary d;
  d.basic = aux.basic;
  d.constants = aux.constants;
  const int skip = aux.column_of(kArtificial);
  for (std::size_t k = 0; k < aux.nonbasic.size(); ++k) {
    if (static_cast<int>(k) != skip) d.nonbasic.push_back(aux.nonbasic[k]);
  }
  for (const auto& row : aux.coeffs) {
    Vector r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (static_cast<int>(k) != skip) r.push_back(row[k]);
    }
    d.coeffs.push_back(std::move(r));
  }
  d.objective_coeffs.assign(d.nonbasic.size(), Rational());
  for (int j = 0; j < lp.n(); ++j) {
    const Rational& cj = lp.c()[j];
    if (cj.is_zero()) continue;
    if (int col = d.column_of(j); col >= 0) {
      d.objective_coeffs[col] += cj;
    } else {
      int r = d.row_of(j);
      d.objective_constant += cj * d.constants[r];
      for (std::size_t k = 0; k < d.nonbasic.size(); ++k) {
        if (!d.coeffs[r][k].is_zero()) d.objective_coeffs[k] += cj * d.coeffs[r][k];
      }
    }
  }
  return d;
}

}  // namespace

std::size_t default_iteration_limit(const LinearProgram& lp) {
  auto bases = saturating_binomial(static_cast<std::size_t>(lp.variable_count()),
                                   static_cast<std::size_t>(lp.m()));
  return std::min(kLimitCap, 2 * bases);
}

std::optional<Dictionary> initial_dictionary(const LinearProgram& lp) {
  for (const auto& bi : lp.b()) {
    if (bi.sign() < 0) return std::nullopt;
  }
  Dictionary d;
  for (int j = 0; j < lp.n(); ++j) d.nonbasic.push_back(j);
  d.objective_coeffs = lp.c();
  for (int i = 0; i < lp.m(); ++i) {
    d.basic.push_back(lp.n() + i);
    d.constants.push_back(lp.b()[i]);
    Vector row;
    for (const auto& a : lp.A()[i]) row.push_back(-a);
    d.coeffs.push_back(std::move(row));
  }
  return d;
}

PhaseOneResult phase_one(const LinearProgram& lp, PivotRule rule,
                         std::optional<std::size_t> iteration_limit) {
  int most_negative = -1;
  for (int i = 0; i < lp.m(); ++i) {
    if (lp.b()[i].sign() < 0 && (most_negative < 0 || lp.b()[i] < lp.b()[most_negative])) {
      most_negative = i;
    }
  }
  if (most_negative < 0) {
    throw std::invalid_argument("phase_one requires a negative right-hand side");
  }
  // The auxiliary problem has one more variable than the original.
  const LinearProgram widened(Matrix(static_cast<std::size_t>(lp.m()), Vector(lp.n() + 1)), lp.b(),
                              Vector(lp.n() + 1));
  const std::size_t limit = iteration_limit.value_or(default_iteration_limit(widened));
  const int count = lp.variable_count();

  PhaseOneResult result;
  Dictionary start = auxiliary_dictionary(lp);
  const VarId first_leaving = lp.n() + most_negative;
  result.iterations.push_back(record(start, count));
  result.iterations.back().entering = kArtificial;
  result.iterations.back().leaving = first_leaving;
  Dictionary feasible_aux = pivot(start, kArtificial, first_leaving);

  auto run = run_pivots(std::move(feasible_aux), rule, limit, count, result.iterations);
  if (run.status != SolveStatus::optimal) {
    // The auxiliary objective is bounded above by 0, so unbounded is impossible.
    if (run.status == SolveStatus::unbounded) {
      throw InvariantViolation("auxiliary problem reported unbounded");
    }
    result.status = run.status;
    return result;
  }
  if (run.last.objective_constant.sign() < 0) {
    result.status = SolveStatus::infeasible;
    return result;
  }

  Dictionary aux = std::move(run.last);
  if (int r = aux.row_of(kArtificial); r >= 0) {
    // x0 is basic at value 0: swap it out on any nonzero entry of its row.
    std::optional<VarId> replacement;
    for (std::size_t k = 0; k < aux.nonbasic.size(); ++k) {
      if (!aux.coeffs[r][k].is_zero()) {
        replacement = aux.nonbasic[k];
        break;
      }
    }
    if (!replacement) throw InvariantViolation("auxiliary row of x0 is identically zero");
    result.iterations.back().entering = replacement;
    result.iterations.back().leaving = kArtificial;
    result.iterations.back().degenerate_step = true;
    aux = pivot(aux, *replacement, kArtificial);
    result.iterations.push_back(record(aux, count));
  }
  result.feasible = restore_objective(aux, lp);
  result.status = SolveStatus::optimal;
  return result;
}

SimplexTrace simplex_solve(const LinearProgram& lp, PivotRule rule,
                           std::optional<std::size_t> iteration_limit) {
  SimplexTrace trace{lp, rule, std::nullopt, {}, SolveStatus::optimal, std::nullopt};
  std::optional<Dictionary> start = initial_dictionary(lp);
  if (!start) {
    PhaseOneResult p1 = phase_one(lp, rule, iteration_limit);
    trace.phase1 = std::move(p1.iterations);
    if (p1.status != SolveStatus::optimal) {
      trace.status = p1.status;
      return trace;
    }
    start = std::move(p1.feasible);
  }
  const std::size_t limit = iteration_limit.value_or(default_iteration_limit(lp));
  auto run = run_pivots(std::move(*start), rule, limit, lp.variable_count(), trace.phase2);
  trace.status = run.status;
  if (run.status == SolveStatus::optimal) trace.optimal_value = run.last.objective_constant;
  return trace;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string format_row(const Rational& constant, const Vector& coeffs,
                       const std::vector<VarId>& vars, const LinearProgram& lp) {
  std::ostringstream os;
  os << constant.to_string();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const Rational& a = coeffs[k];
    if (a.is_zero()) continue;
    os << (a.sign() < 0 ? " - " : " + ");
    Rational mag = abs(a);
    if (mag != 1) os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
    os << lp.name(vars[k]);
  }
  return os.str();
}

}  // namespace

std::string format_dictionary(const Dictionary& d, const LinearProgram& lp) {
  std::size_t width = 1;
  for (VarId v : d.basic) width = std::max(width, lp.name(v).size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "z" << " = "
     << format_row(d.objective_constant, d.objective_coeffs, d.nonbasic, lp) << "\n";
  for (std::size_t i = 0; i < d.basic.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(width)) << lp.name(d.basic[i]) << " = "
       << format_row(d.constants[i], d.coeffs[i], d.nonbasic, lp) << "\n";
  }
  return os.str();
}

std::string format_tableau(const Tableau& t, const LinearProgram& lp) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (VarId v : t.columns) header.push_back(lp.name(v));
  header.push_back("rhs");
  cells.push_back(header);
  std::vector<std::string> obj{"z"};
  for (const auto& v : t.objective_row) obj.push_back(v.to_string());
  cells.push_back(obj);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> row{lp.name(t.basic[i])};
    for (const auto& v : t.rows[i]) row.push_back(v.to_string());
    cells.push_back(row);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], row[k].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k == row.size() - 1) os << " |";
      os << (k == 0 ? "" : " ") << std::right << std::setw(static_cast<int>(widths[k])) << row[k];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace lpviz
