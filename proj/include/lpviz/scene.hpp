#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpviz/bnb.hpp"
#include "lpviz/geometry.hpp"
#include "lpviz/simplex.hpp"

namespace lpviz {

inline constexpr std::string_view kSceneVersion = "1";

enum class DisplayForm { dictionary, tableau };

std::string_view to_string(DisplayForm form);
/// Throws ParseError.
DisplayForm parse_display_form(std::string_view name);

struct SceneOptions {
  DisplayForm form = DisplayForm::dictionary;
  /// Hover shows decision and slack values (true) or decision values only.
  bool basic_sol = true;
  /// Hover shows the basis (or bases) of the corner point.
  bool show_basis = true;
  int objective_ticks = 10;
  /// Upper bounds used to close off unbounded regions for display.
  std::optional<Vector> clip_box;

  friend bool operator==(const SceneOptions&, const SceneOptions&) = default;
};

enum class SceneKind { simplex, bnb_node };

/// Exact value plus its float rendering.
struct ExactNumber {
  Rational exact;
  double approx = 0.0;

  static ExactNumber of(const Rational& r) { return {r, r.to_double()}; }
  friend bool operator==(const ExactNumber&, const ExactNumber&) = default;
};

struct SceneLp {
  int n = 0;
  int m = 0;
  std::vector<std::vector<ExactNumber>> A;
  std::vector<ExactNumber> b;
  std::vector<ExactNumber> c;
  std::vector<std::string> variable_names;
  SolveStatus status = SolveStatus::optimal;
  std::optional<ExactNumber> optimal_value;
  std::optional<Vector> optimal_point;

  friend bool operator==(const SceneLp&, const SceneLp&) = default;
};

/// What the UI shows when a corner point is hovered.
struct HoverPayload {
  std::vector<std::string> labels;
  Vector values;
  Rational objective;
  /// Basis variable names; only present when show_basis is set.
  std::optional<std::vector<std::vector<std::string>>> bases;

  friend bool operator==(const HoverPayload&, const HoverPayload&) = default;
};

struct SceneVertex {
  int id = 0;
  std::vector<double> coords;
  Vector exact;
  Vector solution;
  Rational objective;
  std::vector<VarId> tight;
  std::vector<std::vector<VarId>> bases;
  bool synthetic = false;
  HoverPayload hover;

  friend bool operator==(const SceneVertex&, const SceneVertex&) = default;
};

struct ScenePolytope {
  int dimension = 0;
  bool bounded = true;
  std::vector<SceneVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Facet> facets;

  friend bool operator==(const ScenePolytope&, const ScenePolytope&) = default;
};

enum class ConstraintKind { row, nonnegativity, branch_bound };

struct SceneConstraint {
  /// Same id scheme as geometry: the variable that is zero when tight.
  VarId id = 0;
  ConstraintKind kind = ConstraintKind::row;
  std::string label;
  std::vector<ExactNumber> coefficients;
  ExactNumber rhs;

  friend bool operator==(const SceneConstraint&, const SceneConstraint&) = default;
};

enum class Phase { phase1, phase2 };

struct SceneIteration {
  int index = 0;
  Phase phase = Phase::phase2;
  std::string label;
  Dictionary dictionary;
  Tableau tableau;
  Vector basic_solution;
  std::optional<Rational> artificial_value;
  Rational objective_value;
  std::optional<VarId> entering;
  std::optional<VarId> leaving;
  bool degenerate = false;
  std::optional<int> vertex;

  friend bool operator==(const SceneIteration&, const SceneIteration&) = default;
};

struct SceneLevel {
  ExactNumber value;
  std::vector<Vector> exact_points;
  std::vector<std::vector<double>> points;

  friend bool operator==(const SceneLevel&, const SceneLevel&) = default;
};

struct SceneTreeNode {
  int id = 0;
  std::optional<int> parent;
  NodeStatus status = NodeStatus::infeasible;
  std::optional<Rational> relaxation_value;

  friend bool operator==(const SceneTreeNode&, const SceneTreeNode&) = default;
};

struct SceneIncumbent {
  Rational value;
  Vector solution;

  friend bool operator==(const SceneIncumbent&, const SceneIncumbent&) = default;
};

struct SceneBnb {
  /// Node shown (highlighted) by this document.
  int node = 0;
  std::optional<int> parent;
  NodeStatus status = NodeStatus::infeasible;
  std::vector<VariableBound> added_bounds;
  /// The two bounds the parent generated; this node carries one of them.
  std::optional<std::pair<VariableBound, VariableBound>> parent_branch;
  std::optional<std::pair<VariableBound, VariableBound>> branch_pair;
  std::optional<Rational> relaxation_value;
  /// Incumbent at the time this node was explored.
  std::optional<SceneIncumbent> incumbent;
  std::vector<SceneTreeNode> tree;

  friend bool operator==(const SceneBnb&, const SceneBnb&) = default;
};

struct SceneDocument {
  std::string version{kSceneVersion};
  SceneKind kind = SceneKind::simplex;
  SceneLp lp;
  ScenePolytope polytope;
  std::vector<SceneConstraint> constraints;
  std::vector<SceneIteration> iterations;
  std::vector<int> path;
  std::vector<SceneLevel> levels;
  std::optional<SceneBnb> bnb;
  SceneOptions options;

  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

/// Requires 2 <= n <= 3 (DimensionUnsupported) and a feasible LP (EmptyRegion).
/// Unbounded regions without a clip box get an edge skeleton, no facets and
/// no objective levels.
SceneDocument build_scene(const LinearProgram& lp, const SimplexTrace& trace,
                          const SceneOptions& options = {});

/// One document per explored node, in exploration order.
std::vector<SceneDocument> build_bnb_scenes(const BnbTrace& trace, const SceneOptions& options = {});

/// Canonical compact JSON: fixed key order, reduced "p/q" rationals, shortest
/// round-trip floats, and '<', '>', '&' escaped so the text can sit inside HTML.
std::string serialize_scene(const SceneDocument& doc);

/// Strict inverse of serialize_scene. Throws SchemaError with a JSON path.
SceneDocument parse_scene(std::string_view bytes);

/// Internal consistency of a document: referenced vertex ids exist, at least
/// one iteration, hover payload sizes match basic_sol. Throws SchemaError.
void validate_scene(const SceneDocument& doc);

}  // namespace lpviz
