#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpviz/linear_program.hpp"
#include "lpviz/simplex.hpp"

namespace lpviz {

// Constraints are identified by the variable that is zero when they are
// tight: id j < n is the bound x_j >= 0, id n+i is row i (its slack).

struct Vertex {
  int id = 0;
  Vector coords;
  /// Decision values followed by slack values.
  Vector full_solution;
  Rational objective;
  std::vector<VarId> tight;
  /// Every basis (sorted basic-variable ids) whose basic solution is this
  /// point. More than one iff the vertex is degenerate.
  std::vector<std::vector<VarId>> bases;
  /// Created by a display clipping box rather than by the LP itself.
  bool synthetic = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Facet {
  /// Defining constraint; nullopt for a clipping-box face.
  std::optional<VarId> constraint;
  /// Vertex ids, counter-clockwise seen from outside the region.
  std::vector<int> vertices;
  bool synthetic = false;

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct Polytope {
  int dimension = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  /// Only populated for dimension 3 when the (possibly clipped) region is bounded.
  std::vector<Facet> facets;
  bool bounded = true;

  std::optional<int> find_vertex(std::span<const Rational> coords) const;
};

struct LevelSet {
  Rational value;
  /// Segment endpoints (n = 2) or polygon corners in cyclic order (n = 3).
  std::vector<Vector> points;

  friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

/// Upper bounds x_j <= box[j] used to close off an unbounded region for display.
using ClipBox = Vector;

/// All basic feasible solutions, ids assigned in lexicographic coordinate
/// order. Works for any n; throws EmptyRegion when the LP is infeasible.
std::vector<Vertex> enumerate_vertices(const LinearProgram& lp);

/// True iff the feasible region is bounded. Since the region lies in the
/// nonnegative orthant this is decided by maximizing sum(x). Throws
/// EmptyRegion when the LP is infeasible.
bool is_bounded(const LinearProgram& lp);

/// Vertices, edges and (n = 3) facets. Requires n <= 3 (DimensionUnsupported)
/// and a feasible LP (EmptyRegion). With `clip` on an unbounded region the
/// box is intersected in, and the faces it adds are flagged synthetic; the box
/// must contain every vertex of the unclipped region.
Polytope polytope_of(const LinearProgram& lp, const std::optional<ClipBox>& clip = std::nullopt);

/// `tick_count` evenly spaced objective levels between the minimum and
/// maximum vertex objective. A constant objective yields a single level.
/// Requires a bounded (or clipped) polytope and tick_count >= 2.
std::vector<LevelSet> objective_levels(const LinearProgram& lp, const Polytope& polytope,
                                       int tick_count);

/// Vertex id of each phase-2 iteration's basic solution. Throws
/// InvariantViolation if a basic solution is not a vertex.
std::vector<int> trace_path(const SimplexTrace& trace, const Polytope& polytope);

}  // namespace lpviz
