#include "lpviz/scene.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

std::string_view to_string(DisplayForm form) {
  return form == DisplayForm::tableau ? "tableau" : "dictionary";
}

DisplayForm parse_display_form(std::string_view name) {
  if (name == "dictionary") return DisplayForm::dictionary;
  if (name == "tableau") return DisplayForm::tableau;
  throw ParseError("unknown form \"" + std::string(name) + "\" (expected dictionary or tableau)");
}

namespace {

std::vector<ExactNumber> exact_all(const Vector& values) {
  std::vector<ExactNumber> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(ExactNumber::of(v));
  return out;
}

SceneLp scene_lp(const LinearProgram& lp, const SimplexTrace& trace) {
  SceneLp out;
  out.n = lp.n();
  out.m = lp.m();
  for (const auto& row : lp.A()) out.A.push_back(exact_all(row));
  out.b = exact_all(lp.b());
  out.c = exact_all(lp.c());
  out.variable_names = lp.variable_names();
  out.status = trace.status;
  if (trace.optimal_value) out.optimal_value = ExactNumber::of(*trace.optimal_value);
  out.optimal_point = trace.optimal_point();
  return out;
}

std::vector<SceneConstraint> scene_constraints(const LinearProgram& lp, int base_rows) {
  std::vector<SceneConstraint> out;
  for (int i = 0; i < lp.m(); ++i) {
    out.push_back({lp.n() + i, i < base_rows ? ConstraintKind::row : ConstraintKind::branch_bound,
                   format_constraint(lp, i), exact_all(lp.A()[i]), ExactNumber::of(lp.b()[i])});
  }
  for (int j = 0; j < lp.n(); ++j) {
    Vector coeffs(static_cast<std::size_t>(lp.n()));
    coeffs[j] = -1;
    out.push_back({j, ConstraintKind::nonnegativity, lp.name(j) + " >= 0", exact_all(coeffs),
                   ExactNumber::of(Rational())});
  }
  return out;
}

HoverPayload hover_of(const LinearProgram& lp, const Vertex& v, const SceneOptions& options) {
  HoverPayload h;
  const int count = options.basic_sol ? lp.variable_count() : lp.n();
  for (int k = 0; k < count; ++k) {
    h.labels.push_back(lp.name(k));
    h.values.push_back(v.full_solution[k]);
  }
  h.objective = v.objective;
  if (options.show_basis) {
    std::vector<std::vector<std::string>> bases;
    for (const auto& basis : v.bases) {
      std::vector<std::string> names;
      for (VarId id : basis) names.push_back(lp.name(id));
      bases.push_back(std::move(names));
    }
    h.bases = std::move(bases);
  }
  return h;
}

ScenePolytope scene_polytope(const LinearProgram& lp, const Polytope& poly,
                             const SceneOptions& options) {
  ScenePolytope out;
  out.dimension = poly.dimension;
  out.bounded = poly.bounded;
  for (const auto& v : poly.vertices) {
    SceneVertex sv;
    sv.id = v.id;
    for (const auto& x : v.coords) sv.coords.push_back(x.to_double());
    sv.exact = v.coords;
    sv.solution = v.full_solution;
    sv.objective = v.objective;
    sv.tight = v.tight;
    sv.bases = v.bases;
    sv.synthetic = v.synthetic;
    sv.hover = hover_of(lp, v, options);
    out.vertices.push_back(std::move(sv));
  }
  out.edges = poly.edges;
  out.facets = poly.facets;
  return out;
}

std::vector<SceneLevel> scene_levels(const LinearProgram& lp, const Polytope& poly,
                                     const SceneOptions& options) {
  std::vector<SceneLevel> out;
  for (auto& level : objective_levels(lp, poly, options.objective_ticks)) {
    SceneLevel sl;
    sl.value = ExactNumber::of(level.value);
    for (const auto& p : level.points) {
      std::vector<double> approx;
      for (const auto& x : p) approx.push_back(x.to_double());
      sl.points.push_back(std::move(approx));
    }
    sl.exact_points = std::move(level.points);
    out.push_back(std::move(sl));
  }
  return out;
}

SceneIteration scene_iteration(const Iteration& it, int index, Phase phase, int phase_index) {
  SceneIteration out;
  out.index = index;
  out.phase = phase;
  out.label = (phase == Phase::phase1 ? "Phase I, iteration " : "Iteration ") +
              std::to_string(phase_index);
  out.dictionary = it.dictionary;
  out.tableau = it.tableau;
  out.basic_solution = it.basic_solution;
  out.artificial_value = it.artificial_value;
  out.objective_value = it.objective_value;
  out.entering = it.entering;
  out.leaving = it.leaving;
  out.degenerate = it.degenerate_step;
  return out;
}

/// `poly` is nullopt only for infeasible node relaxations.
SceneDocument assemble(const LinearProgram& lp, const SimplexTrace& trace,
                       const std::optional<Polytope>& poly, const SceneOptions& options,
                       int base_rows) {
  if (options.objective_ticks < 2) throw Error("objective_ticks must be at least 2");
  SceneDocument doc;
  doc.lp = scene_lp(lp, trace);
  doc.constraints = scene_constraints(lp, base_rows);
  doc.options = options;

  if (poly) {
    doc.polytope = scene_polytope(lp, *poly, options);
    doc.path = trace_path(trace, *poly);
    bool closed = poly->bounded || std::any_of(poly->vertices.begin(), poly->vertices.end(),
                                               [](const Vertex& v) { return v.synthetic; });
    if (closed) doc.levels = scene_levels(lp, *poly, options);
  } else {
    doc.polytope.dimension = lp.n();
  }

  int index = 0;
  if (trace.phase1) {
    int k = 0;
    for (const auto& it : *trace.phase1) {
      doc.iterations.push_back(scene_iteration(it, index++, Phase::phase1, k++));
    }
  }
  for (std::size_t k = 0; k < trace.phase2.size(); ++k) {
    SceneIteration si = scene_iteration(trace.phase2[k], index++, Phase::phase2, static_cast<int>(k));
    si.vertex = doc.path[k];
    doc.iterations.push_back(std::move(si));
  }
  validate_scene(doc);
  return doc;
}

void check_dimension(const LinearProgram& lp) {
  if (lp.n() < 2 || lp.n() > 3) throw DimensionUnsupported(lp.n());
}

}  // namespace

SceneDocument build_scene(const LinearProgram& lp, const SimplexTrace& trace,
                          const SceneOptions& options) {
  check_dimension(lp);
  if (!(trace.lp == lp)) throw std::invalid_argument("trace was computed for a different LP");
  if (trace.status == SolveStatus::infeasible) throw EmptyRegion();
  Polytope poly = polytope_of(lp, options.clip_box);
  return assemble(lp, trace, poly, options, lp.m());
}

std::vector<SceneDocument> build_bnb_scenes(const BnbTrace& trace, const SceneOptions& options) {
  check_dimension(trace.lp);
  std::vector<SceneTreeNode> tree;
  for (const auto& node : trace.nodes) {
    tree.push_back({node.id, node.parent, node.status, node.trace.optimal_value});
  }

  std::vector<SceneDocument> docs;
  for (const auto& node : trace.nodes) {
    std::optional<Polytope> poly = node.polytope;
    if (!poly && node.trace.status != SolveStatus::infeasible) {
      poly = polytope_of(node.lp, options.clip_box);
    }
    SceneDocument doc = assemble(node.lp, node.trace, poly, options, trace.lp.m());
    doc.kind = SceneKind::bnb_node;

    SceneBnb meta;
    meta.node = node.id;
    meta.parent = node.parent;
    meta.status = node.status;
    meta.added_bounds = node.added_bounds;
    if (node.parent) {
      const auto& parent = trace.nodes[static_cast<std::size_t>(*node.parent)];
      if (!parent.branch_pair) throw InvariantViolation("parent node has no branch pair");
      meta.parent_branch = parent.branch_pair;
    }
    meta.branch_pair = node.branch_pair;
    meta.relaxation_value = node.trace.optimal_value;
    if (node.incumbent_value) {
      // The incumbent at exploration time is the last one found before this node.
      for (const auto& inc : trace.incumbent_history) {
        if (inc.node < node.id) meta.incumbent = SceneIncumbent{inc.value, inc.solution};
      }
    }
    meta.tree = tree;
    doc.bnb = std::move(meta);
    validate_scene(doc);
    docs.push_back(std::move(doc));
  }
  return docs;
}

void validate_scene(const SceneDocument& doc) {
  auto fail = [](const std::string& path, const std::string& msg) { throw SchemaError(path, msg); };

  if (doc.lp.n < 1) fail("$.lp.n", "must be at least 1");
  if (doc.lp.m < 0) fail("$.lp.m", "must be nonnegative");
  const auto n = static_cast<std::size_t>(doc.lp.n);
  const auto m = static_cast<std::size_t>(doc.lp.m);
  if (doc.lp.A.size() != m) fail("$.lp.A", "expected m rows");
  for (std::size_t i = 0; i < doc.lp.A.size(); ++i) {
    if (doc.lp.A[i].size() != n) fail("$.lp.A[" + std::to_string(i) + "]", "expected n entries");
  }
  if (doc.lp.b.size() != m) fail("$.lp.b", "expected m entries");
  if (doc.lp.c.size() != n) fail("$.lp.c", "expected n entries");
  if (doc.lp.variable_names.size() != n + m) fail("$.lp.variable_names", "expected n+m names");
  if (doc.options.objective_ticks < 2) fail("$.options.objective_ticks", "must be at least 2");
  if (doc.iterations.empty()) fail("$.iterations", "must contain at least one iteration");
  if ((doc.kind == SceneKind::bnb_node) != doc.bnb.has_value()) {
    fail("$.bnb", "must be present exactly when kind is bnb_node");
  }

  const auto vertex_count = doc.polytope.vertices.size();
  auto check_id = [&](int id, const std::string& path) {
    if (id < 0 || static_cast<std::size_t>(id) >= vertex_count) fail(path, "unknown vertex id");
  };
  const std::size_t hover_size = doc.options.basic_sol ? n + m : n;
  for (std::size_t k = 0; k < vertex_count; ++k) {
    const auto& v = doc.polytope.vertices[k];
    const std::string path = "$.polytope.vertices[" + std::to_string(k) + "]";
    if (v.id != static_cast<int>(k)) fail(path + ".id", "vertex ids must be 0..count-1 in order");
    if (v.coords.size() != n || v.exact.size() != n) fail(path + ".coords", "expected n coordinates");
    if (v.solution.size() != n + m) fail(path + ".solution", "expected n+m values");
    if (v.hover.values.size() != hover_size || v.hover.labels.size() != hover_size) {
      fail(path + ".hover", "hover payload size does not match basic_sol");
    }
    if (v.hover.bases.has_value() != doc.options.show_basis) {
      fail(path + ".hover.bases", "must be present exactly when show_basis is set");
    }
  }
  for (std::size_t k = 0; k < doc.polytope.edges.size(); ++k) {
    const std::string path = "$.polytope.edges[" + std::to_string(k) + "]";
    check_id(doc.polytope.edges[k].first, path + "[0]");
    check_id(doc.polytope.edges[k].second, path + "[1]");
  }
  for (std::size_t f = 0; f < doc.polytope.facets.size(); ++f) {
    const auto& ids = doc.polytope.facets[f].vertices;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      check_id(ids[k], "$.polytope.facets[" + std::to_string(f) + "].vertices[" + std::to_string(k) + "]");
    }
  }
  for (std::size_t k = 0; k < doc.path.size(); ++k) check_id(doc.path[k], "$.path[" + std::to_string(k) + "]");
  for (std::size_t k = 0; k < doc.iterations.size(); ++k) {
    const auto& it = doc.iterations[k];
    const std::string path = "$.iterations[" + std::to_string(k) + "]";
    if (it.index != static_cast<int>(k)) fail(path + ".index", "iterations must be numbered in order");
    if (it.vertex) check_id(*it.vertex, path + ".vertex");
    if (it.basic_solution.size() != n + m) fail(path + ".basic_solution", "expected n+m values");
  }
}

}  // namespace lpviz
