#include "lpviz/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

namespace {

struct Hyperplane {
  Vector normal;  // outward
  Rational rhs;
};

Hyperplane constraint_plane(const LinearProgram& lp, VarId id) {
  if (id < lp.n()) {
    Vector normal(static_cast<std::size_t>(lp.n()));
    normal[id] = -1;
    return {std::move(normal), Rational()};
  }
  return {lp.A()[id - lp.n()], lp.b()[id - lp.n()]};
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) out += a[i] * b[i];
  }
  return out;
}

/// Row echelon reduction in place; returns the rank.
int eliminate(Matrix& rows, std::size_t cols) {
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    Vector& p = rows[static_cast<std::size_t>(rank)];
    Rational inv = Rational(1) / p[c];
    for (auto& v : p) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c];
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

int rank_of(const LinearProgram& lp, const std::vector<VarId>& ids) {
  Matrix rows;
  for (VarId id : ids) rows.push_back(constraint_plane(lp, id).normal);
  return eliminate(rows, static_cast<std::size_t>(lp.n()));
}

/// Unique intersection point of n hyperplanes, if any.
std::optional<Vector> intersect(const LinearProgram& lp, const std::vector<VarId>& ids) {
  const auto n = static_cast<std::size_t>(lp.n());
  Matrix rows;
  for (VarId id : ids) {
    Hyperplane h = constraint_plane(lp, id);
    h.normal.push_back(h.rhs);
    rows.push_back(std::move(h.normal));
  }
  if (eliminate(rows, n) < static_cast<int>(n)) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
  return x;
}

/// Calls `visit` with every k-subset of {0..total-1} in lexicographic order.
template <class Visit>
void for_each_subset(int total, int k, Visit&& visit) {
  if (k > total) return;
  std::vector<VarId> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == total - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<VarId> tight_set(const Vector& full_solution) {
  std::vector<VarId> out;
  for (std::size_t k = 0; k < full_solution.size(); ++k) {
    if (full_solution[k].is_zero()) out.push_back(static_cast<VarId>(k));
  }
  return out;
}

Vertex describe(const LinearProgram& lp, Vector coords) {
  Vertex v;
  v.full_solution = lp.full_solution(coords);
  v.objective = lp.objective(coords);
  v.tight = tight_set(v.full_solution);
  v.coords = std::move(coords);
  const int total = lp.variable_count();
  for_each_subset(static_cast<int>(v.tight.size()), lp.n(), [&](const std::vector<VarId>& pick) {
    std::vector<VarId> nonbasic;
    for (VarId p : pick) nonbasic.push_back(v.tight[p]);
    if (rank_of(lp, nonbasic) < lp.n()) return;
    std::vector<VarId> basis;
    for (VarId id = 0; id < total; ++id) {
      if (!std::binary_search(nonbasic.begin(), nonbasic.end(), id)) basis.push_back(id);
    }
    v.bases.push_back(std::move(basis));
  });
  std::sort(v.bases.begin(), v.bases.end());
  return v;
}

std::set<Vector> vertex_points(const LinearProgram& lp) {
  std::set<Vector> points;
  for_each_subset(lp.variable_count(), lp.n(), [&](const std::vector<VarId>& ids) {
    auto x = intersect(lp, ids);
    if (x && lp.is_feasible(*x)) points.insert(std::move(*x));
  });
  return points;
}

Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vector minus(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector centroid(const std::vector<Vector>& points) {
  Vector g(points.front().size());
  for (const auto& p : points) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += p[i];
  }
  Rational count(static_cast<long long>(points.size()));
  for (auto& v : g) v /= count;
  return g;
}

/// Counter-clockwise order of coplanar 3D points around their centroid, seen
/// from the side `normal` points to. Returns a permutation.
std::vector<std::size_t> angular_order(const std::vector<Vector>& points, const Vector& normal) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (points.size() < 3) return order;
  const Vector g = centroid(points);
  std::vector<Vector> rel;
  for (const auto& p : points) rel.push_back(minus(p, g));
  const Vector& ref = rel.front();
  auto half = [&](const Vector& v) {
    int s = dot(normal, cross(ref, v)).sign();
    if (s > 0) return 0;
    if (s == 0 && dot(ref, v).sign() > 0) return 0;
    return 1;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ha = half(rel[a]);
    int hb = half(rel[b]);
    if (ha != hb) return ha < hb;
    return dot(normal, cross(rel[a], rel[b])).sign() > 0;
  });
  return order;
}

bool collinear(const std::vector<Vector>& points) {
  if (points.size() < 3) return true;
  const Vector d0 = minus(points[1], points[0]);
  for (std::size_t i = 2; i < points.size(); ++i) {
    Vector c = cross(d0, minus(points[i], points[0]));
    if (std::any_of(c.begin(), c.end(), [](const Rational& v) { return !v.is_zero(); })) return false;
  }
  return true;
}

}  // namespace

std::optional<int> Polytope::find_vertex(std::span<const Rational> coords) const {
  for (const auto& v : vertices) {
    if (std::equal(v.coords.begin(), v.coords.end(), coords.begin(), coords.end())) return v.id;
  }
  return std::nullopt;
}

std::vector<Vertex> enumerate_vertices(const LinearProgram& lp) {
  std::set<Vector> points = vertex_points(lp);
  if (points.empty()) throw EmptyRegion();
  std::vector<Vertex> out;
  for (const auto& p : points) {
    Vertex v = describe(lp, p);
    v.id = static_cast<int>(out.size());
    out.push_back(std::move(v));
  }
  return out;
}

bool is_bounded(const LinearProgram& lp) {
  LinearProgram sum_x(lp.A(), lp.b(), Vector(static_cast<std::size_t>(lp.n()), Rational(1)));
  SimplexTrace t = simplex_solve(sum_x, PivotRule::bland);
  if (t.status == SolveStatus::infeasible) throw EmptyRegion();
  if (t.status != SolveStatus::optimal && t.status != SolveStatus::unbounded) {
    throw InvariantViolation("Bland's rule failed to terminate");
  }
  return t.status == SolveStatus::optimal;
}

Polytope polytope_of(const LinearProgram& lp, const std::optional<ClipBox>& clip) {
  if (lp.n() > 3) throw DimensionUnsupported(lp.n());
  Polytope poly;
  poly.dimension = lp.n();
  poly.bounded = is_bounded(lp);

  const bool clipped = clip.has_value() && !poly.bounded;
  LinearProgram target = lp;
  if (clipped) {
    if (static_cast<int>(clip->size()) != lp.n()) {
      throw DimensionMismatch("clip box needs one upper bound per decision variable");
    }
    for (const auto& p : vertex_points(lp)) {
      for (int j = 0; j < lp.n(); ++j) {
        if (p[j] > (*clip)[j]) throw Error("clip box cuts off vertex of the feasible region");
      }
    }
    Matrix rows;
    for (int j = 0; j < lp.n(); ++j) {
      Vector row(static_cast<std::size_t>(lp.n()));
      row[j] = 1;
      rows.push_back(std::move(row));
    }
    target = lp.with_rows(rows, *clip);
  }
  const int original_count = lp.variable_count();

  // Tight sets with respect to `target` drive edge/facet detection; the
  // reported vertex data is always with respect to `lp`.
  std::vector<std::vector<VarId>> target_tight;
  for (const auto& p : vertex_points(target)) {
    Vertex v = describe(lp, p);
    Vector full = target.full_solution(p);
    target_tight.push_back(tight_set(full));
    v.synthetic = std::any_of(target_tight.back().begin(), target_tight.back().end(),
                              [&](VarId id) { return id >= original_count; });
    v.id = static_cast<int>(poly.vertices.size());
    poly.vertices.push_back(std::move(v));
  }
  if (poly.vertices.empty()) throw EmptyRegion();

  for (std::size_t a = 0; a < poly.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < poly.vertices.size(); ++b) {
      std::vector<VarId> common;
      std::set_intersection(target_tight[a].begin(), target_tight[a].end(), target_tight[b].begin(),
                            target_tight[b].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) < lp.n() - 1) continue;
      if (rank_of(target, common) == lp.n() - 1) {
        poly.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }

  if (lp.n() == 3 && (poly.bounded || clipped)) {
    std::set<std::vector<int>> seen;
    for (VarId h = 0; h < target.variable_count(); ++h) {
      std::vector<int> ids;
      std::vector<Vector> points;
      for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
        if (std::binary_search(target_tight[k].begin(), target_tight[k].end(), h)) {
          ids.push_back(static_cast<int>(k));
          points.push_back(poly.vertices[k].coords);
        }
      }
      if (collinear(points) || !seen.insert(ids).second) continue;
      Facet f;
      f.synthetic = h >= original_count;
      if (!f.synthetic) f.constraint = h;
      for (std::size_t k : angular_order(points, constraint_plane(target, h).normal)) {
        f.vertices.push_back(ids[k]);
      }
      poly.facets.push_back(std::move(f));
    }
  }
  return poly;
}

std::vector<LevelSet> objective_levels(const LinearProgram& lp, const Polytope& polytope,
                                       int tick_count) {
  if (tick_count < 2) throw std::invalid_argument("objective levels need at least 2 ticks");
  bool closed = polytope.bounded ||
                std::any_of(polytope.vertices.begin(), polytope.vertices.end(),
                            [](const Vertex& v) { return v.synthetic; });
  if (!closed) throw std::invalid_argument("objective levels need a bounded polytope");
  if (polytope.vertices.empty()) throw EmptyRegion();

  auto [lo_it, hi_it] = std::minmax_element(
      polytope.vertices.begin(), polytope.vertices.end(),
      [&](const Vertex& a, const Vertex& b) { return lp.objective(a.coords) < lp.objective(b.coords); });
  const Rational lo = lp.objective(lo_it->coords);
  const Rational hi = lp.objective(hi_it->coords);

  if (lo == hi) {
    LevelSet level{lo, {}};
    for (const auto& v : polytope.vertices) level.points.push_back(v.coords);
    return {level};
  }

  std::vector<Rational> values_at;
  for (const auto& v : polytope.vertices) values_at.push_back(lp.objective(v.coords));

  std::vector<LevelSet> out;
  const Rational span = hi - lo;
  for (int k = 0; k < tick_count; ++k) {
    LevelSet level;
    level.value = lo + span * Rational(k) / Rational(tick_count - 1);
    std::set<Vector> found;
    for (std::size_t i = 0; i < polytope.vertices.size(); ++i) {
      if (values_at[i] == level.value) found.insert(polytope.vertices[i].coords);
    }
    for (const auto& [a, b] : polytope.edges) {
      Rational da = values_at[a] - level.value;
      Rational db = values_at[b] - level.value;
      if (da.sign() * db.sign() >= 0) continue;
      Rational t = da / (da - db);
      const Vector& pa = polytope.vertices[a].coords;
      const Vector& pb = polytope.vertices[b].coords;
      Vector p(pa.size());
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = pa[j] + t * (pb[j] - pa[j]);
      found.insert(std::move(p));
    }
    level.points.assign(found.begin(), found.end());
    if (lp.n() == 3) {
      std::vector<Vector> ordered;
      for (std::size_t idx : angular_order(level.points, lp.c())) ordered.push_back(level.points[idx]);
      level.points = std::move(ordered);
    }
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<int> trace_path(const SimplexTrace& trace, const Polytope& polytope) {
  std::vector<int> path;
  const auto n = static_cast<std::size_t>(trace.lp.n());
  for (const auto& it : trace.phase2) {
    std::span<const Rational> coords(it.basic_solution.data(), n);
    auto id = polytope.find_vertex(coords);
    if (!id) throw InvariantViolation("basic solution is not a vertex of the polytope");
    path.push_back(*id);
  }
  return path;
}

}  // namespace lpviz
