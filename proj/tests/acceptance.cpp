// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpviz/bnb.hpp"
#include "lpviz/examples.hpp"
#include "lpviz/geometry.hpp"
#include "lpviz/html.hpp"
#include "lpviz/scene.hpp"
#include "lpviz/simplex.hpp"
#include "support.hpp"

using namespace lpviz;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

/// The catalog plus 20 seeded random LPs (n in {2, 3}, m <= 8, feasible and bounded).
std::vector<std::pair<std::string, LinearProgram>> oracle_suite() {
  std::vector<std::pair<std::string, LinearProgram>> out;
  for (const auto& entry : example_catalog()) out.emplace_back(entry.name, entry.lp);
  std::mt19937 rng(20240607);
  for (int k = 0; k < 20; ++k) {
    LinearProgram lp = testing::random_lp(rng, 2 + k % 2, 1 + static_cast<int>(rng() % 8));
    out.emplace_back("random_" + std::to_string(k), lp);
  }
  return out;
}

bool feasible_and_bounded(const LinearProgram& lp) {
  SimplexTrace t = simplex_solve(lp, PivotRule::bland);
  return t.status == SolveStatus::optimal;
}

void lego() {
  LinearProgram lp = example("lego_2d").lp;
  auto start = Clock::now();
  SimplexTrace t = simplex_solve(lp, PivotRule::dantzig);
  auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  expect(t.status == SolveStatus::optimal, "status " + std::string(to_string(t.status)));
  expect(t.optimal_point() == Vector{2, 2}, "optimal point");
  expect(t.optimal_value == 52, "optimal value");
  std::vector<Vector> path;
  for (const auto& it : t.phase2) path.emplace_back(it.basic_solution.begin(), it.basic_solution.begin() + 2);
  expect(path == std::vector<Vector>{{0, 0}, {3, 0}, {2, 2}}, "path");
  expect(elapsed < 10.0, "solve took " + std::to_string(elapsed) + " ms");
}

void klee_minty_cubes() {
  auto start = Clock::now();
  for (int n = 1; n <= 3; ++n) {
    LinearProgram lp = klee_minty(n);
    Polytope p = polytope_of(lp);
    const std::size_t corners = std::size_t{1} << n;
    expect(p.vertices.size() == corners, "n=" + std::to_string(n) + ": vertex count");
    expect(testing::brute_force_vertices(lp).size() == corners, "n=" + std::to_string(n) + ": oracle count");
    SimplexTrace t = simplex_solve(lp, PivotRule::dantzig);
    auto ids = trace_path(t, p);
    expect(std::set<int>(ids.begin(), ids.end()).size() == corners, "n=" + std::to_string(n) + ": visits");
    Integer five = 1;
    for (int i = 0; i < n; ++i) five *= 5;
    expect(t.optimal_value == Rational(five), "n=" + std::to_string(n) + ": optimal value");
  }
  auto elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
}

void vertex_oracle() {
  auto start = Clock::now();
  for (const auto& [name, lp] : oracle_suite()) {
    if (name.rfind("random_", 0) == 0) expect(feasible_and_bounded(lp), name + ": generator invariant");
    std::set<Vector> got;
    for (const auto& v : enumerate_vertices(lp)) got.insert(v.coords);
    expect(got == testing::brute_force_vertices(lp), name + ": vertex sets differ");
  }
  auto elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  expect(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
}

void solver_geometry_agreement() {
  int compared = 0;
  for (const auto& [name, lp] : oracle_suite()) {
    auto vertices = testing::brute_force_vertices(lp);
    std::optional<Rational> best;
    for (const auto& v : vertices) {
      Rational z = testing::dot(lp.c(), v);
      if (!best || z > *best) best = z;
    }
    const bool bounded = is_bounded(lp);
    for (PivotRule rule : {PivotRule::dantzig, PivotRule::bland, PivotRule::greatest_increase}) {
      SimplexTrace t = simplex_solve(lp, rule);
      const std::string tag = name + " (" + std::string(to_string(rule)) + ")";
      if (t.status == SolveStatus::cycling_detected) {
        expect(rule != PivotRule::bland, tag + ": Bland's rule cycled");
        continue;
      }
      if (!bounded && t.status == SolveStatus::unbounded) continue;
      expect(t.status == SolveStatus::optimal, tag + ": status " + std::string(to_string(t.status)));
      expect(t.optimal_value == best, tag + ": simplex " + t.optimal_value->to_string() + " vs vertices " +
                                          best->to_string());
      ++compared;
    }
  }
  expect(compared > 0, "nothing compared");
}

void cycling_and_degeneracy() {
  const LinearProgram& beale = example("cycling_beale").lp;
  SimplexTrace dantzig = simplex_solve(beale, PivotRule::dantzig);
  expect(dantzig.status == SolveStatus::cycling_detected, "dantzig status " + std::string(to_string(dantzig.status)));
  SimplexTrace bland = simplex_solve(beale, PivotRule::bland);
  expect(bland.status == SolveStatus::optimal, "bland status " + std::string(to_string(bland.status)));
  std::set<std::vector<VarId>> bases;
  for (const auto& it : bland.phase2) expect(bases.insert(it.dictionary.basic).second, "bland repeated a basis");

  SimplexTrace degenerate = simplex_solve(example("degenerate_2d").lp, PivotRule::dantzig);
  bool found = false;
  for (const auto& it : degenerate.phase2) found = found || it.degenerate_step;
  expect(found, "degenerate_2d has no degenerate step");
}

void branch_and_bound_example() {
  LinearProgram lp = lp_new({{6, 4}, {1, 2}}, {24, 6}, {5, 4});
  BnbTrace a = branch_and_bound(lp);
  expect(a.optimal.has_value(), "no optimum");
  expect(a.optimal->solution == Vector{4, 0}, "optimum " + show(a.optimal->solution));
  expect(a.optimal->value == 20, "value " + a.optimal->value.to_string());
  auto oracle = testing::brute_force_integer(lp, 4);
  expect(oracle && oracle->second == a.optimal->value && oracle->first == a.optimal->solution,
         "brute force disagrees");

  BnbTrace b = branch_and_bound(lp);
  expect(a.nodes.size() == b.nodes.size(), "node count differs between runs");
  for (std::size_t k = 0; k < a.nodes.size(); ++k) {
    expect(a.nodes[k].parent == b.nodes[k].parent && a.nodes[k].added_bounds == b.nodes[k].added_bounds &&
               a.nodes[k].status == b.nodes[k].status,
           "node " + std::to_string(k) + " differs between runs");
  }
  for (const auto& node : a.nodes) {
    if (!node.parent || !node.polytope) continue;
    const BnbNode& parent = a.nodes[*node.parent];
    expect(parent.polytope.has_value(), "parent without region");
    for (const auto& v : node.polytope->vertices) {
      expect(testing::satisfies(parent.lp, v.coords),
             "node " + std::to_string(node.id) + " vertex " + show(v.coords) + " outside its parent");
    }
  }
}

std::vector<SceneDocument> builtin_scenes() {
  std::vector<SceneDocument> out;
  for (const auto& entry : example_catalog()) {
    if (entry.lp.n() < 2 || entry.lp.n() > 3) continue;
    out.push_back(build_scene(entry.lp, simplex_solve(entry.lp)));
  }
  for (const char* name : {"integrality_2d", "dodecahedron_3d", "lego_2d"}) {
    for (auto& doc : build_bnb_scenes(branch_and_bound(example(name).lp))) out.push_back(std::move(doc));
  }
  return out;
}

void scene_contract() {
  const std::string bundle = default_ui_bundle();
  for (const auto& doc : builtin_scenes()) {
    std::string text = serialize_scene(doc);
    SceneDocument back = parse_scene(text);
    expect(back == doc, "round trip changed a document");
    expect(serialize_scene(back) == text, "second serialization differs");
    std::string html = write_html(doc, bundle);
    expect(html.find(text) != std::string::npos, "HTML does not contain the scene JSON");
    expect(html.find("http://") == std::string::npos && html.find("https://") == std::string::npos,
           "HTML references an external URL");
  }
}

void trace_feasibility() {
  for (const auto& [name, lp] : oracle_suite()) {
    for (PivotRule rule : {PivotRule::dantzig, PivotRule::bland, PivotRule::greatest_increase}) {
      SimplexTrace t = simplex_solve(lp, rule);
      for (std::size_t k = 0; k < t.phase2.size(); ++k) {
        const Vector& s = t.phase2[k].basic_solution;
        const std::string tag = name + " (" + std::string(to_string(rule)) + ") iteration " + std::to_string(k);
        Vector x(s.begin(), s.begin() + lp.n());
        expect(testing::satisfies(lp, x), tag + ": infeasible basic solution");
        int tight = 0;
        for (int j = 0; j < lp.n(); ++j) tight += x[j].is_zero();
        for (int i = 0; i < lp.m(); ++i) {
          expect(s[lp.n() + i] == lp.b()[i] - testing::dot(lp.A()[i], x), tag + ": slack mismatch");
          tight += testing::dot(lp.A()[i], x) == lp.b()[i];
        }
        expect(tight >= lp.n(), tag + ": fewer than n tight constraints");
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> check;
  };
  const std::vector<Criterion> criteria = {
      {"lego: dantzig optimum (2,2), value 52, path (0,0)->(3,0)->(2,2), < 10 ms", lego},
      {"klee-minty n=1..3: 2^n vertices, dantzig visits all, value 5^n, < 1 s", klee_minty_cubes},
      {"vertex enumeration equals the brute-force oracle on built-ins and 20 random LPs, < 10 s", vertex_oracle},
      {"simplex optimum equals the best enumerated vertex", solver_geometry_agreement},
      {"cycling_beale cycles under dantzig, bland optimal without repeats; degenerate_2d has a degenerate step",
       cycling_and_degeneracy},
      {"branch and bound: optimum (4,0) value 20, brute-force match, deterministic, nested regions",
       branch_and_bound_example},
      {"scene contract: round trip, byte-identical reserialization, HTML embeds JSON, no external URLs",
       scene_contract},
      {"every phase-2 basic solution is feasible with at least n tight constraints", trace_feasibility},
  };

  auto suite_start = Clock::now();
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    std::string reason;
    try {
      c.check();
    } catch (const Failure& f) {
      reason = f.what;
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << (reason.empty() ? "PASS" : "FAIL") << "  " << c.name << "  [" << ms << " ms]";
    if (!reason.empty()) line << "\n      " << reason;
    std::cout << line.str() << std::endl;
    failures += !reason.empty();
  }
  auto total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  const bool fast = total < 60.0;
  std::cout << (fast ? "PASS" : "FAIL") << "  full suite under 60 s  [" << total << " s]" << std::endl;
  failures += !fast;
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
