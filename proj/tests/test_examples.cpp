#include <doctest.h>

#include "lpviz/errors.hpp"
#include "lpviz/examples.hpp"
#include "lpviz/simplex.hpp"
#include "support.hpp"

using namespace lpviz;

TEST_CASE("catalog lookups") {
  const ExampleEntry& lego = example("lego_2d");
  CHECK(lego.lp == lp_new({{2, 2}, {2, 1}}, {8, 6}, {16, 10}));
  REQUIRE(lego.expected.has_value());
  CHECK(lego.expected->first == 52);
  CHECK(lego.expected->second == Vector{2, 2});
  CHECK(example("klee_minty_3d").lp == klee_minty(3));
  CHECK(example("klee_minty_2d").lp == klee_minty(2));
  try {
    example("nonexistent");
    FAIL("expected UnknownExample");
  } catch (const UnknownExample& e) {
    CHECK(std::string(e.what()).find("lego_2d") != std::string::npos);
  }
}

TEST_CASE("Klee-Minty construction") {
  CHECK(klee_minty(1) == lp_new({{1}}, {5}, {1}));
  CHECK(klee_minty(2) == lp_new({{1, 0}, {4, 1}}, {5, 25}, {2, 1}));
  CHECK(klee_minty(3) == lp_new({{1, 0, 0}, {4, 1, 0}, {8, 4, 1}}, {5, 25, 125}, {4, 2, 1}));
}

TEST_CASE("pinned optima agree with the vertex oracle") {
  for (const auto& entry : example_catalog()) {
    CAPTURE(entry.name);
    SimplexTrace t = simplex_solve(entry.lp, PivotRule::dantzig);
    if (entry.expected) {
      CHECK(t.status == SolveStatus::optimal);
      CHECK(t.optimal_value == entry.expected->first);
      CHECK(t.optimal_point() == entry.expected->second);
      Rational best = entry.expected->first;
      for (const auto& v : testing::brute_force_vertices(entry.lp)) CHECK(testing::dot(entry.lp.c(), v) <= best);
    }
  }
  CHECK(simplex_solve(example("unbounded_2d").lp).status == SolveStatus::unbounded);
  CHECK(simplex_solve(example("cycling_beale").lp).status == SolveStatus::cycling_detected);
  CHECK(simplex_solve(example("phase1_needed_2d").lp).phase1.has_value());
  for (const auto& v : testing::brute_force_vertices(example("integrality_2d").lp)) {
    for (const auto& x : v) CHECK(x.is_integer());
  }
  for (const auto& v : testing::brute_force_vertices(example("dodecahedron_3d").lp)) {
    for (const auto& x : v) CHECK(x > 0);
  }
}
