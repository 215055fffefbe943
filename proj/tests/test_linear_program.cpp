#include <doctest.h>

#include <random>

#include "lpviz/errors.hpp"
#include "lpviz/linear_program.hpp"
#include "support.hpp"

using namespace lpviz;

namespace {

LinearProgram lego() { return lp_new({{2, 2}, {2, 1}}, {8, 6}, {16, 10}); }

}  // namespace

TEST_CASE("lp_new validates shapes") {
  LinearProgram lp = lego();
  CHECK(lp.n() == 2);
  CHECK(lp.m() == 2);
  CHECK(lp.variable_names() == std::vector<std::string>{"x1", "x2", "x3", "x4"});

  LinearProgram point = lp_new({{1}}, {0}, {0});
  CHECK(point.is_feasible(Vector{0}));
  CHECK_FALSE(point.is_feasible(Vector{1}));

  CHECK_THROWS_AS(lp_new({{1, 1}}, {3}, {1}), DimensionMismatch);
  CHECK_THROWS_AS(lp_new({{1, 1}}, {3, 4}, {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(lp_new({{1, 1}, {1}}, {3, 4}, {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(lp_new({}, {}, {}), DimensionMismatch);
  CHECK_THROWS_AS(LinearProgram({{1}}, {1}, {1}, {"a", "b", "c"}), DimensionMismatch);
  CHECK(LinearProgram({{1}}, {1}, {1}, {"tables"}).name(1) == "x2");
  CHECK(LinearProgram({{1}}, {1}, {1}, {"tables", "bricks"}).name(1) == "bricks");
  CHECK(lp.name(kArtificial) == "x0");
}

TEST_CASE("equality form of the Lego LP") {
  LinearProgram lp = lego();
  EqualityForm form = to_equality_form(lp);
  CHECK(form.slack_indices == std::vector<VarId>{2, 3});
  REQUIRE(form.rows.size() == 2);
  CHECK(form.rows[0].slack == 2);
  CHECK(form.rows[0].constant == 8);
  CHECK(form.rows[0].coeffs == Vector{-2, -2});
  CHECK(form.rows[1].constant == 6);
  CHECK(form.rows[1].coeffs == Vector{-2, -1});
  CHECK(form.evaluate(Vector{2, 2}) == Vector{0, 0});
  CHECK(lp.full_solution(Vector{2, 2}) == Vector{2, 2, 0, 0});
  CHECK(lp.objective(Vector{2, 2}) == 52);

  EqualityForm single = to_equality_form(lp_new({{1}}, {5}, {1}));
  CHECK(single.rows[0].constant == 5);
  CHECK(single.rows[0].coeffs == Vector{-1});
}

TEST_CASE("equality form agrees with direct evaluation on random LPs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    LinearProgram lp = testing::random_lp(rng, 2 + trial % 2, 1 + trial % 6);
    EqualityForm form = to_equality_form(lp);
    Vector x(lp.n());
    for (auto& v : x) v = Rational(static_cast<int>(rng() % 7));
    Vector slacks = form.evaluate(x);
    for (int i = 0; i < lp.m(); ++i) CHECK(slacks[i] == lp.b()[i] - testing::dot(lp.A()[i], x));
    CHECK(lp.is_feasible(x) == testing::satisfies(lp, x));
  }
}

TEST_CASE("with_rows appends rows and slack ids") {
  LinearProgram lp = LinearProgram({{2, 2}, {2, 1}}, {8, 6}, {16, 10}, {"tables", "chairs"});
  LinearProgram more = lp.with_rows({{1, 0}}, {1});
  CHECK(more.m() == 3);
  CHECK(more.name(0) == "tables");
  CHECK(more.name(4) == "x5");
  CHECK(more.A()[2] == Vector{1, 0});
}

TEST_CASE("JSON input keeps decimals exact") {
  LinearProgram lp = parse_lp_json(R"({"A": [[2, 2], [2, 1]], "b": [8, 6.5], "c": ["16", "1/3"]})");
  CHECK(lp.b()[1] == Rational(Integer(13), Integer(2)));
  CHECK(lp.c()[1] == Rational(Integer(1), Integer(3)));
  LinearProgram tenth = parse_lp_json(R"({"A": [[0.1]], "b": [1e-1], "c": [1], "variable_names": ["t"]})");
  CHECK(tenth.A()[0][0] == Rational(Integer(1), Integer(10)));
  CHECK(tenth.b()[0] == Rational(Integer(1), Integer(10)));
  CHECK(tenth.name(0) == "t");

  CHECK_THROWS_AS(parse_lp_json("{"), ParseError);
  CHECK_THROWS_AS(parse_lp_json(R"({"A": [[1]], "b": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_lp_json(R"({"A": [[1]], "b": [1], "c": [1], "d": 0})"), ParseError);
  CHECK_THROWS_AS(parse_lp_json(R"({"A": [["x"]], "b": [1], "c": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_lp_json(R"({"A": [[1, 2]], "b": [1], "c": [1]})"), DimensionMismatch);
}

TEST_CASE("inline shorthand") {
  CHECK(parse_lp_inline("A=[[2,2],[2,1]];b=[8,6];c=[16,10]") == lego());
  LinearProgram frac = parse_lp_inline("A=[[1/2, 1]]; b=[3/4]; c=[1, -2/3]");
  CHECK(frac.A()[0][0] == Rational(Integer(1), Integer(2)));
  CHECK(frac.c()[1] == Rational(Integer(-2), Integer(3)));
  CHECK_THROWS_AS(parse_lp_inline("A=[[1]];b=[1]"), ParseError);
  CHECK_THROWS_AS(parse_lp_inline("nonsense"), ParseError);
}

TEST_CASE("constraint and expression formatting") {
  LinearProgram lp = lego();
  CHECK(format_constraint(lp, 0) == "2x1 + 2x2 <= 8");
  CHECK(format_constraint(lp, 1) == "2x1 + x2 <= 6");
  CHECK(format_linear(lp, lp.c()) == "16x1 + 10x2");
  LinearProgram mixed = lp_new({{-1, Rational(Integer(1), Integer(2))}}, {-2}, {0, -1});
  CHECK(format_constraint(mixed, 0) == "-x1 + (1/2)x2 <= -2");
  CHECK(format_linear(mixed, mixed.c()) == "-x2");
  CHECK(format_linear(mixed, Vector{0, 0}) == "0");
}
