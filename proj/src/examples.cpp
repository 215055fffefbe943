#include "lpviz/examples.hpp"

#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

namespace {

Vector row(std::initializer_list<Rational> values) { return Vector(values); }

Integer power(int base, int exponent) {
  Integer out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Regular dodecahedron with the golden ratio rounded to 13/8: face normals
/// are the cyclic permutations of (0, +-8, +-13), each face at distance
/// 60/|normal| from the centre (6, 6, 6).
LinearProgram dodecahedron() {
  Matrix A;
  Vector b;
  const int center = 6;
  const int offset = 60;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const int p = 8 * s1;
      const int q = 13 * s2;
      for (const auto& normal : {Vector{0, p, q}, Vector{p, q, 0}, Vector{q, 0, p}}) {
        Rational rhs = offset;
        for (const auto& a : normal) rhs += a * center;
        A.push_back(normal);
        b.push_back(rhs);
      }
    }
  }
  return LinearProgram(std::move(A), std::move(b), row({1, 2, 3}));
}

Rational frac(long long p, long long q) { return Rational(Integer(p), Integer(q)); }

std::vector<ExampleEntry> build_catalog() {
  std::vector<ExampleEntry> out;

  out.push_back({"lego_2d",
                 LinearProgram({row({2, 2}), row({2, 1})}, row({8, 6}), row({16, 10})),
                 "Tables and chairs from a bag of Lego bricks; optimum at the corner (2, 2).",
                 std::make_pair(Rational(52), row({2, 2}))});

  out.push_back({"klee_minty_2d", klee_minty(2),
                 "Klee-Minty cube, n = 2: Dantzig's rule visits all 4 corner points.",
                 std::make_pair(Rational(25), row({0, 25}))});

  out.push_back({"klee_minty_3d", klee_minty(3),
                 "Klee-Minty cube, n = 3: Dantzig's rule visits all 8 corner points.",
                 std::make_pair(Rational(125), row({0, 0, 125}))});

  out.push_back({"degenerate_2d",
                 LinearProgram({row({-1, 1}), row({1, 0}), row({1, 1})}, row({0, 2, 4}),
                               row({1, 2})),
                 "Degenerate corners at (0, 0) and (2, 2); the first pivot does not move.",
                 std::make_pair(Rational(6), row({2, 2}))});

  out.push_back({"cycling_beale",
                 LinearProgram({row({frac(1, 2), frac(-11, 2), frac(-5, 2), 9}),
                                row({frac(1, 2), frac(-3, 2), frac(-1, 2), 1}), row({1, 0, 0, 0})},
                               row({0, 0, 1}), row({10, -57, -9, -24})),
                 "Beale's example: cycles under Dantzig's rule, Bland's rule terminates.",
                 std::nullopt});

  out.push_back({"multiple_optima_2d",
                 LinearProgram({row({1, 1}), row({1, 0}), row({0, 1})}, row({4, 3, 3}), row({1, 1})),
                 "Objective parallel to x1 + x2 <= 4: every point of that edge is optimal.",
                 std::make_pair(Rational(4), row({3, 1}))});

  out.push_back({"phase1_needed_2d",
                 LinearProgram({row({-1, -1}), row({1, 2}), row({3, 1})}, row({-2, 8, 9}),
                               row({3, 2})),
                 "The origin violates x1 + x2 >= 2, so Phase I finds the first corner.",
                 std::make_pair(Rational(12), row({2, 3}))});

  out.push_back({"unbounded_2d",
                 LinearProgram({row({-1, 1}), row({1, -1})}, row({1, 1}), row({1, 1})),
                 "The objective grows without bound along the direction (1, 1).", std::nullopt});

  out.push_back({"integrality_2d",
                 LinearProgram({row({1, 0}), row({0, 1}), row({1, 1})}, row({3, 4, 5}), row({2, 3})),
                 "Totally unimodular constraints: every corner point is integral.",
                 std::make_pair(Rational(14), row({1, 4}))});

  out.push_back({"dodecahedron_3d", dodecahedron(),
                 "Rational stand-in for a regular dodecahedron; a branch and bound showcase.",
                 std::nullopt});

  return out;
}

}  // namespace

std::span<const ExampleEntry> example_catalog() {
  static const std::vector<ExampleEntry> catalog = build_catalog();
  return catalog;
}

const ExampleEntry& example(std::string_view name) {
  for (const auto& entry : example_catalog()) {
    if (entry.name == name) return entry;
  }
  std::string names;
  for (const auto& entry : example_catalog()) names += (names.empty() ? "" : ", ") + entry.name;
  throw UnknownExample("unknown example \"" + std::string(name) + "\" (available: " + names + ")");
}

LinearProgram klee_minty(int n) {
  if (n < 1) throw std::invalid_argument("Klee-Minty dimension must be at least 1");
  Matrix A;
  Vector b;
  Vector c;
  for (int j = 1; j <= n; ++j) c.emplace_back(power(2, n - j));
  for (int i = 1; i <= n; ++i) {
    Vector r(static_cast<std::size_t>(n));
    for (int j = 1; j < i; ++j) r[j - 1] = Rational(2 * power(2, i - j));
    r[i - 1] = 1;
    A.push_back(std::move(r));
    b.emplace_back(power(5, i));
  }
  return LinearProgram(std::move(A), std::move(b), std::move(c));
}

}  // namespace lpviz
