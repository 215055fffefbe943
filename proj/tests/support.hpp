#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the solver or geometry code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lpviz/linear_program.hpp"

namespace lpviz::testing {

inline Rational dot(const Vector& a, const Vector& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

/// Direct check of A x <= b, x >= 0.
inline bool satisfies(const LinearProgram& lp, const Vector& x) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (int i = 0; i < lp.m(); ++i) {
    if (dot(lp.A()[i], x) > lp.b()[i]) return false;
  }
  return true;
}

/// Leibniz determinant.
inline Rational determinant(const Matrix& M) {
  const int n = static_cast<int>(M.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= M[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Cramer's rule; empty when singular.
inline std::optional<Vector> cramer(const Matrix& M, const Vector& rhs) {
  Rational det = determinant(M);
  if (det.is_zero()) return std::nullopt;
  Vector x(M.size());
  for (std::size_t k = 0; k < M.size(); ++k) {
    Matrix Mk = M;
    for (std::size_t i = 0; i < M.size(); ++i) Mk[i][k] = rhs[i];
    x[k] = determinant(Mk) / det;
  }
  return x;
}

/// Every feasible point where some n of the n+m constraints (x_j = 0 or
/// A_i x = b_i) meet in a single point.
inline std::set<Vector> brute_force_vertices(const LinearProgram& lp) {
  const int n = lp.n();
  const int total = n + lp.m();
  std::set<Vector> out;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    Matrix M;
    Vector rhs;
    for (int id = 0; id < total; ++id) {
      if (!pick[id]) continue;
      if (id < n) {
        Vector e(n, Rational(0));
        e[id] = 1;
        M.push_back(e);
        rhs.emplace_back(0);
      } else {
        M.push_back(lp.A()[id - n]);
        rhs.push_back(lp.b()[id - n]);
      }
    }
    if (auto x = cramer(M, rhs); x && satisfies(lp, *x)) out.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Best integer point in the box [0, upper]^n, by exhaustive search.
inline std::optional<std::pair<Vector, Rational>> brute_force_integer(const LinearProgram& lp, int upper) {
  const int n = lp.n();
  std::optional<std::pair<Vector, Rational>> best;
  std::vector<int> x(n, 0);
  while (true) {
    Vector point(x.begin(), x.end());
    if (satisfies(lp, point)) {
      Rational value = dot(lp.c(), point);
      if (!best || value > best->second) best = std::make_pair(point, value);
    }
    int k = 0;
    while (k < n && x[k] == upper) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return best;
}

/// Random LP that is feasible (a known interior-ish point satisfies every
/// row) and bounded (one row has all positive coefficients). Some rows have
/// negative right-hand sides, which forces Phase I.
inline LinearProgram random_lp(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> coeff(-4, 6);
  std::uniform_int_distribution<int> positive(1, 5);
  std::uniform_int_distribution<int> point(1, 4);
  std::uniform_int_distribution<int> margin(0, 3);
  std::uniform_int_distribution<int> den(1, 2);
  Vector anchor(n);
  for (auto& v : anchor) v = Rational(point(rng));
  Matrix A;
  Vector b;
  for (int i = 0; i < m; ++i) {
    Vector row(n);
    for (auto& a : row) a = i == 0 ? Rational(positive(rng)) : Rational(Integer(coeff(rng)), Integer(den(rng)));
    Rational rhs = dot(row, anchor) + margin(rng);
    A.push_back(row);
    b.push_back(rhs);
  }
  Vector c(n);
  for (auto& v : c) v = Rational(coeff(rng));
  return LinearProgram(A, b, c);
}

}  // namespace lpviz::testing
