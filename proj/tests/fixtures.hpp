/**
 * @file fixtures.hpp
 * @brief Test-only algebras that complement the built-in registry.
 */
#pragma once

#include <braidcm/traces.hpp>

#include <ostream>
#include <random>

namespace braidcm {

// Readable failure output for gtest.
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Mor& m, std::ostream* os) {
  *os << m.rows() << "x" << m.cols() << " [";
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) *os << " (" << e.row << "," << j << ")=" << e.value.to_string();
  *os << " ]";
}

}  // namespace braidcm

namespace braidcm::fixtures {

/**
 * k[x]/(x^3) over Q(z), z a primitive cube root of unity, x primitive of
 * grade 1, in the z-graded category with the z-graded twist.  Its braiding is
 * not symmetric, so it distinguishes a crossing from its inverse.
 */
inline AlgebraSpec anyonic_cube() {
  AlgebraSpec s;
  s.name = "anyonic_cube";
  s.field = FieldSpec::cyclotomic(3);
  Scalar z = Scalar::root_of_unity(3);
  s.grades = {0, 1, 2};
  s.braiding = {true, z};
  s.twist = {true, z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) add_triple(s.mult, i, j, i + j, 1);
  // D(x^k) = sum_i [k choose i]_z x^i (x) x^{k-i}
  add_triple(s.comult, 0, 0, 0, 1);
  add_triple(s.comult, 1, 1, 0, 1);
  add_triple(s.comult, 1, 0, 1, 1);
  add_triple(s.comult, 2, 2, 0, 1);
  add_triple(s.comult, 2, 1, 1, Scalar(1) + z);
  add_triple(s.comult, 2, 0, 2, 1);
  s.unit = {1, 0, 0};
  s.counit = {1, 0, 0};
  // S(x) = -x, S(x^2) = z x^2 (braided anti-multiplicativity)
  s.antipode = {{1, 0, 0}, {0, -1, 0}, {0, 0, z}};
  s.pairs.push_back({"eu", s.counit, s.unit});
  return s;
}

/** Sweedler's algebra with the character delta(g) = -1, delta(x) = 0 paired with u. */
inline PairSpec sweedler_sign_pair() {
  return {"du", {1, -1, 0, 0}, {1, 0, 0, 0}};
}

/** Sign character of S3 paired with u (basis order of builtin_group_s3). */
inline PairSpec s3_sign_pair() {
  // lexicographic permutations: 012, 021, 102, 120, 201, 210
  return {"sign", {1, -1, -1, 1, 1, -1}, {1, 0, 0, 0, 0, 0}};
}

/**
 * The underlying coalgebra of an algebra spec with every grade negated.  Its
 * tensor product with H (see tensor_module_coalgebra) has grade-0 traces
 * built from top-degree elements, which makes trace tests non-vacuous in
 * graded categories.
 */
inline Coalgebra negated_coalgebra(const AlgebraSpec& s) {
  std::vector<int> g;
  for (int x : s.grades) g.push_back(-x);
  Obj D("D", g, s.field);
  return {D, cobilinear_mor(D, D, D, s.comult), covector_mor(D, s.counit)};
}

/**
 * A random composable generator word whose levels stay within [0, top].
 * Generators are drawn in application order and written right to left.
 */
inline GenWord random_word(std::mt19937& rng, int top, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len), lvl_d(0, top);
  int len = len_d(rng);
  int level = lvl_d(rng);
  const int source = level;
  std::vector<Gen> applied;
  for (int k = 0; k < len; ++k) {
    std::vector<Gen> options;
    if (level + 1 <= top)
      for (int i = 0; i <= level + 1; ++i) options.push_back({Gen::Kind::Coface, level + 1, i});
    if (level >= 1)
      for (int j = 0; j <= level - 1; ++j) options.push_back({Gen::Kind::Codegen, level - 1, j});
    for (int r = 0; r < 2; ++r) {
      options.push_back({Gen::Kind::Tau, level, 0});
      options.push_back({Gen::Kind::TauInv, level, 0});
    }
    Gen g = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    applied.push_back(g);
    level = g.dst();
  }
  std::reverse(applied.begin(), applied.end());
  return make_word(std::move(applied), source);
}

}  // namespace braidcm::fixtures
