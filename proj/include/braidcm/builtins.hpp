/**
 * @file builtins.hpp
 * @brief Structure-constant descriptions of algebras and the built-in registry.
 *
 * An AlgebraSpec is the canonical in-memory form of an algebra file: sparse
 * structure constants keyed by basis indices (duplicates already summed), so
 * two files that differ only in triple ordering have equal specs.
 */
#pragma once

#include "hopf.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidcm {

struct UnknownBuiltin : Error {
  using Error::Error;
};

using Triples = std::map<std::array<int, 3>, Scalar>;

/** \brief A named modular pair as vectors: delta(e_i) and sigma's coordinates. */
struct PairSpec {
  std::string name;
  std::vector<Scalar> delta;
  std::vector<Scalar> sigma;
};

/** \brief A right H-module coalgebra given by structure constants. */
struct ModuleCoalgebraSpec {
  std::vector<int> grades;
  Triples comult;  // (i, j, k): D(c_i) has coefficient on c_j (x) c_k
  std::vector<Scalar> counit;
  Triples action;  // (i, j, k): c_i . h_j has coefficient on c_k
};

/** \brief Braiding/twist kind with optional parameter q. */
struct GradingSpec {
  bool graded = false;
  Scalar q = Scalar(1);
};

struct AlgebraSpec {
  std::string name;
  FieldSpec field;
  std::vector<int> grades;
  GradingSpec braiding, twist;
  Triples mult;    // (i, j, k): e_i e_j has coefficient on e_k
  std::vector<Scalar> unit;
  Triples comult;  // (i, j, k): D(e_i) has coefficient on e_j (x) e_k
  std::vector<Scalar> counit;
  std::vector<std::vector<Scalar>> antipode;  // rows = output coordinates
  std::vector<PairSpec> pairs;
  std::optional<ModuleCoalgebraSpec> module_coalgebra;
  int n_max_cap = 0;  // 0 = no cap

  std::size_t dim() const { return grades.size(); }
};

inline void add_triple(Triples& t, int i, int j, int k, const Scalar& s) {
  auto& slot = t[{i, j, k}];
  slot += s;
  if (slot.is_zero()) t.erase({i, j, k});
}

inline CategoryCtx make_ctx(const AlgebraSpec& s) {
  CategoryCtx ctx;
  ctx.field = s.field;
  ctx.braiding = s.braiding.graded ? BraidingSpec::graded_q(s.braiding.q) : BraidingSpec::trivial();
  ctx.twist = s.twist.graded ? TwistSpec::graded_q(s.twist.q) : TwistSpec::identity();
  return ctx;
}

/** Bilinear map from triples: X (x) Y -> Z with (i, j, k) meaning x_i (x) y_j -> z_k. */
inline Mor bilinear_mor(const Obj& x, const Obj& y, const Obj& z, const Triples& t) {
  Mor m(tensor_obj(x, y), z);
  for (const auto& [idx, s] : t) {
    auto [i, j, k] = idx;
    if (i < 0 || j < 0 || k < 0 || static_cast<std::size_t>(i) >= x.dim() || static_cast<std::size_t>(j) >= y.dim() ||
        static_cast<std::size_t>(k) >= z.dim())
      throw ShapeError("structure constant index out of range");
    m.add(k, i * y.dim() + j, s);
  }
  return m;
}

/** Cobilinear map from triples: X -> Y (x) Z with (i, j, k) meaning x_i -> y_j (x) z_k. */
inline Mor cobilinear_mor(const Obj& x, const Obj& y, const Obj& z, const Triples& t) {
  Mor m(x, tensor_obj(y, z));
  for (const auto& [idx, s] : t) {
    auto [i, j, k] = idx;
    if (i < 0 || j < 0 || k < 0 || static_cast<std::size_t>(i) >= x.dim() || static_cast<std::size_t>(j) >= y.dim() ||
        static_cast<std::size_t>(k) >= z.dim())
      throw ShapeError("structure constant index out of range");
    m.add(j * z.dim() + k, i, s);
  }
  return m;
}

/** Builds the Hopf algebra without validation. */
inline HopfAlgebra instantiate_unchecked(const AlgebraSpec& s) {
  CategoryCtx ctx = make_ctx(s);
  Obj H("H", s.grades, s.field);
  if (s.antipode.size() != s.dim()) throw ShapeError("antipode matrix has wrong row count");
  return HopfAlgebra::unchecked(ctx, H, bilinear_mor(H, H, H, s.mult), vector_mor(H, s.unit),
                                cobilinear_mor(H, H, H, s.comult), covector_mor(H, s.counit),
                                Mor::from_rows(H, H, s.antipode));
}

/** Builds and validates; throws ValidationError with the AxiomReport. */
inline HopfAlgebra instantiate(const AlgebraSpec& s) {
  HopfAlgebra a = instantiate_unchecked(s);
  Report r = check_hopf_axioms(a);
  if (!r.passed()) throw ValidationError("Hopf axiom '" + r.first_failure()->name + "' fails", r);
  return a;
}

namespace detail {

inline std::vector<Scalar> basis_vec(std::size_t d, std::size_t i) {
  std::vector<Scalar> v(d);
  v[i] = Scalar(1);
  return v;
}

inline std::vector<std::vector<Scalar>> zero_square(std::size_t d) {
  return std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d));
}

/** Group algebra with multiplication table mul[i][j] and inverse table. */
inline AlgebraSpec group_algebra(const std::string& name, const std::vector<std::vector<int>>& mul,
                                 const std::vector<int>& inv) {
  AlgebraSpec s;
  s.name = name;
  std::size_t d = mul.size();
  s.grades.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) add_triple(s.mult, static_cast<int>(i), static_cast<int>(j), mul[i][j], 1);
  s.unit = basis_vec(d, 0);
  for (std::size_t i = 0; i < d; ++i) add_triple(s.comult, static_cast<int>(i), static_cast<int>(i), static_cast<int>(i), 1);
  s.counit.assign(d, Scalar(1));
  s.antipode = zero_square(d);
  for (std::size_t i = 0; i < d; ++i) s.antipode[inv[i]][i] = Scalar(1);
  s.pairs.push_back({"eu", s.counit, s.unit});
  return s;
}

}  // namespace detail

/** H = k with every structure map the scalar 1. */
inline AlgebraSpec builtin_trivial() {
  return detail::group_algebra("trivial", {{0}}, {0});
}

/** Q[C2] with basis (e, g). */
inline AlgebraSpec builtin_group_c2() {
  return detail::group_algebra("group_c2", {{0, 1}, {1, 0}}, {0, 1});
}

/** Q[S3]; basis = permutations of {0,1,2} in lexicographic order, identity first. */
inline AlgebraSpec builtin_group_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  std::vector<int> inv(6);
  for (int i = 0; i < 6; ++i) {
    std::array<int, 3> r{};
    for (int t = 0; t < 3; ++t) r[perms[i][t]] = t;
    inv[i] = index(r);
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int t = 0; t < 3; ++t) c[t] = perms[i][perms[j][t]];  // (ij)(t) = i(j(t))
      mul[i][j] = index(c);
    }
  }
  AlgebraSpec s = detail::group_algebra("group_s3", mul, inv);
  s.n_max_cap = 3;
  return s;
}

/**
 * Sweedler's four-dimensional algebra, basis (1, g, x, gx):
 * g^2 = 1, x^2 = 0, xg = -gx, D(x) = x (x) 1 + g (x) x, S(x) = -gx.
 */
inline AlgebraSpec builtin_sweedler() {
  AlgebraSpec s;
  s.name = "sweedler";
  s.grades = {0, 0, 0, 0};
  enum { ONE = 0, G = 1, X = 2, GX = 3 };
  // Products of basis monomials g^a x^b with xg = -gx.
  auto mono = [](int i) { return std::array<int, 2>{i == G || i == GX ? 1 : 0, i == X || i == GX ? 1 : 0}; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [a1, b1] = mono(i);
      auto [a2, b2] = mono(j);
      if (b1 + b2 > 1) continue;
      int sign = (b1 == 1 && a2 == 1) ? -1 : 1;  // move x past g
      int a = (a1 + a2) % 2, b = b1 + b2;
      int k = a == 0 ? (b == 0 ? ONE : X) : (b == 0 ? G : GX);
      add_triple(s.mult, i, j, k, sign);
    }
  s.unit = detail::basis_vec(4, ONE);
  add_triple(s.comult, ONE, ONE, ONE, 1);
  add_triple(s.comult, G, G, G, 1);
  add_triple(s.comult, X, X, ONE, 1);
  add_triple(s.comult, X, G, X, 1);
  add_triple(s.comult, GX, GX, G, 1);
  add_triple(s.comult, GX, ONE, GX, 1);
  s.counit = {1, 1, 0, 0};
  s.antipode = detail::zero_square(4);
  s.antipode[ONE][ONE] = 1;
  s.antipode[G][G] = 1;
  s.antipode[GX][X] = -1;
  s.antipode[X][GX] = 1;
  s.pairs.push_back({"eu", s.counit, s.unit});
  s.pairs.push_back({"eg", s.counit, detail::basis_vec(4, G)});
  return s;
}

/** Sweedler's algebra with the antipode corrupted to S(x) = +gx. */
inline AlgebraSpec corrupted_sweedler() {
  AlgebraSpec s = builtin_sweedler();
  s.name = "sweedler_corrupted";
  s.antipode[3][2] = 1;
  return s;
}

/**
 * k[x]/(x^2) with x primitive of grade 1 in the q-graded category.  The
 * braided bialgebra axiom forces q = -1; other values fail validation.
 */
inline AlgebraSpec builtin_anyonic_line(const Scalar& q = Scalar(-1), FieldSpec field = {}) {
  AlgebraSpec s;
  s.name = "anyonic_line_q";
  s.field = field;
  s.grades = {0, 1};
  s.braiding = {true, q};
  s.twist = {true, q};
  add_triple(s.mult, 0, 0, 0, 1);
  add_triple(s.mult, 0, 1, 1, 1);
  add_triple(s.mult, 1, 0, 1, 1);
  add_triple(s.comult, 0, 0, 0, 1);
  add_triple(s.comult, 1, 1, 0, 1);
  add_triple(s.comult, 1, 0, 1, 1);
  s.unit = {1, 0};
  s.counit = {1, 0};
  s.antipode = {{1, 0}, {0, -1}};
  s.pairs.push_back({"eu", s.counit, s.unit});
  return s;
}

inline std::vector<std::string> builtin_names() {
  return {"trivial", "group_c2", "group_s3", "sweedler", "anyonic_line_q"};
}

/** Registry lookup; `q` is only used by anyonic_line_q. */
inline AlgebraSpec builtin(const std::string& name, const Scalar& q = Scalar(-1), FieldSpec field = {}) {
  if (name == "trivial") return builtin_trivial();
  if (name == "group_c2") return builtin_group_c2();
  if (name == "group_s3") return builtin_group_s3();
  if (name == "sweedler") return builtin_sweedler();
  if (name == "anyonic_line_q") return builtin_anyonic_line(q, field);
  throw UnknownBuiltin("unknown built-in algebra '" + name + "'");
}

}  // namespace braidcm
