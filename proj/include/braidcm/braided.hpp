/**
 * @file braided.hpp
 * @brief Braidings and twists of the shipped graded categories.
 *
 * Crossing convention: `braiding(ctx, X, Y)` is the positive crossing
 * tau_{X,Y}: X (x) Y -> Y (x) X, drawn with the strand coming from the left
 * passing over.  Every diagram in the library that contains a crossing is
 * transcribed with this braiding or with `braiding_inverse`, and the choice is
 * recorded next to the transcription.
 */
#pragma once

#include "check.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace braidcm {

struct MissingTwist : Error {
  using Error::Error;
};
struct DualityUnavailable : Error {
  using Error::Error;
};

/** \brief Trivial flip, q-graded symmetry, or an explicit provider (tests only). */
struct BraidingSpec {
  enum class Kind { Trivial, GradedQ, Explicit };
  Kind kind = Kind::Trivial;
  Scalar q = Scalar(1);
  std::function<Mor(const Obj&, const Obj&)> explicit_map;

  static BraidingSpec trivial() { return {}; }
  static BraidingSpec graded_q(const Scalar& q) {
    if (q.is_zero()) throw Error("GradedQ braiding needs an invertible q");
    BraidingSpec b;
    b.kind = Kind::GradedQ;
    b.q = q;
    return b;
  }
  static BraidingSpec explicit_braiding(std::function<Mor(const Obj&, const Obj&)> f) {
    BraidingSpec b;
    b.kind = Kind::Explicit;
    b.explicit_map = std::move(f);
    return b;
  }
};

/** \brief Identity, q^{|a|^2} grading twist, or an explicit provider. */
struct TwistSpec {
  enum class Kind { Identity, GradedQ, Explicit };
  Kind kind = Kind::Identity;
  Scalar q = Scalar(1);
  std::function<std::optional<Mor>(const Obj&)> explicit_map;

  static TwistSpec identity() { return {}; }
  static TwistSpec graded_q(const Scalar& q) {
    if (q.is_zero()) throw Error("GradedQ twist needs an invertible q");
    TwistSpec t;
    t.kind = Kind::GradedQ;
    t.q = q;
    return t;
  }
  static TwistSpec explicit_twist(std::function<std::optional<Mor>(const Obj&)> f) {
    TwistSpec t;
    t.kind = Kind::Explicit;
    t.explicit_map = std::move(f);
    return t;
  }
};

/** \brief The ambient braided category with twist. */
struct CategoryCtx {
  FieldSpec field;
  BraidingSpec braiding;
  TwistSpec twist;
};

namespace detail {

/** Diagonal-coefficient permutation a (x) b -> c(a,b) b (x) a. */
template <class Coef>
Mor graded_flip(const Obj& x, const Obj& y, Coef coef) {
  Obj d = tensor_obj(x, y), c = tensor_obj(y, x);
  Mor r(d, c);
  std::size_t m = x.dim(), n = y.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.set_column(a * n + b, {Entry{static_cast<std::uint32_t>(b * m + a), coef(x.grades[a], y.grades[b])}});
  return r;
}

/** q^e with a small cache for repeated exponents. */
inline Scalar qpow(const Scalar& q, long e) {
  if (q.is_one() || e == 0) return Scalar(1);
  return q.pow(e);
}

inline void require_field(const CategoryCtx& ctx, const Obj& x) {
  if (!(x.field == ctx.field)) throw FieldMismatch("object " + x.describe() + " is not over the category's field");
}

}  // namespace detail

/** tau_{X,Y}: X (x) Y -> Y (x) X */
inline Mor braiding(const CategoryCtx& ctx, const Obj& x, const Obj& y) {
  detail::require_field(ctx, x);
  detail::require_field(ctx, y);
  switch (ctx.braiding.kind) {
    case BraidingSpec::Kind::Trivial:
      return detail::graded_flip(x, y, [](int, int) { return Scalar(1); });
    case BraidingSpec::Kind::GradedQ: {
      const Scalar& q = ctx.braiding.q;
      return detail::graded_flip(x, y, [&](int a, int b) { return detail::qpow(q, static_cast<long>(a) * b); });
    }
    case BraidingSpec::Kind::Explicit:
      return ctx.braiding.explicit_map(x, y);
  }
  throw Error("unknown braiding kind");
}

/** tau_{X,Y}^{-1}: Y (x) X -> X (x) Y */
inline Mor braiding_inverse(const CategoryCtx& ctx, const Obj& x, const Obj& y) {
  detail::require_field(ctx, x);
  detail::require_field(ctx, y);
  switch (ctx.braiding.kind) {
    case BraidingSpec::Kind::Trivial:
      return detail::graded_flip(y, x, [](int, int) { return Scalar(1); });
    case BraidingSpec::Kind::GradedQ: {
      const Scalar& q = ctx.braiding.q;
      return detail::graded_flip(y, x, [&](int b, int a) { return detail::qpow(q, -static_cast<long>(a) * b); });
    }
    case BraidingSpec::Kind::Explicit:
      return inverse(ctx.braiding.explicit_map(x, y));
  }
  throw Error("unknown braiding kind");
}

/** theta_X */
inline Mor twist(const CategoryCtx& ctx, const Obj& x) {
  detail::require_field(ctx, x);
  switch (ctx.twist.kind) {
    case TwistSpec::Kind::Identity:
      return Mor::identity(x);
    case TwistSpec::Kind::GradedQ: {
      Mor r(x, x);
      for (std::size_t i = 0; i < x.dim(); ++i) {
        long g = x.grades[i];
        r.set_column(i, {Entry{static_cast<std::uint32_t>(i), detail::qpow(ctx.twist.q, g * g)}});
      }
      return r;
    }
    case TwistSpec::Kind::Explicit: {
      auto m = ctx.twist.explicit_map(x);
      if (!m) throw MissingTwist("explicit twist undefined at " + x.describe());
      return *m;
    }
  }
  throw Error("unknown twist kind");
}

inline Mor twist_inverse(const CategoryCtx& ctx, const Obj& x) {
  if (ctx.twist.kind == TwistSpec::Kind::Identity) return Mor::identity(x);
  return inverse(twist(ctx, x));
}

/**
 * \brief Hexagons, invertibility and naturality of the braiding.
 *
 * Hexagons are checked on every ordered triple of generators, invertibility
 * on every pair, and naturality on every ordered pair of test morphisms.
 */
inline Report check_braiding_axioms(const CategoryCtx& ctx, const std::vector<Obj>& gens,
                                    const std::vector<Mor>& test_mors) {
  if (gens.empty()) throw Error("check_braiding_axioms: empty generator list");
  Report rep;
  auto id = [](const Obj& o) { return Mor::identity(o); };
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Obj &x = gens[a], &y = gens[b];
      std::string tag = "(" + std::to_string(a) + "," + std::to_string(b);
      rep.expect_equal("invertible " + tag + ")", compose(braiding_inverse(ctx, x, y), braiding(ctx, x, y)),
                       id(tensor_obj(x, y)));
      rep.expect_equal("invertible' " + tag + ")", compose(braiding(ctx, x, y), braiding_inverse(ctx, x, y)),
                       id(tensor_obj(y, x)));
      for (std::size_t c = 0; c < gens.size(); ++c) {
        const Obj& z = gens[c];
        std::string t3 = tag + "," + std::to_string(c) + ")";
        // br1: tau_{X,Y(x)Z} = (id_Y (x) tau_{X,Z})(tau_{X,Y} (x) id_Z)
        rep.expect_equal("br1 " + t3, braiding(ctx, x, tensor_obj(y, z)),
                         compose(tensor_mor(id(y), braiding(ctx, x, z)), tensor_mor(braiding(ctx, x, y), id(z))));
        // br2: tau_{X(x)Y,Z} = (tau_{X,Z} (x) id_Y)(id_X (x) tau_{Y,Z})
        rep.expect_equal("br2 " + t3, braiding(ctx, tensor_obj(x, y), z),
                         compose(tensor_mor(braiding(ctx, x, z), id(y)), tensor_mor(id(x), braiding(ctx, y, z))));
      }
    }
  for (std::size_t a = 0; a < test_mors.size(); ++a)
    for (std::size_t b = 0; b < test_mors.size(); ++b) {
      const Mor &f = test_mors[a], &g = test_mors[b];
      rep.expect_equal("naturality (" + std::to_string(a) + "," + std::to_string(b) + ")",
                       compose(braiding(ctx, f.cod, g.cod), tensor_mor(f, g)),
                       compose(tensor_mor(g, f), braiding(ctx, f.dom, g.dom)));
    }
  return rep;
}

/** theta_{X(x)Y} = (theta_X (x) theta_Y) tau_{Y,X} tau_{X,Y} */
inline bool check_twist_axiom(const CategoryCtx& ctx, const Obj& x, const Obj& y) {
  Mor lhs = twist(ctx, tensor_obj(x, y));
  Mor rhs = compose(tensor_mor(twist(ctx, x), twist(ctx, y)), compose(braiding(ctx, y, x), braiding(ctx, x, y)));
  return lhs == rhs;
}

enum class Side { Left, Right };

/**
 * \brief Left or right twist computed from the graded duality data.
 *
 * The dual X* has the negated grades; coev: 1 -> X (x) X*, the evaluation
 * maps pair e^i with e_j to delta_ij.  Only the shipped graded braidings have
 * this duality data.
 */
inline Mor twist_from_duality(const CategoryCtx& ctx, Side side, const Obj& x) {
  if (ctx.braiding.kind == BraidingSpec::Kind::Explicit)
    throw DualityUnavailable("no duality data for an explicit braiding");
  std::vector<int> neg;
  for (int g : x.grades) neg.push_back(-g);
  Obj xs(x.name + "*", neg, x.field);
  Obj one = Obj::unit(x.field);
  std::size_t n = x.dim();
  Mor coev(one, tensor_obj(x, xs)), coev_t(one, tensor_obj(xs, x));
  Mor ev(tensor_obj(xs, x), one), ev_t(tensor_obj(x, xs), one);
  for (std::size_t i = 0; i < n; ++i) {
    coev.add(i * n + i, 0, Scalar(1));
    coev_t.add(i * n + i, 0, Scalar(1));
    ev.add(0, i * n + i, Scalar(1));
    ev_t.add(0, i * n + i, Scalar(1));
  }
  Mor idx = Mor::identity(x), idxs = Mor::identity(xs);
  Mor r;
  if (side == Side::Left) {
    // (id_X (x) ev~)(tau_{X,X} (x) id_{X*})(id_X (x) coev)
    r = compose_all({tensor_mor(idx, ev_t), tensor_mor(braiding(ctx, x, x), idxs), tensor_mor(idx, coev)});
  } else {
    // (ev (x) id_X)(id_{X*} (x) tau_{X,X})(coev~ (x) id_X)
    r = compose_all({tensor_mor(ev, idx), tensor_mor(idxs, braiding(ctx, x, x)), tensor_mor(coev_t, idx)});
  }
  return relabel(r, x, x);
}

}  // namespace braidcm
