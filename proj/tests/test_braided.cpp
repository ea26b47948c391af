#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace braidcm;

namespace {

CategoryCtx graded(const Scalar& q, FieldSpec f) {
  CategoryCtx c;
  c.field = f;
  c.braiding = BraidingSpec::graded_q(q);
  c.twist = TwistSpec::graded_q(q);
  return c;
}

}  // namespace

TEST(Braiding, GradedBraidingHasTheDefiningCoefficients) {
  CategoryCtx ctx = graded(Scalar(-1), {});
  Obj x("X", {0, 1}), y("Y", {1, 2});
  Mor t = braiding(ctx, x, y);
  // e_a (x) f_b -> (-1)^{|a||b|} f_b (x) e_a ; index a*2+b -> b*2+a
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Scalar c = ((x.grades[a] * y.grades[b]) % 2) ? Scalar(-1) : Scalar(1);
      EXPECT_EQ(t.at(b * 2 + a, a * 2 + b), c);
    }
}

TEST(Braiding, HexagonsInvertibilityAndNaturalityForSeveralCategories) {
  Scalar z = Scalar::root_of_unity(3);
  std::vector<CategoryCtx> ctxs{CategoryCtx{}, graded(Scalar(-1), {}), graded(Scalar(2), {}),
                                graded(z, FieldSpec::cyclotomic(3))};
  for (const auto& ctx : ctxs) {
    Obj a("A", {0, 1}, ctx.field), b("B", {2}, ctx.field), c("C", {1, -1, 0}, ctx.field);
    // grade-preserving test morphisms
    Mor f(a, a);
    f.add(0, 0, Scalar(3));
    f.add(1, 1, Scalar(-1));
    Mor g(c, c);
    g.add(0, 0, Scalar(1));
    g.add(2, 2, Scalar(5));
    Report r = check_braiding_axioms(ctx, {a, b, c}, {f, g, Mor::identity(b)});
    EXPECT_TRUE(r.passed()) << (r.first_failure() ? r.first_failure()->name : "");
    EXPECT_GT(r.items.size(), 27u);
  }
}

TEST(Braiding, NonSymmetricBraidingIsNotItsOwnInverse) {
  CategoryCtx ctx = graded(Scalar::root_of_unity(3), FieldSpec::cyclotomic(3));
  Obj x("X", {1}, ctx.field);
  EXPECT_FALSE(braiding(ctx, x, x) == braiding_inverse(ctx, x, x));
  CategoryCtx sym = graded(Scalar(-1), {});
  Obj y("Y", {1});
  EXPECT_EQ(braiding(sym, y, y), braiding_inverse(sym, y, y));
}

TEST(Twist, BalancingAxiomHolds) {
  for (const auto& ctx : {graded(Scalar(-1), {}), graded(Scalar::root_of_unity(3), FieldSpec::cyclotomic(3)),
                          graded(Scalar(1, 2), {})}) {
    Obj a("A", {0, 1, 2}, ctx.field), b("B", {1, -2}, ctx.field);
    EXPECT_TRUE(check_twist_axiom(ctx, a, b));
    EXPECT_TRUE(check_twist_axiom(ctx, b, b));
  }
}

TEST(Twist, WrongTwistFailsBalancing) {
  CategoryCtx ctx = graded(Scalar::root_of_unity(3), FieldSpec::cyclotomic(3));
  ctx.twist = TwistSpec::identity();
  Obj a("A", {1}, ctx.field);
  EXPECT_FALSE(check_twist_axiom(ctx, a, a));
}

TEST(Twist, TwistsFromDualityMatchTheGradedTwist) {
  for (const auto& ctx : {graded(Scalar(-1), {}), graded(Scalar::root_of_unity(3), FieldSpec::cyclotomic(3))}) {
    Obj a("A", {0, 1, 2, -1}, ctx.field);
    EXPECT_EQ(twist_from_duality(ctx, Side::Left, a), twist(ctx, a));
    EXPECT_EQ(twist_from_duality(ctx, Side::Right, a), twist(ctx, a));
  }
}

TEST(Twist, ExplicitBraidingHasNoDualityData) {
  CategoryCtx ctx;
  ctx.braiding = BraidingSpec::explicit_braiding([](const Obj& x, const Obj& y) {
    return permutation_mor({x, y}, {1, 0});
  });
  Obj a("A", {0});
  EXPECT_THROW(twist_from_duality(ctx, Side::Left, a), DualityUnavailable);
}

TEST(Twist, MissingExplicitTwistIsReported) {
  CategoryCtx ctx;
  ctx.twist = TwistSpec::explicit_twist([](const Obj&) { return std::optional<Mor>{}; });
  EXPECT_THROW(twist(ctx, Obj("A", {0})), MissingTwist);
}

TEST(Braiding, FieldOfObjectsMustMatchTheCategory) {
  CategoryCtx ctx = graded(Scalar::root_of_unity(3), FieldSpec::cyclotomic(3));
  Obj q("Q", {0});
  EXPECT_THROW(braiding(ctx, q, q), Error);
}
