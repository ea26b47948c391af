#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace braidcm;

namespace {

Obj plain(const std::string& name, std::size_t d) { return Obj(name, std::vector<int>(d, 0)); }

/** Dense reference Kronecker product written directly from the definition. */
std::vector<std::vector<Scalar>> kron(const std::vector<std::vector<Scalar>>& a,
                                      const std::vector<std::vector<Scalar>>& b) {
  std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
  std::vector<std::vector<Scalar>> r(ra * rb, std::vector<Scalar>(ca * cb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) r[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return r;
}

Mor random_mor(std::mt19937& rng, const Obj& d, const Obj& c) {
  std::uniform_int_distribution<int> v(-3, 3);
  Mor m(d, c);
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      int x = v(rng);
      if (x != 0) m.add(i, j, Scalar(x));
    }
  return m;
}

}  // namespace

TEST(Rationals, CanonicalTextIsLowestTermsWithPositiveDenominator) {
  EXPECT_EQ(Scalar(6, 4).to_string(), "3/2");
  EXPECT_EQ(Scalar(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Scalar(Scalar::parse_rational("10/-4")).to_string(), "-5/2");
  EXPECT_EQ(Scalar(Scalar::parse_rational("+7")).to_string(), "7");
  EXPECT_EQ(Scalar(0).to_string(), "0");
}

TEST(Rationals, ArithmeticIsExact) {
  Scalar a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Scalar(1, 2));
  EXPECT_EQ(a * b, Scalar(1, 18));
  EXPECT_EQ(a - a, Scalar(0));
  EXPECT_EQ(a.inverse(), Scalar(3));
  EXPECT_EQ(Scalar(-2).pow(5), Scalar(-32));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Rationals, MalformedTextIsRejected) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1", "3."})
    EXPECT_THROW(Scalar::parse(bad, FieldSpec::rationals()), ScalarSyntaxError) << bad;
  EXPECT_THROW(Scalar::parse("z", FieldSpec::rationals()), ScalarSyntaxError);
}

TEST(Cyclotomic, CubeRootOfUnityRelations) {
  FieldSpec f = FieldSpec::cyclotomic(3);
  Scalar z = Scalar::root_of_unity(3);
  EXPECT_EQ(z.pow(3), Scalar(1));
  EXPECT_FALSE(z.is_rational());
  EXPECT_EQ(Scalar(1) + z + z * z, Scalar(0));
  EXPECT_EQ(z * z, Scalar::parse("z^2", f));
  EXPECT_EQ(Scalar::parse("z^2", f), Scalar::parse("-1-z", f));
  EXPECT_EQ(z.inverse(), z * z);
  EXPECT_EQ(Scalar::parse("1/2+3z^4", f), Scalar::parse("1/2+3z", f));
}

TEST(Cyclotomic, FifthRootInverseAndCanonicalText) {
  FieldSpec f = FieldSpec::cyclotomic(5);
  Scalar x = Scalar::parse("2-z+z^3", f);
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  // degree of the fifth cyclotomic polynomial is 4: four coefficients
  EXPECT_EQ(Scalar::root_of_unity(5).to_string(), "[0,1,0,0]");
  EXPECT_EQ(Scalar::parse("z^4", f), Scalar::parse("-1-z-z^2-z^3", f));
}

TEST(Cyclotomic, OrdersOneAndTwoCollapseToRationals) {
  EXPECT_EQ(Scalar::root_of_unity(1), Scalar(1));
  EXPECT_EQ(Scalar::root_of_unity(2), Scalar(-1));
  EXPECT_TRUE(FieldSpec::cyclotomic(2).is_rational());
}

TEST(Cyclotomic, MixingFieldsIsAnError) {
  Scalar a = Scalar::root_of_unity(3), b = Scalar::root_of_unity(5);
  EXPECT_THROW(a + b, FieldMismatch);
}

TEST(Objects, TensorProductOrderAndGrades) {
  Obj x("X", {0, 1}), y("Y", {0, 2, 5});
  Obj xy = tensor_obj(x, y);
  EXPECT_EQ(xy.dim(), 6u);
  EXPECT_EQ(xy.grades, (std::vector<int>{0, 2, 5, 1, 3, 6}));
  EXPECT_EQ(tensor_power(x, 0).dim(), 1u);
  EXPECT_EQ(tensor_power(x, 3).dim(), 8u);
}

TEST(Morphisms, CompositionChecksBoundaries) {
  Obj a = plain("A", 2), b = plain("B", 3);
  Mor f(a, b), g(a, b);
  EXPECT_THROW(compose(g, f), CompositionMismatch);
  EXPECT_EQ(compose(Mor::identity(b), f), f);
}

TEST(Morphisms, CompositionMatchesDenseProduct) {
  std::mt19937 rng(7);
  Obj a = plain("A", 3), b = plain("B", 4), c = plain("C", 2);
  for (int t = 0; t < 20; ++t) {
    Mor f = random_mor(rng, a, b), g = random_mor(rng, b, c);
    Mor gf = compose(g, f);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Scalar s;
        for (std::size_t k = 0; k < 4; ++k) s += g.at(i, k) * f.at(k, j);
        EXPECT_EQ(gf.at(i, j), s);
      }
  }
}

TEST(Morphisms, TensorIsKroneckerWithLeftFactorOuter) {
  std::mt19937 rng(11);
  Obj a = plain("A", 2), b = plain("B", 3), c = plain("C", 2), d = plain("D", 2);
  for (int t = 0; t < 10; ++t) {
    Mor f = random_mor(rng, a, b), g = random_mor(rng, c, d);
    EXPECT_EQ(tensor_mor(f, g).dense(), kron(f.dense(), g.dense()));
  }
}

TEST(Morphisms, InterchangeLaw) {
  std::mt19937 rng(3);
  Obj a = plain("A", 2), b = plain("B", 3), c = plain("C", 2);
  for (int t = 0; t < 10; ++t) {
    Mor f1 = random_mor(rng, a, b), f2 = random_mor(rng, b, c);
    Mor g1 = random_mor(rng, c, a), g2 = random_mor(rng, a, b);
    EXPECT_EQ(compose(tensor_mor(f2, g2), tensor_mor(f1, g1)), tensor_mor(compose(f2, f1), compose(g2, g1)));
  }
}

TEST(Morphisms, PermutationsCompose) {
  Obj x = plain("X", 2), y = plain("Y", 3), z = plain("Z", 2);
  Mor p = permutation_mor({x, y, z}, {2, 0, 1});
  EXPECT_EQ(p.dom.dim(), 12u);
  // cyclic permutation of three factors has order three
  Mor p2 = permutation_mor({z, x, y}, {2, 0, 1});
  Mor p3 = permutation_mor({y, z, x}, {2, 0, 1});
  EXPECT_EQ(compose(p3, compose(p2, p)), Mor::identity(tensor_obj({x, y, z})));
  EXPECT_THROW(permutation_mor({x, y}, {0, 0}), InvalidPermutation);
  EXPECT_THROW(permutation_mor({x, y}, {0}), InvalidPermutation);
}

TEST(LinearAlgebra, RankKernelAndInverse) {
  Obj three = plain("T", 3);
  // rows (1,2,3), (2,4,6), (1,0,1): rank 2, kernel spanned by (1,1,-1)
  Mor m = Mor::from_rows(three, three, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  auto ker = kernel_basis(3, sparse_rows(m));
  ASSERT_EQ(ker.size(), 1u);
  Scalar s = ker[0][0];
  EXPECT_EQ(ker[0][1], s);
  EXPECT_EQ(ker[0][2], -s);
  EXPECT_THROW(inverse(m), SingularMatrix);

  Obj two = plain("W", 2);
  Mor a = Mor::from_rows(two, two, {{2, 1}, {1, 1}});
  Mor ai = inverse(a);
  EXPECT_EQ(ai, Mor::from_rows(two, two, {{1, -1}, {-1, 2}}));
  EXPECT_EQ(compose(a, ai), Mor::identity(two));
}

TEST(LinearAlgebra, TransposeAndPower) {
  Obj two = plain("W", 2);
  Mor a = Mor::from_rows(two, two, {{1, 1}, {0, 1}});
  EXPECT_EQ(power(a, 5), Mor::from_rows(two, two, {{1, 5}, {0, 1}}));
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(transpose(a).at(1, 0), Scalar(1));
  EXPECT_EQ(inverse(a), Mor::from_rows(two, two, {{1, -1}, {0, 1}}));
  EXPECT_THROW(power(a, -1), Error);
}

TEST(LinearAlgebra, SolveLinearFindsCommonKernel) {
  Obj u = plain("U", 3), one = plain("O", 1);
  Mor c1 = Mor::from_rows(u, one, {{1, -1, 0}});
  Mor c2 = Mor::from_rows(u, one, {{0, 1, -1}});
  auto sol = solve_linear({c1, c2}, u);
  ASSERT_EQ(sol.size(), 1u);
  EXPECT_EQ(sol[0][0], sol[0][1]);
  EXPECT_EQ(sol[0][1], sol[0][2]);
  EXPECT_FALSE(sol[0][0].is_zero());
}

TEST(Morphisms, DescribeDifferenceNamesTheEntry) {
  Obj two = plain("W", 2);
  Mor a = Mor::identity(two), b = Mor::identity(two);
  EXPECT_EQ(describe_difference(a, b), "");
  b.add(1, 0, Scalar(3));
  EXPECT_NE(describe_difference(a, b).find("(1,0)"), std::string::npos) << describe_difference(a, b);
}
