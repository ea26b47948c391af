#include "fixtures.hpp"
#include "oracles.hpp"

#include <braidcm/report.hpp>

#include <gtest/gtest.h>

using namespace braidcm;
using oracles::connes_oracle;

namespace {

std::vector<std::size_t> trusted_prefix(const ComplexReport& r) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < r.homology.size() && r.trusted[n]; ++n) out.push_back(r.homology[n]);
  return out;
}

CyclicModuleData from_unit(const std::string& name, int idx, int N) {
  HopfAlgebra a = instantiate(builtin(name));
  return hom_transport(build_cm(a, make_pair(a, builtin(name).pairs[idx]), N), HomDirection::FromUnit);
}

}  // namespace

TEST(PointModule, EvenDegreesAreOneDimensional) {
  for (Variance v : {Variance::Cocyclic, Variance::Cyclic}) {
    ComplexReport r = cyclic_homology(point_module(6, v), 6);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(trusted_prefix(r), (std::vector<std::size_t>{1, 0, 1, 0, 1, 0}));
    EXPECT_FALSE(r.trusted[6]);
    EXPECT_EQ(connes_oracle(point_module(6, v), 6), trusted_prefix(r));
  }
}

TEST(Bicomplex, IdentitiesHoldAndTotalDifferentialSquaresToZero) {
  CyclicModuleData X = from_unit("sweedler", 1, 4);
  Bicomplex B = build_bicomplex(X, 4);
  EXPECT_TRUE(B.checks.passed());
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(compose(B.total[n - 1], B.total[n]).nnz(), 0u) << n;
  // Tot_n collects X_{n-p} for p = 0..n
  std::size_t expect = 0;
  for (int p = 0; p <= 3; ++p) expect += X.levels[3 - p].dim();
  EXPECT_EQ(B.tot[3].dim(), expect);
}

TEST(HomTransports, AgreeWithTheConnesComplexOracle) {
  for (auto [name, idx] : std::vector<std::pair<std::string, int>>{
           {"trivial", 0}, {"group_c2", 0}, {"sweedler", 1}, {"group_s3", 0}}) {
    int N = name == "group_s3" ? 3 : 4;
    HopfAlgebra a = instantiate(builtin(name));
    ParaCocyclicData P = build_cm(a, make_pair(a, builtin(name).pairs[idx]), N);
    for (HomDirection dir : {HomDirection::FromUnit, HomDirection::ToUnit}) {
      CyclicModuleData X = hom_transport(P, dir);
      ComplexReport r = cyclic_homology(X, N);
      EXPECT_TRUE(r.passed()) << name;
      EXPECT_EQ(trusted_prefix(r), connes_oracle(X, N)) << name;
    }
  }
}

TEST(HomTransports, KnownDimensions) {
  EXPECT_EQ(trusted_prefix(cyclic_homology(from_unit("sweedler", 1, 4), 4)),
            (std::vector<std::size_t>{0, 1, 0, 2}));
  EXPECT_EQ(trusted_prefix(cyclic_homology(from_unit("group_c2", 0, 5), 5)),
            (std::vector<std::size_t>{1, 0, 1, 0, 1}));
  EXPECT_EQ(trusted_prefix(cyclic_homology(from_unit("trivial", 0, 5), 5)),
            (std::vector<std::size_t>{1, 0, 1, 0, 1}));
}

TEST(Errors, NonCyclicTruncatedAndNonMorphismInputs) {
  // (e, u) on Sweedler is not in involution: tau_1^2 = S^2 != id
  EXPECT_THROW(cyclic_homology(from_unit("sweedler", 0, 3), 3), NotCyclic);
  EXPECT_THROW(cyclic_homology(point_module(3), 4), TruncationError);
  CyclicModuleData X = from_unit("group_c2", 0, 3);
  std::vector<Mor> id;
  for (int n = 0; n <= 3; ++n) id.push_back(Mor::identity(X.levels[n]));
  EXPECT_THROW(induced_map_on_hc(X, point_module(3, Variance::Cyclic), id, 3), NotAMorphism);
  EXPECT_THROW(induced_map_on_hc(X, X, std::vector<Mor>(id.begin(), id.begin() + 2), 3), ShapeError);
  std::vector<Mor> bad = id;
  Mor proj(X.levels[1], X.levels[1]);
  proj.add(0, 0, Scalar(1));
  bad[1] = proj;
  EXPECT_THROW(induced_map_on_hc(X, X, bad, 3), NotAMorphism);
}

TEST(InducedMaps, IdentityInducesIdentity) {
  CyclicModuleData X = from_unit("sweedler", 1, 4);
  std::vector<Mor> id;
  for (int n = 0; n <= 4; ++n) id.push_back(Mor::identity(X.levels[n]));
  std::vector<Mor> maps = induced_map_on_hc(X, X, id, 4);
  std::vector<std::size_t> hc = trusted_prefix(cyclic_homology(X, 4));
  ASSERT_GE(maps.size(), hc.size());
  for (std::size_t n = 0; n < hc.size(); ++n) {
    EXPECT_EQ(maps[n].cols(), hc[n]);
    EXPECT_EQ(rank(maps[n]), hc[n]);
    EXPECT_EQ(maps[n].dense(), Mor::identity(maps[n].dom).dense()) << n;
  }
}

TEST(InducedMaps, ScalingByTwoDoublesEveryMatrix) {
  CyclicModuleData X = from_unit("group_c2", 0, 4);
  std::vector<Mor> two;
  for (int n = 0; n <= 4; ++n) two.push_back(scale(Scalar(2), Mor::identity(X.levels[n])));
  std::vector<Mor> maps = induced_map_on_hc(X, X, two, 4);
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t k = 0; k < maps[n].cols(); ++k) EXPECT_EQ(maps[n].at(k, k), Scalar(2));
}

TEST(InducedMaps, SweedlerTraceMapsAreNonzeroInOddDegrees) {
  LoadedAlgebra L = validate_spec(builtin("sweedler"));
  RunConfig cfg;
  cfg.n_max = 4;
  cfg.degree_bound = 5;
  cfg.pair = "eg";
  SuiteResult r = suite_homology(L, cfg);
  EXPECT_TRUE(r.passed);
  const json& pair = r.body["pairs"][0];
  EXPECT_EQ(pair["pair"], "eg");
  const json& maps = pair["induced_by_traces"][0]["maps"];
  ASSERT_GE(maps.size(), 4u);
  EXPECT_EQ(maps[1]["rank"], 1);
  EXPECT_EQ(maps[3]["rank"], 1);
  EXPECT_EQ(maps[0]["source_dim"], 0);
}
