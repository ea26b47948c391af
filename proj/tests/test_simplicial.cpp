#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace braidcm;

namespace {

ParaCocyclicData cm_of(const std::string& name, int pair_index, int N) {
  HopfAlgebra a = instantiate(builtin(name));
  return build_cm(a, make_pair(a, builtin(name).pairs.at(pair_index)), N);
}

}  // namespace

TEST(Words, ParseAndPrintRoundTrip) {
  for (const char* w : {"t(2).d(2,0)", "d(3,1).s(2,0).t^-1(3)", "id(4)", "s(0,0).d(1,1)"}) {
    GenWord g = parse_word(w);
    EXPECT_EQ(g.to_string(), w);
    EXPECT_EQ(parse_word(g.to_string()), g);
  }
  GenWord g = parse_word("t(2).d(2,0)");
  EXPECT_EQ(g.source, 1);
  EXPECT_EQ(g.target, 2);
  EXPECT_EQ(parse_word(" t( 2 ) . d(2, 0) "), g);
}

TEST(Words, MalformedWordsAreRejected) {
  for (const char* w : {"", "d(2,3)", "x(1)", "d(2,0).d(2,0)", "id(2).t(2)", "t(2)..t(2)", "s(1,2)", "d(0,0)",
                        "t(-1)", "d(2)", "t(1,1)"})
    EXPECT_THROW(parse_word(w), WordError) << w;
}

TEST(NormalForms, CyclicOperatorAbsorbsTheFirstCoface) {
  EXPECT_EQ(normalize(parse_word("t(2).d(2,0)")).to_string(), "d(2,2)");
  EXPECT_EQ(normalize(parse_word("t^-1(3).t(3)")).to_string(), "id(3)");
  EXPECT_EQ(normalize(parse_word("t(1).t^-1(1).t(1)")).to_string(), "t(1)");
}

TEST(NormalForms, CofacesSortIntoStrictlyDecreasingOrder) {
  // d_j d_i = d_i d_{j-1} for i < j
  NormalForm a = normalize(parse_word("d(2,0).d(1,0)"));
  NormalForm b = normalize(parse_word("d(2,1).d(1,0)"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.cofaces, (std::vector<int>{1, 0}));
  EXPECT_EQ(normalize(b.to_word()), b);
}

TEST(NormalForms, LargeCyclicPowersStayCompact) {
  std::string w;
  for (int k = 0; k < 3 * 40; ++k) w += (w.empty() ? "" : ".") + std::string("t(2)");
  w += ".d(2,1)";
  NormalForm nf = normalize(parse_word(w));
  EXPECT_EQ(nf.cofaces, (std::vector<int>{1}));
  EXPECT_EQ(nf.tau, 80);  // t_2^{3} d_1 = d_1 t_1^{2}, forty times
}

TEST(NormalForms, EvaluationAndIdempotenceOnRandomWords) {
  std::mt19937 rng(2024);
  HopfAlgebra cube = instantiate(fixtures::anyonic_cube());
  std::vector<ParaCocyclicData> objs{cm_of("group_c2", 0, 3), cm_of("sweedler", 1, 3),
                                     build_cm(cube, unit_pair(cube), 3)};
  for (const auto& P : objs)
    for (int t = 0; t < 30; ++t) {
      GenWord w = fixtures::random_word(rng, 3, 12);
      NormalForm nf = normalize(w);
      EXPECT_EQ(normalize(nf.to_word()), nf) << w.to_string();
      EXPECT_EQ(evaluate_word(P, w), evaluate_word(P, nf)) << P.name << " " << w.to_string();
    }
}

TEST(Evaluation, WordsBeyondTheTruncationAreRejected) {
  ParaCocyclicData P = cm_of("group_c2", 0, 2);
  EXPECT_THROW(evaluate_word(P, parse_word("d(3,0)")), TruncationError);
  EXPECT_THROW(evaluate_word(P, parse_word("id(3)")), TruncationError);
  EXPECT_THROW(check_relations(P, 3, {Family::SR}), TruncationError);
  EXPECT_EQ(evaluate_word(P, parse_word("t(2).d(2,0)")), evaluate_word(P, parse_word("d(2,2)")));
}

TEST(Containers, ValidateCatchesBoundaryMismatch) {
  ParaCocyclicData P = cm_of("group_c2", 0, 2);
  P.cofaces[2][1] = P.cofaces[1][0];
  EXPECT_THROW(P.validate(), ShapeError);
}

TEST(Relations, CmObjectsPassSimplicialAndParacyclicRelations) {
  for (const auto& name : builtin_names()) {
    AlgebraSpec s = builtin(name);
    HopfAlgebra a = instantiate(s);
    int n = s.n_max_cap > 0 ? s.n_max_cap : 3;
    for (const auto& ps : s.pairs) {
      ParaCocyclicData P = build_cm(a, make_pair(a, ps), n + 1);
      RelationReport r = check_relations(P, n, {Family::SR, Family::PCR});
      EXPECT_TRUE(r.passed()) << name << "/" << ps.name << " failures " << r.failures();
      EXPECT_GT(r.records.size(), 20u);
    }
  }
}

TEST(Relations, ReportIsOrderedAndIndependentOfThreadCount) {
  ParaCocyclicData P = cm_of("sweedler", 1, 4);
  std::set<Family> fams{Family::SR, Family::PCR, Family::TwistedCC};
  setenv("BRAIDCM_THREADS", "1", 1);
  RelationReport a = check_relations(P, 3, fams);
  setenv("BRAIDCM_THREADS", "3", 1);
  RelationReport b = check_relations(P, 3, fams);
  unsetenv("BRAIDCM_THREADS");
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].relation, b.records[k].relation);
    EXPECT_EQ(a.records[k].indices, b.records[k].indices);
    EXPECT_EQ(a.records[k].pass, b.records[k].pass);
    if (k > 0) EXPECT_LE(a.records[k - 1].level, a.records[k].level);
  }
}

TEST(Relations, BrokenCyclicOperatorIsDetected) {
  ParaCocyclicData P = cm_of("group_c2", 0, 3);
  P.tau[2] = scale(Scalar(2), P.tau[2]);
  RelationReport r = check_relations(P, 2, {Family::SR, Family::PCR});
  ASSERT_FALSE(r.passed());
  for (const auto& rec : r.records)
    if (!rec.pass) {
      EXPECT_EQ(rec.relation.rfind("PCR", 0), 0u) << rec.relation;
      EXPECT_FALSE(rec.detail.empty());
    }
}

TEST(Relations, CyclicityFamiliesOnCmObjects) {
  // Sweedler with (e,g): twist trivial and the pair is in involution -> cyclic
  ParaCocyclicData P = cm_of("sweedler", 1, 4);
  EXPECT_TRUE(check_relations(P, 4, {Family::CC, Family::TwistedCC}).passed());
  // Sweedler with (e,u): tau_1^2 = S^2 is not the identity
  ParaCocyclicData Q = cm_of("sweedler", 0, 2);
  RelationReport r = check_relations(Q, 2, {Family::CC});
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.records[0].pass);  // level 0 is always cyclic
}

TEST(HomTransport, FromUnitIsCocyclicForInvolutivePairs) {
  for (auto [name, idx] : std::vector<std::pair<std::string, int>>{{"trivial", 0}, {"group_c2", 0}, {"sweedler", 1}}) {
    ParaCocyclicData P = cm_of(name, idx, 4);
    CyclicModuleData X = hom_transport(P, HomDirection::FromUnit);
    EXPECT_EQ(X.variance, Variance::Cocyclic);
    EXPECT_TRUE(check_relations(X, 4, {Family::SR, Family::PCR, Family::CC}).passed()) << name;
    CyclicModuleData Y = hom_transport(P, HomDirection::ToUnit);
    EXPECT_EQ(Y.variance, Variance::Cyclic);
    EXPECT_TRUE(check_relations(Y, 4, {Family::SR, Family::PCR, Family::CC}).passed()) << name;
  }
}

TEST(HomTransport, LevelsAreTheGradeZeroParts) {
  HopfAlgebra a = instantiate(builtin("anyonic_line_q"));
  ParaCocyclicData P = build_cm(a, unit_pair(a), 3);
  CyclicModuleData X = hom_transport(P, HomDirection::FromUnit);
  // grades 0/1 with nonnegative sums: only the all-zero tensor has grade 0
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(X.levels[n].dim(), 1u);
  ParaCocyclicData Q = cm_of("sweedler", 0, 3);
  EXPECT_EQ(hom_transport(Q, HomDirection::ToUnit).levels[3].dim(), 64u);
}

TEST(HomTransport, ToUnitSatisfiesFaceRelationsVerbatim) {
  ParaCocyclicData P = cm_of("group_c2", 0, 3);
  CyclicModuleData Y = hom_transport(P, HomDirection::ToUnit);
  // d_0 t_n = d_n on the cyclic side (faces go down a level)
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(compose(Y.d[n][0], Y.t[n]), Y.d[n][n]);
  // d_i d_j = d_{j-1} d_i for i < j
  EXPECT_EQ(compose(Y.d[2][0], Y.d[3][2]), compose(Y.d[2][1], Y.d[3][0]));
}
