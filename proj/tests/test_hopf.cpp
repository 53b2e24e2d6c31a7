#include "common.hpp"

using namespace wbh;
using namespace wbh::test;

TEST(Antipode, KnownAntipodesPass) {
  auto G = g2();
  EXPECT_REPORT_PASSES(check_antipode(G, compute_entwining_maps(G), groupoid_antipode(full_groupoid(2))));
  auto Z = z2();
  EXPECT_REPORT_PASSES(check_antipode(Z, compute_entwining_maps(Z), group_antipode(cyclic_table(2))));
  auto L = sl();
  EXPECT_REPORT_PASSES(check_antipode(L, compute_entwining_maps(L), super_line_antipode()));
}

TEST(Antipode, IdentityIsNotAnAntipodeOnG2) {
  auto G = g2();
  auto rep = check_antipode(G, compute_entwining_maps(G), G.id());
  EXPECT_FALSE(rep.holds("antipode.left"));
  ASSERT_TRUE(rep.find("antipode.left")->witness);
}

TEST(Antipode, FromGaloisOnG2IsTranspose) {
  auto P = build_pipeline(g2());
  auto S = construct_antipode_from_galois(P.B, P.E, P.galois);
  EXPECT_EQ(S.origin, AntipodeOrigin::from_galois);
  EXPECT_EQ(S.S.matrix(), (Mat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(S.S, groupoid_antipode(full_groupoid(2)));
  EXPECT_REPORT_PASSES(check_antipode(P.B, P.E, S.S));
}

TEST(Antipode, FromGaloisOnSuperLine) {
  auto P = build_pipeline(sl());
  auto S = construct_antipode_from_galois(P.B, P.E, P.galois);
  EXPECT_EQ(S.S.matrix(), Mat::diag({1, -1}));
}

TEST(Antipode, LinearSolve) {
  auto G = g2();
  auto r = solve_antipode_linear(G, compute_entwining_maps(G));
  ASSERT_EQ(r.outcome, SolveOutcome::found);
  EXPECT_EQ(r.antipode->S, groupoid_antipode(full_groupoid(2)));
  EXPECT_EQ(r.antipode->origin, AntipodeOrigin::from_linear_solve);

  auto L = sl();
  auto rl = solve_antipode_linear(L, compute_entwining_maps(L));
  ASSERT_EQ(rl.outcome, SolveOutcome::found);
  EXPECT_EQ(rl.antipode->S, super_line_antipode());

  auto N = nz();
  auto rn = solve_antipode_linear(N, compute_entwining_maps(N));
  EXPECT_EQ(rn.outcome, SolveOutcome::inconsistent);
  EXPECT_FALSE(rn.antipode);
  EXPECT_LT(rn.rank, rn.augmented_rank);
}

TEST(Fundamental, VerdictsAgree) {
  struct Want {
    WeakBraidedBimonad B;
    bool hopf;
  };
  for (const auto& w : {Want{g2(), true}, Want{k2(), true}, Want{z2(), true}, Want{sl(), true}, Want{nz(), false}}) {
    auto v = fundamental_verdict(w.B);
    EXPECT_EQ(v.hopf(), w.hopf) << w.B.name;
    EXPECT_EQ(v.gamma_invertible, w.hopf) << w.B.name;
    EXPECT_EQ(v.gamma_prime_invertible, w.hopf) << w.B.name;
    EXPECT_REPORT_PASSES(v.report) << w.B.name;
    if (w.hopf) {
      ASSERT_TRUE(v.constructions_agree) << w.B.name;
      EXPECT_TRUE(*v.constructions_agree) << w.B.name;
    }
  }
}

TEST(Fundamental, DualsBehaveLikeOriginals) {
  for (const auto& B : reference_instances()) {
    auto D = dual_instance(B);
    EXPECT_REPORT_PASSES(check_all_axioms(D)) << D.name;
    auto v = fundamental_verdict(D);
    EXPECT_EQ(v.hopf(), B.name != "NZ") << D.name;
    EXPECT_REPORT_PASSES(v.report) << D.name;
  }
}

TEST(Fundamental, ConvolutionSandwich) {
  auto G = g2();
  auto S = groupoid_antipode(full_groupoid(2));
  EXPECT_EQ(convolution(convolution(G.id(), S, G), G.id(), G), G.id());
}

TEST(Pipeline, FloatModeMatchesExact) {
  auto P = build_pipeline(convert<double>(g2()));
  EXPECT_TRUE(P.galois.gamma_verdict.invertible());
  auto S = construct_antipode_from_galois(P.B, P.E, P.galois);
  EXPECT_FALSE(first_difference(S.S.matrix(), convert<double>(groupoid_antipode(full_groupoid(2)).matrix())));
}
