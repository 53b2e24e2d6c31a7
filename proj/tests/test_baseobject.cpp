#include "common.hpp"

using namespace wbh;
using namespace wbh::test;

namespace {
BaseObject base_of(const WeakBraidedBimonad& B) { return build_base(B, build_entwining(B)); }
}  // namespace

TEST(Base, Dimensions) {
  EXPECT_EQ(base_of(g2()).r(), 2u);
  EXPECT_EQ(base_of(k2()).r(), 2u);
  EXPECT_EQ(base_of(z2()).r(), 1u);
  EXPECT_EQ(base_of(sl()).r(), 1u);
  EXPECT_EQ(base_of(nz()).r(), 1u);
  EXPECT_EQ(base_of(dual_instance(g2())).r(), 2u);
}

TEST(Base, SplitsXiBar) {
  for (const auto& B : reference_instances()) {
    auto E = build_entwining(B);
    auto b = build_base(B, E);
    EXPECT_EQ(compose({b.q, b.iota}), E.xi_bar) << B.name;
    EXPECT_EQ(compose({b.iota, b.q}), TensorMap::identity({b.r()})) << B.name;
    EXPECT_REPORT_PASSES(b.structure) << B.name;
  }
}

TEST(Base, G2IsTwoCopiesOfTheField) {
  auto b = base_of(g2());
  // base basis is {g_00, g_11}
  EXPECT_EQ(b.iota.matrix(), (Mat{{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(b.m_base.matrix(), (Mat{{1, 0, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(b.delta_base.matrix(), transpose(b.m_base.matrix()));
  EXPECT_EQ(b.e_base.matrix(), (Mat{{1}, {1}}));
}

TEST(Base, K2BaseIsEverything) {
  auto B = k2();
  auto b = base_of(B);
  EXPECT_EQ(b.r(), B.dim());
  EXPECT_EQ(b.m_base, B.m());
}

TEST(Base, FrobeniusAndSeparable) {
  for (const auto& B : reference_instances()) {
    auto b = base_of(B);
    EXPECT_REPORT_PASSES(check_frobenius_separable(b)) << B.name;
    EXPECT_EQ(compose({b.delta_base, b.m_base}), TensorMap::identity({b.r()})) << B.name;
  }
}

TEST(Base, ActionsAndCoactions) {
  for (const auto& B : reference_instances()) {
    auto b = base_of(B);
    auto a = build_actions(B, b);
    EXPECT_REPORT_PASSES(a.report) << B.name;
  }
  auto B = k2();
  auto a = build_actions(B, base_of(B));
  EXPECT_EQ(a.rho_r, B.m());
}

TEST(Base, PiSplitting) {
  for (const auto& B : reference_instances()) EXPECT_REPORT_PASSES(check_pi_splitting(B, base_of(B))) << B.name;
}

TEST(Base, DoubledBaseComultiplicationBreaksPiSection) {
  auto B = g2();
  auto b = base_of(B);
  b.delta_base = TensorMap(b.delta_base.domain(), b.delta_base.codomain(), scale(Rational(2), b.delta_base.matrix()));
  auto rep = check_pi_splitting(B, b);
  EXPECT_FALSE(rep.holds("pi.section"));
  EXPECT_FALSE(check_frobenius_separable(b).holds("base.separable"));
}
