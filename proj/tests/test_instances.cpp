#include <fstream>
#include <sstream>

#include "common.hpp"

using namespace wbh;
using namespace wbh::test;

namespace {
std::string slurp(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

const char* kTiny = R"({
  "name": "tiny",
  "dim": 1,
  "m": [[0, 0, 0, "1"]],
  "e": [[0, "1"]],
  "delta": [[0, 0, 0, "1"]],
  "eps": [[0, "1"]],
  "tau": "flip"
})";
}  // namespace

TEST(Instances, GeneratorsPassAllAxioms) {
  for (const auto& B : reference_instances()) EXPECT_REPORT_PASSES(check_all_axioms(B)) << B.name;
  // dense exact matrices on H⊗H⊗H⊗H: keep these small
  EXPECT_REPORT_PASSES(check_all_axioms(groupoid_algebra(discrete_groupoid(3))));
  EXPECT_REPORT_PASSES(check_all_axioms(group_algebra(cyclic_table(5))));
  EXPECT_EQ(g2().dim(), 4u);
  EXPECT_EQ(k2().dim(), 2u);
}

TEST(Instances, TrivialGroupIsTheField) {
  auto B = groupoid_algebra(full_groupoid(1));
  EXPECT_EQ(B.dim(), 1u);
  EXPECT_REPORT_PASSES(check_all_axioms(B));
  EXPECT_EQ(group_algebra({{0}}).dim(), 1u);
}

TEST(Instances, GroupoidAntipodes) {
  for (const auto& g : {full_groupoid(2), full_groupoid(3), discrete_groupoid(3)}) {
    auto B = groupoid_algebra(g);
    EXPECT_REPORT_PASSES(check_antipode(B, compute_entwining_maps(B), groupoid_antipode(g))) << g.objects;
  }
}

TEST(Instances, InvalidSpecs) {
  EXPECT_THROW(groupoid_algebra(GroupoidSpec{2, {{0, 0}, {0, 1}, {1, 1}}}), InvalidSpec);  // no inverse
  EXPECT_THROW(groupoid_algebra(GroupoidSpec{2, {{0, 0}}}), InvalidSpec);                  // missing identity
  EXPECT_THROW(monoid_algebra({{1, 1}, {1, 1}}), NoUnit);
  EXPECT_THROW(monoid_algebra({{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}), NotAssociative);
}

TEST(Instances, SuperLine) {
  auto B = sl();
  EXPECT_EQ(B.tau().matrix(), graded_flip({0, 1}));
  EXPECT_EQ(B.tau().matrix()(3, 3), Rational(-1));
  EXPECT_NE(B.tau().matrix(), flip<Rational>(2));
  EXPECT_REPORT_PASSES(check_all_axioms(B));
}

TEST(Instances, DualOfDual) {
  for (const auto& B : reference_instances()) {
    auto D = dual_instance(B);
    EXPECT_EQ(D.name, "dual(" + B.name + ")");
    auto DD = dual_instance(D);
    EXPECT_EQ(DD.name, B.name);
    EXPECT_EQ(DD.m(), B.m());
    EXPECT_EQ(DD.e(), B.e());
    EXPECT_EQ(DD.delta(), B.delta());
    EXPECT_EQ(DD.eps(), B.eps());
    EXPECT_EQ(DD.tau(), B.tau());
    EXPECT_EQ(DD.tau_prime(), B.tau_prime());
  }
}

TEST(InstanceFile, ShippedFilesLoad) {
  auto G = load(data_path("instances/g2.instance"));
  auto R = g2();
  EXPECT_EQ(G.name, "G2");
  EXPECT_EQ(G.m(), R.m());
  EXPECT_EQ(G.delta(), R.delta());
  EXPECT_EQ(G.tau(), R.tau());
  EXPECT_EQ(load(data_path("instances/sl.instance")).tau(), sl().tau());
}

TEST(InstanceFile, CanonicalRoundTrip) {
  for (const char* n : {"g2", "k2", "z2", "nz", "sl"}) {
    auto path = data_path(std::string("instances/") + n + ".instance");
    auto f = load_instance_file(path);
    EXPECT_EQ(serialize_instance(f.B, f.expected), slurp(path)) << n;
  }
}

TEST(InstanceFile, ExpectedPinsHold) {
  for (const char* n : {"k2", "z2", "nz", "sl"}) {
    auto f = load_instance_file(data_path(std::string("instances/") + n + ".instance"));
    ASSERT_TRUE(f.expected) << n;
    auto P = build_pipeline(f.B);
    EXPECT_EQ((*f.expected)["r"].get<std::size_t>(), P.base.r()) << n;
    EXPECT_EQ((*f.expected)["t"].get<std::size_t>(), P.galois.t()) << n;
    EXPECT_EQ((*f.expected)["gamma_rank"].get<std::size_t>(), P.galois.gamma_verdict.rank) << n;
  }
}

TEST(InstanceFile, FlipExpands) {
  auto f = parse_instance(kTiny);
  EXPECT_EQ(f.B.tau().matrix(), Mat{{1}});
  auto z = parse_instance(serialize_instance(z2()));
  EXPECT_EQ(z.B.tau().matrix(), flip<Rational>(2));
}

TEST(InstanceFile, Validation) {
  auto dup = replaced(kTiny, R"("m": [[0, 0, 0, "1"]])", R"("m": [[0, 0, 0, "1"], [0, 0, 0, "2"]])");
  EXPECT_THROW(parse_instance(dup), SchemaError);

  auto range = replaced(kTiny, R"("e": [[0, "1"]])", R"("e": [[1, "1"]])");
  try {
    parse_instance(range);
    FAIL() << "expected IndexOutOfRange";
  } catch (const IndexOutOfRange& e) {
    EXPECT_NE(std::string(e.what()).find("e[0]"), std::string::npos) << e.what();
  }

  EXPECT_THROW(parse_instance(replaced(kTiny, "\"tau\"", "\"tua\"")), SchemaError);
  EXPECT_THROW(parse_instance(replaced(kTiny, R"("eps": [[0, "1"]])", R"("eps": [[0, "1/0"]])")), SchemaError);
  EXPECT_THROW(parse_instance(replaced(kTiny, R"("dim": 1)", R"("dim": 0)")), SchemaError);
  EXPECT_THROW(parse_instance("not json"), SchemaError);
}

TEST(ModuleFile, RoundTrip) {
  auto path = data_path("modules/g2_induced0.module");
  auto M = load_module(path, 4);
  EXPECT_EQ(volume(M.carrier), 2u);
  EXPECT_EQ(serialize_module(M, "G2 induced from base character 0"), slurp(path));
  EXPECT_THROW(load_module(path, 2), SchemaError);
}
