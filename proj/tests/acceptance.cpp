// Prints one PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>

#include "mutations.hpp"
#include "wbh/wbh.hpp"

using namespace wbh;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<WeakBraidedBimonad> five() { return {g2(), k2(), z2(), sl(), nz()}; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string why;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

Outcome axioms() {
  Outcome o;
  for (const auto& B : five()) {
    auto t0 = Clock::now();
    for (const auto& r : {check_algebra(B.alg), check_coalgebra(B.coa), check_weak_yb(B.yb), check_weak_braided_bimonad(B)})
      o.need(r.all_pass(), B.name + " fails " + (r.first_failure() ? r.first_failure()->id : ""));
    auto w = check_weak_braided_bimonad(B);
    for (int k = 1; k <= 7; ++k) o.need(w.holds("wbb" + std::to_string(k)), B.name + " wbb" + std::to_string(k));
    o.need(seconds_since(t0) < 1.0, B.name + " took over 1 s");
  }
  return o;
}

Outcome derived() {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& B : five()) {
    auto E = compute_entwining_maps(B);
    auto w = check_weak_entwining(E, B);
    auto d = check_derived_identities(E, B);
    o.need(w.all_pass(), B.name + " " + (w.first_failure() ? w.first_failure()->id : ""));
    o.need(d.all_pass(), B.name + " " + (d.first_failure() ? d.first_failure()->id : ""));
    for (int k = 1; k <= 6; ++k) o.need(d.holds("avr." + std::to_string(k)), B.name + " avr." + std::to_string(k));
  }
  o.need(seconds_since(t0) < 5.0, "took over 5 s");
  return o;
}

Outcome base() {
  Outcome o;
  const std::vector<std::size_t> dims{2, 2, 1, 1, 1};
  auto inst = five();
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const auto& B = inst[k];
    auto b = build_base(B, build_entwining(B));
    o.need(b.r() == dims[k], B.name + " base dim " + std::to_string(b.r()));
    auto fs = check_frobenius_separable(b);
    for (const char* id : {"base.frobenius", "base.separable", "base.upsilon.unit", "base.upsilon.left", "base.upsilon.right"})
      o.need(fs.holds(id), B.name + " " + id);
    o.need(fs.all_pass(), B.name + " Frobenius/separable");
    o.need(check_pi_splitting(B, b).all_pass(), B.name + " pi-splitting");
  }
  return o;
}

Outcome galois() {
  Outcome o;
  auto G = build_pipeline(g2()).galois;
  o.need(G.t() == 8, "G2 t");
  o.need(G.gamma.matrix().rows() == 8 && G.gamma.matrix().cols() == 8 && G.gamma_verdict.invertible(), "G2 gamma");
  o.need(G.gamma_prime.matrix().rows() == 8 && G.gamma_prime.matrix().cols() == 8 &&
             G.gamma_prime_verdict.invertible(),
         "G2 gamma'");
  auto Z = build_pipeline(z2()).galois;
  Mat classical(4, 4);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t h = 0; h < 2; ++h) classical(2 * g + (g + h) % 2, 2 * g + h) = 1;
  o.need(Z.gamma.matrix() == classical && Z.gamma_verdict.invertible(), "Z2 gamma is not the classical map");
  auto N = build_pipeline(nz()).galois;
  o.need(N.gamma_verdict.rank == 3 && N.gamma_verdict.rows == 4 && !N.gamma_verdict.invertible(), "NZ gamma rank");
  return o;
}

Outcome antipode() {
  Outcome o;
  auto P = build_pipeline(g2());
  auto S = construct_antipode_from_galois(P.B, P.E, P.galois).S;
  o.need(S.matrix() == Mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}), "G2 S is not g_ij -> g_ji");
  o.need(check_antipode(P.B, P.E, S).all_pass(), "G2 antipode checks");
  auto L = build_pipeline(sl());
  auto SL = construct_antipode_from_galois(L.B, L.E, L.galois).S;
  o.need(SL.matrix() == Mat::diag({1, -1}), "SL S is not x -> -x");
  o.need(check_antipode(L.B, L.E, SL).all_pass(), "SL antipode checks");
  auto N = nz();
  o.need(solve_antipode_linear(N, compute_entwining_maps(N)).outcome == SolveOutcome::inconsistent,
         "NZ linear system not inconsistent");
  return o;
}

Outcome fundamental() {
  Outcome o;
  for (const auto& B : five()) {
    try {
      auto v = fundamental_verdict(B);
      o.need(v.hopf() == (B.name != "NZ"), B.name + " verdict");
      o.need(v.report.all_pass(), B.name + " " + (v.report.first_failure() ? v.report.first_failure()->id : ""));
    } catch (const EquivalenceViolation& e) {
      o.need(false, B.name + " " + e.what());
    }
  }
  for (const auto& B : {g2(), z2(), sl()}) {
    auto P = build_pipeline(B);
    auto S = construct_antipode_from_galois(B, P.E, P.galois).S;
    auto r = check_remark_inverses(B, P.E, P.galois, S);
    o.need(r.holds("remark.gamma_inverse") && r.holds("remark.gamma_prime_inverse"), B.name + " remark inverses");
  }
  return o;
}

Outcome roundtrip(const std::string& data) {
  Outcome o;
  for (auto [B, dim] : {std::pair{g2(), std::size_t{2}}, std::pair{z2(), std::size_t{1}}}) {
    auto P = build_pipeline(B);
    auto S = construct_antipode_from_galois(B, P.E, P.galois).S;
    auto M = K_omega(B, 1);
    auto co = coinvariants(B, P.E, std::optional<TensorMap>(S), M);
    o.need(co.dim == dim, B.name + " coinvariant dim " + std::to_string(co.dim));
    o.need(detail::same_column_space(co.inclusion.matrix(), P.base.iota.matrix()), B.name + " coinvariants != image");
    auto rt = fundamental_roundtrip(B, P.E, P.base, S, M);
    o.need(rt.comparison.invertible(), B.name + " comparison not bijective");
  }
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data + "/modules")) {
    auto file = entry.path().filename().string();
    auto B = load(data + "/instances/" + file.substr(0, 2) + ".instance");
    auto M = load_module(entry.path().string(), B.dim());
    auto P = build_pipeline(B);
    auto S = construct_antipode_from_galois(B, P.E, P.galois).S;
    auto co = coinvariants(B, P.E, std::optional<TensorMap>(S), M);
    o.need(co.report.holds("coinv.beta_idempotent") && co.report.holds("coinv.square"), file);
    ++seen;
  }
  o.need(seen > 0, "no module files found");
  return o;
}

Outcome mutations(std::vector<std::string>& lines) {
  Outcome o;
  auto t0 = Clock::now();
  auto G = g2();
  auto muts = test::g2_mutations();
  o.need(muts.size() == 10, "expected 10 mutations");
  for (const auto& mu : muts) {
    auto doc = build_full_report(test::mutate(G, mu));
    std::string named;
    for (const auto& [name, sec] : doc["sections"].items())
      if (sec.contains("checks"))
        for (const auto& e : sec["checks"])
          if (e["asserted"].get<bool>() && !e["holds"].get<bool>()) {
            named = e["id"].get<std::string>();
            goto found;
          }
  found:
    o.need(!named.empty(), "not caught: " + mu.label);
    lines.push_back(mu.label + " => " + (named.empty() ? "nothing" : named));
  }
  o.need(seconds_since(t0) < 10.0, "took over 10 s");
  return o;
}

std::string suite_reports() {
  std::string all;
  for (const auto& B : five()) all += render_json(build_full_report(B));
  for (const auto& mu : test::g2_mutations()) all += render_json(build_full_report(test::mutate(g2(), mu)));
  return all;
}

Outcome determinism() {
  Outcome o;
  auto a = suite_reports();
  auto b = suite_reports();
  o.need(!a.empty() && a == b, "reports differ between runs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data = argc > 1 ? argv[1] : WBH_DATA_DIR;
  std::vector<std::string> mutation_lines;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "axiom suite on G2, K2, Z2, SL, NZ", axioms},
      {2, "derived identities on all five instances", derived},
      {3, "base object dims, Frobenius, separability, pi-splitting", base},
      {4, "Galois maps on G2, Z2, NZ", galois},
      {5, "antipodes of G2 and SL, none for NZ", antipode},
      {6, "antipode / gamma / gamma' verdicts agree; inverse formulas", fundamental},
      {7, "Hopf module coinvariants and round trip", [&] { return roundtrip(data); }},
      {8, "10 single-entry mutations of G2 are caught", [&] { return mutations(mutation_lines); }},
      {9, "structured reports are byte-identical across runs", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, seconds_since(t0),
                o.ok ? "" : ": ", o.why.c_str());
    if (c.id == 8)
      for (const auto& l : mutation_lines) std::printf("    %s\n", l.c_str());
    failed += o.ok ? 0 : 1;
  }
  return failed;
}
