#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wbh/hopf.hpp"

namespace wbh {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const AxiomReport& r) {
  ordered_json out = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json j;
    j["id"] = e.id;
    j["holds"] = e.holds;
    j["witness"] = e.witness ? ordered_json::array({e.witness->row, e.witness->col}) : ordered_json(nullptr);
    j["detail"] = e.detail;
    j["asserted"] = e.asserted;
    out.push_back(std::move(j));
  }
  return out;
}

// Nonzero entries of a matrix as [row, col, "value"] triples.
template <class T>
ordered_json sparse_json(const BasicMat<T>& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!scalar_traits<T>::is_zero(m(i, j))) out.push_back({i, j, scalar_traits<T>::str(m(i, j))});
  return out;
}

inline ordered_json to_json(const Invertibility& v) {
  return {{"rows", v.rows}, {"cols", v.cols}, {"rank", v.rank}, {"invertible", v.invertible()}};
}

struct ReportOptions {
  bool timing = false;
};

namespace detail {

class SectionRunner {
 public:
  SectionRunner(ordered_json& sections, bool timing) : sections_(sections), timing_(timing) {}

  // Runs fn, which fills a section object. Library errors become the section's "error".
  bool run(const std::string& name, const std::function<void(ordered_json&)>& fn) {
    ordered_json s;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      fn(s);
    } catch (const Error& e) {
      s["error"] = e.what();
      ok = false;
    }
    if (timing_)
      s["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    sections_[name] = std::move(s);
    return ok;
  }

  void skip(const std::string& name, const std::string& why) { sections_[name] = {{"skipped", why}}; }

 private:
  ordered_json& sections_;
  bool timing_;
};

inline bool section_ok(const ordered_json& s) {
  if (s.contains("error") || s.contains("skipped")) return false;
  if (s.contains("checks"))
    for (const auto& e : s["checks"])
      if (e["asserted"].get<bool>() && !e["holds"].get<bool>()) return false;
  return true;
}

}  // namespace detail

// Everything the library can say about one instance. Never throws on a bad
// instance: failing checks are entries, refused constructions are "skipped".
template <class T>
ordered_json build_full_report(const BasicWeakBraidedBimonad<T>& B, const ReportOptions& opt = {}) {
  ordered_json doc;
  doc["instance"] = B.name;
  doc["exact"] = scalar_traits<T>::exact;
  ordered_json dims;
  dims["n"] = B.dim();
  ordered_json sections = ordered_json::object();
  detail::SectionRunner run(sections, opt.timing);

  AxiomReport axioms;
  run.run("axioms", [&](ordered_json& s) {
    axioms = check_all_axioms(B);
    s["checks"] = to_json(axioms);
  });
  auto maps = compute_entwining_maps(B);
  run.run("entwining", [&](ordered_json& s) { s["checks"] = to_json(check_weak_entwining(maps, B)); });
  run.run("derived", [&](ordered_json& s) { s["checks"] = to_json(check_derived_identities(maps, B)); });

  ordered_json verdict;
  const AxiomEntry* bad = axioms.first_failure();
  if (bad) {
    for (auto name : {"base", "galois", "hopf", "modules"}) run.skip(name, "prerequisite " + bad->id);
    verdict["hopf"] = nullptr;
    verdict["reason"] = "prerequisite " + bad->id + " failed";
  } else {
    std::optional<BasicPipeline<T>> P;
    bool ok = run.run("base", [&](ordered_json& s) {
      BasicPipeline<T> p{B, build_entwining(B), {}, {}, {}};
      p.base = build_base(B, p.E);
      AxiomReport r = p.base.structure;
      r.append(check_frobenius_separable(p.base));
      p.actions = build_actions(B, p.base);
      r.append(p.actions.report);
      r.append(check_pi_splitting(B, p.base));
      s["checks"] = to_json(r);
      dims["r"] = p.base.r();
      dims["g_bar"] = p.E.g_dim();
      dims["t_bar"] = p.E.t_bar_dim();
      P = std::move(p);
    });
    if (ok) {
      ok = run.run("galois", [&](ordered_json& s) {
        P->galois = build_galois(B, P->E, P->base, P->actions);
        s["checks"] = to_json(P->galois.report);
        s["gamma"] = to_json(P->galois.gamma_verdict);
        s["gamma_prime"] = to_json(P->galois.gamma_prime_verdict);
        dims["t"] = P->galois.t();
        dims["c"] = P->galois.c();
      });
    } else {
      run.skip("galois", "base object not built");
    }
    if (ok) {
      run.run("hopf", [&](ordered_json& s) {
        auto v = fundamental_verdict(*P);
        s["checks"] = to_json(v.report);
        ordered_json lin;
        lin["outcome"] = to_string(v.linear.outcome);
        lin["unknowns"] = v.linear.unknowns;
        lin["rank"] = v.linear.rank;
        lin["augmented_rank"] = v.linear.augmented_rank;
        lin["solution_dim"] = v.linear.solution_dim;
        lin["refined"] = v.linear.refined;
        s["linear_solve"] = lin;
        verdict["hopf"] = v.hopf();
        verdict["antipode_exists"] = v.antipode_exists;
        verdict["gamma_invertible"] = v.gamma_invertible;
        verdict["gamma_prime_invertible"] = v.gamma_prime_invertible;
        verdict["constructions_agree"] = v.constructions_agree ? ordered_json(*v.constructions_agree) : ordered_json(nullptr);
        if (v.antipode) {
          verdict["antipode_origin"] = to_string(v.antipode->origin);
          verdict["antipode"] = sparse_json(v.antipode->S.matrix());
        }
      });
      run.run("modules", [&](ordered_json& s) {
        AxiomReport r;
        auto reg = regular_bimodule(B);
        for (auto e : check_mixed_bimodule(B, P->E, reg).entries) { e.id = "regular." + e.id; r.entries.push_back(e); }
        auto ic = induced_comonad_on_module(B, P->E, reg.module());
        for (auto e : ic.report.entries) { e.id = "induced." + e.id; r.entries.push_back(e); }
        r.check("induced.gamma_is_kappa", ic.gamma, P->E.kappa);
        auto im = induced_monad_on_comodule(B, P->E, reg.comodule());
        for (auto e : im.report.entries) { e.id = "induced." + e.id; r.entries.push_back(e); }
        r.check("induced.gamma_prime_is_kappa_prime", im.gamma_prime, P->E.kappa_prime);
        s["checks"] = to_json(r);
        s["comonad_split_dim"] = ic.split.rank;
        s["monad_split_dim"] = im.split.rank;
      });
    } else {
      run.skip("hopf", "Galois maps not built");
      run.skip("modules", "Galois maps not built");
    }
  }

  bool all = true;
  for (auto& [name, s] : sections.items()) {
    if (s.contains("skipped")) continue;
    all = all && detail::section_ok(s);
  }
  if (bad) all = false;
  doc["dims"] = dims;
  doc["verdict"] = verdict;
  doc["all_checks_pass"] = all;
  doc["sections"] = sections;
  return doc;
}

inline std::string render_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Text form is generated from the structured one, so the two carry the same content.
inline std::string render_text(const ordered_json& doc) {
  std::ostringstream os;
  os << "instance " << doc["instance"].get<std::string>() << (doc["exact"].get<bool>() ? "" : " (float mode)") << "\n";
  os << "dims:";
  for (auto& [k, v] : doc["dims"].items()) os << " " << k << "=" << v.dump();
  os << "\n";
  for (auto& [name, s] : doc["sections"].items()) {
    os << "[" << name << "]";
    if (s.contains("millis")) os << " " << s["millis"].get<double>() << " ms";
    os << "\n";
    if (s.contains("skipped")) os << "  skipped: " << s["skipped"].get<std::string>() << "\n";
    if (s.contains("error")) os << "  error: " << s["error"].get<std::string>() << "\n";
    if (s.contains("checks"))
      for (const auto& e : s["checks"]) {
        const bool holds = e["holds"].get<bool>(), asserted = e["asserted"].get<bool>();
        os << "  " << (!asserted ? "note" : holds ? "PASS" : "FAIL") << " " << e["id"].get<std::string>();
        if (!asserted) os << " = " << (holds ? "true" : "false");
        if (!e["witness"].is_null()) os << " at (" << e["witness"][0] << "," << e["witness"][1] << ")";
        if (!holds && !e["detail"].get<std::string>().empty()) os << ": " << e["detail"].get<std::string>();
        os << "\n";
      }
    for (auto key : {"gamma", "gamma_prime"})
      if (s.contains(key))
        os << "  " << key << ": " << s[key]["rows"] << "x" << s[key]["cols"] << " rank " << s[key]["rank"]
           << (s[key]["invertible"].get<bool>() ? " invertible" : " not invertible") << "\n";
    if (s.contains("linear_solve")) {
      const auto& l = s["linear_solve"];
      os << "  linear solve: " << l["outcome"].get<std::string>() << ", rank " << l["rank"] << "/" << l["augmented_rank"]
         << " over " << l["unknowns"] << " unknowns" << (l["refined"].get<bool>() ? " (refined)" : "") << "\n";
    }
  }
  const auto& v = doc["verdict"];
  os << "verdict: ";
  if (v["hopf"].is_null()) os << "undecided (" << v.value("reason", std::string("?")) << ")";
  else os << (v["hopf"].get<bool>() ? "Hopf" : "not Hopf");
  if (v.contains("antipode_origin")) os << ", antipode " << v["antipode_origin"].get<std::string>();
  os << "\n";
  os << "all checks pass: " << (doc["all_checks_pass"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace wbh
