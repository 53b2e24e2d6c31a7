// Command line front end. Exit codes: 0 success, 1 a check failed or the
// answer is "no", 2 bad input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wbh/wbh.hpp"

namespace {

using namespace wbh;

struct Globals {
  bool use_float = false;
  double tol = 1e-9;
  std::size_t max_dim = 12;
  bool timing = false;
  std::string out;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + g.out);
  f << text;
}

InstanceFile load_checked(const std::string& path, const Globals& g) {
  auto f = load_instance_file(path);
  if (f.B.dim() > g.max_dim)
    throw InputError("instance dimension " + std::to_string(f.B.dim()) + " exceeds --max-dim " +
                     std::to_string(g.max_dim));
  return f;
}

std::string sparse_table(const Mat& m) {
  std::ostringstream os;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) os << "  [" << j << ", " << i << ", \"" << m(i, j) << "\"]\n";
  return os.str();
}

template <class T>
std::string matrix_text(const BasicMat<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << scalar_traits<T>::str(m(i, j));
    os << "\n";
  }
  return os.str();
}

std::string verdict_text(const char* name, const Invertibility& v) {
  std::ostringstream os;
  os << name << ": " << v.rows << "×" << v.cols << (v.invertible() ? " invertible" : " not invertible");
  if (!v.invertible()) os << " (rank " << v.rank << ")";
  return os.str();
}

// Sections of the full report, filtered and printed.
template <class T>
int run_report(const BasicWeakBraidedBimonad<T>& B, const Globals& g, const std::vector<std::string>& keep,
               bool json) {
  auto doc = build_full_report(B, ReportOptions{g.timing});
  if (!keep.empty()) {
    ordered_json s = ordered_json::object();
    for (const auto& k : keep) s[k] = doc["sections"][k];
    doc["sections"] = s;
    bool ok = true;
    for (const auto& sec : s) ok = ok && detail::section_ok(sec);
    doc["all_checks_pass"] = ok;
  }
  if (json || !g.out.empty())
    emit(g, render_json(doc));
  if (!json) std::cout << render_text(doc);
  return doc["all_checks_pass"].template get<bool>() ? 0 : 1;
}

template <class T>
int cmd_check(const BasicWeakBraidedBimonad<T>& B, const Globals& g) {
  return run_report(B, g, {"axioms", "entwining", "derived"}, false);
}

template <class T>
int cmd_derive(const BasicWeakBraidedBimonad<T>& B, const Globals& g) {
  require_weak_braided_bimonad(B);
  auto E = build_entwining(B);
  auto base = build_base(B, E);
  auto fr = check_frobenius_separable(base);
  build_actions(B, base);
  auto pi = check_pi_splitting(B, base);
  std::ostringstream os;
  os << "instance " << B.name << "\n";
  os << "n = " << B.dim() << ", r = " << base.r() << ", G-bar dim = " << E.g_dim() << ", T-bar dim = " << E.t_bar_dim()
     << "\n";
  os << "separable Frobenius: " << (fr.all_pass() ? "pass" : "FAIL " + fr.first_failure()->id) << "\n";
  os << "pi-splitting: " << (pi.all_pass() ? "pass" : "FAIL " + pi.first_failure()->id) << "\n";
  os << "m_base:\n" << matrix_text(base.m_base.matrix());
  os << "delta_base:\n" << matrix_text(base.delta_base.matrix());
  std::cout << os.str();
  if (!g.out.empty()) {
    ordered_json doc;
    doc["instance"] = B.name;
    doc["n"] = B.dim();
    doc["r"] = base.r();
    doc["checks"] = to_json(base.structure);
    auto all = fr;
    all.append(pi);
    for (auto& e : to_json(all)) doc["checks"].push_back(e);
    emit(g, render_json(doc));
  }
  return fr.all_pass() && pi.all_pass() ? 0 : 1;
}

template <class T>
int cmd_galois(const BasicWeakBraidedBimonad<T>& B, const Globals&) {
  auto P = build_pipeline(B);
  std::cout << "t = " << P.galois.t() << ", c = " << P.galois.c() << ", G-bar dim = " << P.E.g_dim()
            << ", T-bar dim = " << P.E.t_bar_dim() << "\n";
  std::cout << verdict_text("γ", P.galois.gamma_verdict) << "; " << verdict_text("γ′", P.galois.gamma_prime_verdict)
            << "\n";
  return P.galois.gamma_verdict.invertible() && P.galois.gamma_prime_verdict.invertible() ? 0 : 1;
}

int cmd_antipode(const WeakBraidedBimonad& B, const Globals& g) {
  auto P = build_pipeline(B);
  auto v = fundamental_verdict(P);
  const auto& gv = P.galois.gamma_verdict;
  const std::string rank = "γ rank " + std::to_string(gv.rank) + "/" + std::to_string(gv.rows);
  if (!v.antipode) {
    std::cout << "no weak antipode (linear system " << to_string(v.linear.outcome) << "); " << rank << "\n";
    return 1;
  }
  std::ostringstream os;
  os << "weak antipode, origin " << to_string(v.antipode->origin) << "; " << rank << "\n";
  os << "entries [i, k, c]: coefficient c of b_k in S(b_i)\n" << sparse_table(v.antipode->S.matrix());
  if (v.constructions_agree) os << "linear solve " << (*v.constructions_agree ? "agrees" : "differs") << "\n";
  std::cout << os.str();
  if (!g.out.empty()) {
    ordered_json doc;
    doc["instance"] = B.name;
    doc["origin"] = to_string(v.antipode->origin);
    doc["S"] = sparse_json(v.antipode->S.matrix());
    emit(g, render_json(doc));
  }
  return 0;
}

int cmd_hopfmod(const WeakBraidedBimonad& B, const std::string& module_path, const Globals&) {
  auto M = load_module(module_path, B.dim());
  auto P = build_pipeline(B);
  auto mb = check_mixed_bimodule(B, P.E, M);
  std::cout << "module dim " << volume(M.carrier) << ": mixed bimodule "
            << (mb.all_pass() ? "pass" : "FAIL " + mb.first_failure()->id) << "\n";
  if (!mb.all_pass()) return 1;
  auto v = fundamental_verdict(P);
  std::optional<TensorMap> S;
  if (v.antipode) S = v.antipode->S;
  auto co = coinvariants(B, P.E, S, M);
  std::cout << "coinvariants dim " << co.dim << "\n";
  if (!S) {
    std::cout << "instance is not Hopf; no round trip\n";
    return 1;
  }
  try {
    auto rt = fundamental_roundtrip(B, P.E, P.base, *S, M);
    for (const auto& e : rt.report.entries)
      std::cout << "  " << (e.holds ? "PASS" : "FAIL") << " " << e.id << "\n";
    std::cout << "round trip: " << rt.module_dim << " -> " << rt.coinvariant_dim << " -> " << rt.induced_dim
              << ", comparison " << (rt.comparison.invertible() ? "bijective" : "not bijective") << "\n";
    return rt.report.all_pass() ? 0 : 1;
  } catch (const RoundTripFailed& e) {
    std::cout << "round trip failed: " << e.what() << "\n";
    return 1;
  }
}

template <class T>
int cmd_eval(const BasicWeakBraidedBimonad<T>& B, const std::string& text, const Globals&) {
  auto E = compute_entwining_maps(B);
  std::optional<BasicTensorMap<T>> S;
  if constexpr (std::is_same_v<T, Rational>) {
    try {
      auto P = build_pipeline(B);
      if (P.galois.gamma_verdict.invertible()) S = construct_antipode_from_galois(B, P.E, P.galois).S;
    } catch (const Error&) {
    }
  }
  auto f = parse_expr<T>(text, standard_env(B, E, S), B.dim());
  std::cout << to_string(f.domain()) << " -> " << to_string(f.codomain()) << "\n" << matrix_text(f.matrix());
  return 0;
}

std::vector<std::vector<std::size_t>> parse_table(const std::string& s) {
  std::vector<std::vector<std::size_t>> t;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::stringstream cells(row);
    std::vector<std::size_t> r;
    long long x;
    while (cells >> x) {
      if (x < 0) throw InputError("negative table entry");
      r.push_back(static_cast<std::size_t>(x));
    }
    if (!cells.eof()) throw InputError("bad table row '" + row + "'");
    t.push_back(r);
  }
  return t;
}

template <class T>
int dispatch(const std::string& cmd, const BasicWeakBraidedBimonad<T>& B, const Globals& g, const std::string& arg) {
  if (cmd == "check") return cmd_check(B, g);
  if (cmd == "derive") return cmd_derive(B, g);
  if (cmd == "galois") return cmd_galois(B, g);
  if (cmd == "eval") return cmd_eval(B, arg, g);
  if (cmd == "report") return run_report(B, g, {}, false);
  if constexpr (std::is_same_v<T, Rational>) {
    if (cmd == "antipode") return cmd_antipode(B, g);
    if (cmd == "hopfmod") return cmd_hopfmod(B, arg, g);
  }
  throw InputError(cmd + " is not available in float mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak braided bimonads on finite-dimensional vector spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--float", g.use_float, "double precision instead of exact rationals");
  app.add_option("--tol", g.tol, "float mode tolerance")->capture_default_str();
  app.add_option("--max-dim", g.max_dim, "refuse instances above this dimension")->capture_default_str();
  app.add_flag("--timing", g.timing, "include per-section timings in reports");
  app.add_option("--out", g.out, "write the structured result to this file");

  std::string instance, extra;
  auto with_instance = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("instance", instance, "instance file")->required();
    return c;
  };
  with_instance("check", "verify all axioms and derived identities");
  with_instance("derive", "build the base object and check its Frobenius structure");
  with_instance("antipode", "find a weak antipode or prove there is none");
  with_instance("galois", "Galois maps and their invertibility");
  with_instance("hopfmod", "coinvariants and round trip for a Hopf module")
      ->add_option("module", extra, "module file")->required();
  with_instance("eval", "evaluate a map expression")->add_option("expr", extra, "expression")->required();
  with_instance("report", "full structured report");

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  std::size_t objects = 0, order = 0;
  bool full = false;
  std::string table, name, source;
  auto* gg = gen->add_subcommand("groupoid", "groupoid algebra (discrete unless --full)");
  gg->add_option("--objects", objects)->required();
  gg->add_flag("--full", full, "one arrow between every pair of objects");
  gg->add_option("--name", name);
  auto* gc = gen->add_subcommand("cyclic", "group algebra of a cyclic group");
  gc->add_option("--order", order)->required();
  gc->add_option("--name", name);
  auto* gm = gen->add_subcommand("monoid", "monoid algebra from a table like \"0 1; 1 1\"");
  gm->add_option("--table", table)->required();
  gm->add_option("--name", name);
  auto* gs = gen->add_subcommand("superline", "exterior algebra on one odd generator");
  auto* gd = gen->add_subcommand("dual", "transpose every structure map");
  gd->add_option("instance", source)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  float_tolerance() = g.tol;

  try {
    if (gen->parsed()) {
      WeakBraidedBimonad B;
      if (gg->parsed()) {
        B = groupoid_algebra(full ? full_groupoid(objects) : discrete_groupoid(objects),
                             name.empty() ? (full ? "G" : "K") + std::to_string(objects) : name);
      } else if (gc->parsed()) {
        B = group_algebra(cyclic_table(order), name.empty() ? "Z" + std::to_string(order) : name);
      } else if (gm->parsed()) {
        B = monoid_algebra(parse_table(table), name.empty() ? "monoid" : name);
      } else if (gs->parsed()) {
        B = super_line();
      } else {
        B = dual_instance(load_checked(source, g).B);
      }
      emit(g, serialize_instance(B));
      return 0;
    }
    auto* sub = app.get_subcommands().front();
    auto f = load_checked(instance, g);
    if (g.use_float) return dispatch(sub->get_name(), convert<double>(f.B), g, extra);
    return dispatch(sub->get_name(), f.B, g, extra);
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ArityMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidSpec& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NotAssociative& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NoUnit& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PrerequisiteAxiomFailed& e) {
    std::cout << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cout << "failed: " << e.what() << "\n";
    return 1;
  }
}
