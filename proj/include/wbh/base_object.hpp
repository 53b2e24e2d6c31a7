#pragma once

#include "wbh/entwining.hpp"

namespace wbh {

// The split image of ξ̄ with its algebra and coalgebra structure.
template <class T>
struct BasicBaseObject {
  BasicSplitting<T> split;
  BasicTensorMap<T> q, iota;  // [n]->[r], [r]->[n]
  BasicTensorMap<T> m_base, e_base, delta_base, eps_base, upsilon;
  AxiomReport structure;  // equaliser / coequaliser witnesses
  std::size_t r() const { return split.rank; }
  std::size_t n() const { return q.domain().at(0); }
};

template <class T>
struct BasicActionData {
  BasicTensorMap<T> rho_l, rho_r;      // [r,n]->[n], [n,r]->[n]
  BasicTensorMap<T> theta_l, theta_r;  // [n]->[r,n], [n]->[n,r]
  AxiomReport report;
};

using BaseObject = BasicBaseObject<Rational>;
using ActionData = BasicActionData<Rational>;

namespace detail {

// Does the column space of k equal the column space of i?
template <class T>
bool same_column_space(const BasicMat<T>& k, const BasicMat<T>& i) {
  const std::size_t rk = rank(k), ri = rank(i);
  return rk == ri && rank(hstack(k, i)) == rk;
}

}  // namespace detail

template <class T>
BasicBaseObject<T> build_base(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningData<T>& E) {
  const std::size_t n = B.dim();
  const auto I = B.id();
  BasicBaseObject<T> b;
  b.split = split_idempotent(E.xi_bar.matrix());
  const std::size_t r = b.split.rank;
  b.q = BasicTensorMap<T>({n}, {r}, b.split.p);
  b.iota = BasicTensorMap<T>({r}, {n}, b.split.i);
  b.m_base = compose({tensor(b.iota, b.iota), B.m(), b.q});
  b.e_base = compose({B.e(), b.q});
  b.delta_base = compose({b.iota, B.delta(), tensor(b.q, b.q)});
  b.eps_base = compose({b.iota, B.eps()});
  b.upsilon = compose({B.e(), B.delta(), tensor(b.q, b.q)});

  // the image of ι is where δ agrees with (χ⊗id)·δ, and with σ·(e⊗id)
  auto eq_chi = compose({B.delta(), tensor(E.chi, I)}) - B.delta();
  auto eq_sigma = compose({tensor(B.e(), I), E.sigma}) - B.delta();
  b.structure.flag("base.equaliser.chi", detail::same_column_space(kernel_basis(eq_chi.matrix()), b.split.i));
  b.structure.flag("base.equaliser.sigma", detail::same_column_space(kernel_basis(eq_sigma.matrix()), b.split.i));
  // and q coequalises m·(χ̄⊗id) and m, with a quotient of the right size
  auto coeq = compose({tensor(E.chi_bar, I), B.m()}) - B.m();
  auto ck = cokernel_projection(coeq.matrix());
  b.structure.flag("base.coequaliser", ck.dim == r && mul(b.split.p, coeq.matrix()).is_zero(),
                   "cokernel dim " + std::to_string(ck.dim));
  b.structure.require();
  return b;
}

template <class T>
AxiomReport check_frobenius_separable(const BasicBaseObject<T>& b) {
  using Eq = AxiomReport::Equation<T>;
  const auto R = BasicTensorMap<T>::identity({b.r()});
  const auto &m = b.m_base, &e = b.e_base, &d = b.delta_base, &eps = b.eps_base, &u = b.upsilon;
  AxiomReport out;
  for (auto x : check_algebra(BasicAlgebra<T>{m, e}).entries) out.entries.push_back({"base." + x.id, x.holds, x.witness, x.detail, true});
  for (auto x : check_coalgebra(BasicCoalgebra<T>{d, eps}).entries) out.entries.push_back({"base." + x.id, x.holds, x.witness, x.detail, true});
  out.check_all<T>("base.frobenius", {
      Eq{"delta.m = (id x m).(delta x id)", compose({m, d}), compose({tensor(d, R), tensor(R, m)})},
      Eq{"delta.m = (m x id).(id x delta)", compose({m, d}), compose({tensor(R, d), tensor(m, R)})},
  });
  out.check("base.separable", compose({d, m}), R);
  out.check("base.upsilon.unit", compose({u, m}), e);
  out.check("base.upsilon.left", compose({tensor(u, R), tensor(R, m)}), d);
  out.check("base.upsilon.right", compose({tensor(R, u), tensor(m, R)}), d);
  return out;
}

template <class T>
BasicActionData<T> build_actions(const BasicWeakBraidedBimonad<T>& B, const BasicBaseObject<T>& b) {
  const auto I = B.id();
  const auto R = BasicTensorMap<T>::identity({b.r()});
  BasicActionData<T> a;
  a.rho_l = compose({tensor(b.iota, I), B.m()});
  a.rho_r = compose({tensor(I, b.iota), B.m()});
  a.theta_l = compose({B.delta(), tensor(b.q, I)});
  a.theta_r = compose({B.delta(), tensor(I, b.q)});
  const auto &mb = b.m_base, &eb = b.e_base, &db = b.delta_base, &epsb = b.eps_base;
  auto& r = a.report;
  r.check("act.left.assoc", compose({tensor(mb, I), a.rho_l}), compose({tensor(R, a.rho_l), a.rho_l}));
  r.check("act.left.unit", compose({tensor(eb, I), a.rho_l}), I);
  r.check("act.right.assoc", compose({tensor(I, mb), a.rho_r}), compose({tensor(a.rho_r, R), a.rho_r}));
  r.check("act.right.unit", compose({tensor(I, eb), a.rho_r}), I);
  r.check("act.bimodule", compose({tensor(a.rho_l, R), a.rho_r}), compose({tensor(R, a.rho_r), a.rho_l}));
  r.check("coact.left.coassoc", compose({a.theta_l, tensor(db, I)}), compose({a.theta_l, tensor(R, a.theta_l)}));
  r.check("coact.left.counit", compose({a.theta_l, tensor(epsb, I)}), I);
  r.check("coact.right.coassoc", compose({a.theta_r, tensor(I, db)}), compose({a.theta_r, tensor(a.theta_r, R)}));
  r.check("coact.right.counit", compose({a.theta_r, tensor(I, epsb)}), I);
  r.check("coact.bicomodule", compose({a.theta_r, tensor(a.theta_l, R)}), compose({a.theta_l, tensor(R, a.theta_r)}));
  r.check("act.q_right_linear", compose({tensor(I, b.iota), B.m(), b.q}), compose({tensor(b.q, R), mb}));
  r.require();
  return a;
}

// Splitting of the H^ξ̄-balanced pair for a left base module (N, g):
// π = (ρ_r⊗id⊗id)·(id⊗δ_b⊗id)·(id⊗e_b⊗id) : H⊗N → H⊗H^ξ̄⊗N.
template <class T>
void add_pi_splitting_equations(const BasicWeakBraidedBimonad<T>& B, const BasicBaseObject<T>& b,
                                   const BasicTensorMap<T>& g, std::vector<typename AxiomReport::Equation<T>>& section,
                                   std::vector<typename AxiomReport::Equation<T>>& coeq, const std::string& label) {
  const auto I = B.id();
  const auto R = BasicTensorMap<T>::identity({b.r()});
  const auto N = BasicTensorMap<T>::identity(g.codomain());
  auto rho_r = compose({tensor(I, b.iota), B.m()});
  auto pi = compose({tensor(I, b.e_base, N), tensor(I, b.delta_base, N), tensor(rho_r, R, N)});
  section.push_back({label, compose({pi, tensor(rho_r, N)}), BasicTensorMap<T>::identity(concat({B.dim()}, g.codomain()))});
  auto Hg = tensor(I, g);
  coeq.push_back({label, compose({tensor(rho_r, N), pi, Hg}), compose({Hg, pi, Hg})});
}

template <class T>
AxiomReport check_pi_splitting(const BasicWeakBraidedBimonad<T>& B, const BasicBaseObject<T>& b) {
  std::vector<AxiomReport::Equation<T>> section, coeq;
  // the regular base module, and H with the left action ρ_l
  add_pi_splitting_equations(B, b, b.m_base, section, coeq, "regular module");
  add_pi_splitting_equations(B, b, compose({tensor(b.iota, B.id()), B.m()}), section, coeq, "H with rho_l");
  AxiomReport r;
  r.check_all("pi.section", section);
  r.check_all("pi.coequalise", coeq);
  return r;
}

}  // namespace wbh
