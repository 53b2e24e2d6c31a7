#pragma once

#include <optional>

#include "wbh/antipode.hpp"
#include "wbh/base_object.hpp"

namespace wbh {

// Carriers are arbitrary shapes so that H⊗V keeps its factorization.
template <class T>
struct BasicHModule {
  Shape carrier;
  BasicTensorMap<T> h;  // [n]+carrier -> carrier
};

template <class T>
struct BasicHComodule {
  Shape carrier;
  BasicTensorMap<T> theta;  // carrier -> [n]+carrier
};

template <class T>
struct BasicMixedBimodule {
  Shape carrier;
  BasicTensorMap<T> h, theta;
  BasicHModule<T> module() const { return {carrier, h}; }
  BasicHComodule<T> comodule() const { return {carrier, theta}; }
};

template <class T>
struct BasicBaseModule {
  Shape carrier;
  BasicTensorMap<T> g;  // [r]+carrier -> carrier
};

using HModule = BasicHModule<Rational>;
using HComodule = BasicHComodule<Rational>;
using MixedBimodule = BasicMixedBimodule<Rational>;
using BaseModule = BasicBaseModule<Rational>;

template <class T>
AxiomReport check_module(const BasicWeakBraidedBimonad<T>& B, const BasicHModule<T>& M) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(M.carrier);
  AxiomReport r;
  r.check("mod.assoc", compose({tensor(B.m(), D), M.h}), compose({tensor(I, M.h), M.h}));
  r.check("mod.unit", compose({tensor(B.e(), D), M.h}), D);
  return r;
}

template <class T>
AxiomReport check_comodule(const BasicWeakBraidedBimonad<T>& B, const BasicHComodule<T>& C) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(C.carrier);
  AxiomReport r;
  r.check("comod.coassoc", compose({C.theta, tensor(B.delta(), D)}), compose({C.theta, tensor(I, C.theta)}));
  r.check("comod.counit", compose({C.theta, tensor(B.eps(), D)}), D);
  return r;
}

template <class T>
AxiomReport check_base_module(const BasicBaseObject<T>& b, const BasicBaseModule<T>& N) {
  const auto R = BasicTensorMap<T>::identity({b.r()});
  const auto D = BasicTensorMap<T>::identity(N.carrier);
  AxiomReport r;
  r.check("basemod.assoc", compose({tensor(b.m_base, D), N.g}), compose({tensor(R, N.g), N.g}));
  r.check("basemod.unit", compose({tensor(b.e_base, D), N.g}), D);
  return r;
}

template <class T>
AxiomReport check_mixed_bimodule(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                 const BasicMixedBimodule<T>& M) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(M.carrier);
  AxiomReport r = check_module(B, M.module());
  r.append(check_comodule(B, M.comodule()));
  r.check("mixed.omega_square", compose({M.h, M.theta}),
          compose({tensor(I, M.theta), tensor(E.omega, D), tensor(I, M.h)}));
  return r;
}

// (H⊗V, m⊗id, δ⊗id) for a d-dimensional V.
template <class T>
BasicMixedBimodule<T> K_omega(const BasicWeakBraidedBimonad<T>& B, std::size_t d) {
  check_weak_braided_bimonad(B).require();
  const auto V = BasicTensorMap<T>::identity({d});
  return {{B.dim(), d}, tensor(B.m(), V), tensor(B.delta(), V)};
}

// The regular bimodule (H, m, δ).
template <class T>
BasicMixedBimodule<T> regular_bimodule(const BasicWeakBraidedBimonad<T>& B) {
  return {{B.dim()}, B.m(), B.delta()};
}

template <class T>
struct BasicInducedComonad {
  BasicTensorMap<T> gamma;  // Γ on H⊗a
  BasicSplitting<T> split;
  BasicHModule<T> G;        // G(a,h) with its induced action
  BasicTensorMap<T> delta_tilde, eps_tilde;
  AxiomReport report;
};

template <class T>
struct BasicInducedMonad {
  BasicTensorMap<T> gamma_prime;
  BasicSplitting<T> split;
  BasicHComodule<T> Tc;  // T(a,θ) with its induced coaction
  BasicTensorMap<T> m_tilde, e_tilde;
  AxiomReport report;
};

using InducedComonad = BasicInducedComonad<Rational>;
using InducedMonad = BasicInducedMonad<Rational>;

namespace detail {

template <class T>
struct ComonadLevel {
  BasicHModule<T> M;
  BasicTensorMap<T> gamma, p, i;  // p: [n]+carrier -> [k], i: [k] -> [n]+carrier
  BasicHModule<T> G;
};

template <class T>
ComonadLevel<T> comonad_level(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                              const BasicHModule<T>& M) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(M.carrier);
  ComonadLevel<T> L;
  L.M = M;
  L.gamma = compose({tensor(B.e(), I, D), tensor(E.omega, D), tensor(I, M.h)});
  auto s = split_idempotent(L.gamma.matrix());
  const Shape HM = concat({B.dim()}, M.carrier);
  L.p = BasicTensorMap<T>(HM, {s.rank}, s.p);
  L.i = BasicTensorMap<T>({s.rank}, HM, s.i);
  // action p·H(h)·ω·H(i)
  L.G = {{s.rank}, compose({tensor(I, L.i), tensor(E.omega, D), tensor(I, M.h), L.p})};
  return L;
}

template <class T>
struct MonadLevel {
  BasicHComodule<T> C;
  BasicTensorMap<T> gamma, p, i;
  BasicHComodule<T> Tc;
};

template <class T>
MonadLevel<T> monad_level(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                          const BasicHComodule<T>& C) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(C.carrier);
  MonadLevel<T> L;
  L.C = C;
  L.gamma = compose({tensor(I, C.theta), tensor(E.omega, D), tensor(B.eps(), I, D)});
  auto s = split_idempotent(L.gamma.matrix());
  const Shape HC = concat({B.dim()}, C.carrier);
  L.p = BasicTensorMap<T>(HC, {s.rank}, s.p);
  L.i = BasicTensorMap<T>({s.rank}, HC, s.i);
  // coaction H(p′)·ω·H(θ)·i′
  L.Tc = {{s.rank}, compose({L.i, tensor(I, C.theta), tensor(E.omega, D), tensor(I, L.p)})};
  return L;
}

}  // namespace detail

// Comonad on H-modules induced by the entwining, evaluated at M and checked
// through three levels G(M), GG(M), GGG(M).
template <class T>
BasicInducedComonad<T> induced_comonad_on_module(const BasicWeakBraidedBimonad<T>& B,
                                                 const BasicEntwiningMaps<T>& E, const BasicHModule<T>& M) {
  check_module(B, M).require();
  const auto I = B.id();
  auto L1 = detail::comonad_level(B, E, M);
  auto L2 = detail::comonad_level(B, E, L1.G);
  auto L3 = detail::comonad_level(B, E, L2.G);
  // δ̃ at a level: p_{G}·H(p)·δ·i
  auto delta_at = [&](const detail::ComonadLevel<T>& a, const detail::ComonadLevel<T>& ga) {
    const auto D = BasicTensorMap<T>::identity(a.M.carrier);
    return compose({a.i, tensor(B.delta(), D), tensor(I, a.p), ga.p});
  };
  // counit (ε⊗id)·i
  auto eps_at = [&](const detail::ComonadLevel<T>& a) {
    return compose({a.i, tensor(B.eps(), BasicTensorMap<T>::identity(a.M.carrier))});
  };
  // G on a module map f : a → b
  auto G = [&](const detail::ComonadLevel<T>& a, const detail::ComonadLevel<T>& b, const BasicTensorMap<T>& f) {
    return compose({a.i, tensor(I, f), b.p});
  };
  BasicInducedComonad<T> out;
  out.gamma = L1.gamma;
  out.split = {L1.p.matrix(), L1.i.matrix(), L1.p.codomain()[0]};
  out.G = L1.G;
  out.delta_tilde = delta_at(L1, L2);
  out.eps_tilde = eps_at(L1);
  auto d1 = out.delta_tilde, d2 = delta_at(L2, L3);
  const auto G1 = BasicTensorMap<T>::identity(L1.G.carrier);
  auto& r = out.report;
  r.append(check_module(B, L1.G));
  r.check("comonad.coassoc", compose({d1, d2}), compose({d1, G(L2, L3, d1)}));
  r.check("comonad.counit.left", compose({d1, eps_at(L2)}), G1);
  r.check("comonad.counit.right", compose({d1, G(L2, L1, out.eps_tilde)}), G1);
  return out;
}

template <class T>
BasicInducedMonad<T> induced_monad_on_comodule(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                               const BasicHComodule<T>& C) {
  check_comodule(B, C).require();
  const auto I = B.id();
  auto L1 = detail::monad_level(B, E, C);
  auto L2 = detail::monad_level(B, E, L1.Tc);
  auto L3 = detail::monad_level(B, E, L2.Tc);
  // m̃ at a level: p′·m·H(i′)·i′_{T}
  auto mult_at = [&](const detail::MonadLevel<T>& a, const detail::MonadLevel<T>& ta) {
    const auto D = BasicTensorMap<T>::identity(a.C.carrier);
    return compose({ta.i, tensor(I, a.i), tensor(B.m(), D), a.p});
  };
  // unit p′·(e⊗id)
  auto unit_at = [&](const detail::MonadLevel<T>& a) {
    return compose({tensor(B.e(), BasicTensorMap<T>::identity(a.C.carrier)), a.p});
  };
  auto Tf = [&](const detail::MonadLevel<T>& a, const detail::MonadLevel<T>& b, const BasicTensorMap<T>& f) {
    return compose({a.i, tensor(I, f), b.p});
  };
  BasicInducedMonad<T> out;
  out.gamma_prime = L1.gamma;
  out.split = {L1.p.matrix(), L1.i.matrix(), L1.p.codomain()[0]};
  out.Tc = L1.Tc;
  out.m_tilde = mult_at(L1, L2);
  out.e_tilde = unit_at(L1);
  auto m1 = out.m_tilde, m2 = mult_at(L2, L3);
  const auto T1 = BasicTensorMap<T>::identity(L1.Tc.carrier);
  auto& r = out.report;
  r.append(check_comodule(B, L1.Tc));
  r.check("monad.assoc", compose({Tf(L3, L2, m1), m1}), compose({m2, m1}));
  r.check("monad.unit.left", compose({unit_at(L2), m1}), T1);
  r.check("monad.unit.right", compose({Tf(L1, L2, out.e_tilde), m1}), T1);
  return out;
}

template <class T>
struct BasicCoinvariants {
  BasicTensorMap<T> inclusion;   // [k] -> carrier
  BasicTensorMap<T> retraction;  // carrier -> [k]
  std::size_t dim = 0;
  std::optional<BasicTensorMap<T>> beta;
  AxiomReport report;
};

using Coinvariants = BasicCoinvariants<Rational>;

// Equaliser of θ and (id⊗h)·(δ⊗id)·(e⊗id). With an antipode also checks the
// idempotent β = h·(S⊗id)·θ and the square h·(id⊗β)·θ = id.
template <class T>
BasicCoinvariants<T> coinvariants(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                  const std::optional<BasicTensorMap<T>>& S, const BasicMixedBimodule<T>& M) {
  check_mixed_bimodule(B, E, M).require();
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(M.carrier);
  auto other = compose({tensor(B.e(), D), tensor(B.delta(), D), tensor(I, M.h)});
  auto k = kernel_basis((M.theta - other).matrix());
  BasicCoinvariants<T> out;
  out.dim = k.cols();
  out.inclusion = BasicTensorMap<T>({out.dim}, M.carrier, k);
  out.retraction = BasicTensorMap<T>(M.carrier, {out.dim}, left_inverse(k));
  if (S) {
    auto beta = compose({M.theta, tensor(*S, D), M.h});
    out.beta = beta;
    out.report.check("coinv.beta_idempotent", compose({beta, beta}), beta);
    out.report.flag("coinv.beta_image", detail::same_column_space(beta.matrix(), k));
    out.report.check("coinv.square", compose({M.theta, tensor(I, beta), M.h}), D);
  }
  return out;
}

template <class T>
struct BasicInducedBimodule {
  BasicMixedBimodule<T> M;       // H⊗_{H^ξ̄}N with induced h, θ
  BasicTensorMap<T> L, section;  // [n]+carrier(N) -> [u] and back
};

// H⊗_{H^ξ̄}N as a Hopf module: coequaliser of ρ_r⊗id and id⊗g.
template <class T>
BasicInducedBimodule<T> induced_bimodule(const BasicWeakBraidedBimonad<T>& B, const BasicBaseObject<T>& b,
                                         const BasicBaseModule<T>& N) {
  const auto I = B.id();
  const auto R = BasicTensorMap<T>::identity({b.r()});
  const auto D = BasicTensorMap<T>::identity(N.carrier);
  auto rho_r = compose({tensor(I, b.iota), B.m()});
  auto pair = tensor(rho_r, D) - tensor(I, N.g);
  auto ck = cokernel_projection(pair.matrix());
  const Shape HN = concat({B.dim()}, N.carrier);
  BasicInducedBimodule<T> out;
  out.L = BasicTensorMap<T>(HN, {ck.dim}, ck.proj);
  out.section = BasicTensorMap<T>({ck.dim}, HN, right_inverse(ck.proj));
  const auto U = BasicTensorMap<T>::identity({ck.dim});
  auto h = compose({tensor(I, out.section), tensor(B.m(), D), out.L});
  auto theta = compose({out.section, tensor(B.delta(), D), tensor(I, out.L)});
  // both structure maps must be well defined on the quotient
  if (!(compose({tensor(I, out.L), h}) == compose({tensor(B.m(), D), out.L})))
    throw InconsistencyError("induced action is not well defined");
  if (!(compose({out.L, theta}) == compose({tensor(B.delta(), D), tensor(I, out.L)})))
    throw InconsistencyError("induced coaction is not well defined");
  (void)R;
  out.M = {{ck.dim}, h, theta};
  return out;
}

template <class T>
struct BasicRoundTrip {
  std::size_t module_dim = 0, coinvariant_dim = 0, induced_dim = 0;
  Invertibility comparison;
  AxiomReport report;
};

using RoundTrip = BasicRoundTrip<Rational>;

// Hopf module M → base module N = M^{co H} → H⊗_{H^ξ̄}N → M.
template <class T>
BasicRoundTrip<T> fundamental_roundtrip(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                        const BasicBaseObject<T>& b, const BasicTensorMap<T>& S,
                                        const BasicMixedBimodule<T>& M) {
  const auto I = B.id();
  const auto D = BasicTensorMap<T>::identity(M.carrier);
  auto co = coinvariants(B, E, std::optional<BasicTensorMap<T>>(S), M);
  BasicRoundTrip<T> out;
  out.module_dim = volume(M.carrier);
  out.coinvariant_dim = co.dim;
  auto& r = out.report;
  r.append(co.report);
  // base action on the coinvariants
  auto act = compose({tensor(b.iota, co.inclusion), M.h});
  r.check("roundtrip.coinvariant_action", compose({act, co.retraction, co.inclusion}), act);
  BasicBaseModule<T> N{{co.dim}, compose({act, co.retraction})};
  auto bm = check_base_module(b, N);
  r.flag("roundtrip.base_module", bm.all_pass(), bm.all_pass() ? "" : bm.first_failure()->id);
  auto ind = induced_bimodule(B, b, N);
  out.induced_dim = ind.M.carrier[0];
  auto mb = check_mixed_bimodule(B, E, ind.M);
  r.flag("roundtrip.induced_bimodule", mb.all_pass(), mb.all_pass() ? "" : mb.first_failure()->id);
  // comparison Φ with Φ·L = h·(id⊗ι_N)
  auto target = compose({tensor(I, co.inclusion), M.h});
  auto phi = compose({ind.section, target});
  r.check("roundtrip.comparison_factor", compose({ind.L, phi}), target);
  r.check("roundtrip.comparison_linear", compose({ind.M.h, phi}), compose({tensor(I, phi), M.h}));
  r.check("roundtrip.comparison_colinear", compose({phi, M.theta}), compose({ind.M.theta, tensor(I, phi)}));
  out.comparison = invertibility(phi.matrix());
  r.flag("roundtrip.bijective", out.comparison.invertible(),
         std::to_string(out.comparison.rows) + "x" + std::to_string(out.comparison.cols) + " rank " +
             std::to_string(out.comparison.rank));
  if (!out.comparison.invertible())
    throw RoundTripFailed("comparison map is not bijective",
                          std::max(out.comparison.rows, out.comparison.cols) - out.comparison.rank);
  (void)D;
  return out;
}

// Base module N → H⊗_{H^ξ̄}N → its coinvariants, compared with N via j = L·(e⊗id).
template <class T>
BasicRoundTrip<T> roundtrip_from_base_module(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                             const BasicBaseObject<T>& b, const BasicTensorMap<T>& S,
                                             const BasicBaseModule<T>& N) {
  check_base_module(b, N).require();
  const auto D = BasicTensorMap<T>::identity(N.carrier);
  auto ind = induced_bimodule(B, b, N);
  BasicRoundTrip<T> out;
  out.module_dim = volume(N.carrier);
  out.induced_dim = ind.M.carrier[0];
  auto& r = out.report;
  auto mb = check_mixed_bimodule(B, E, ind.M);
  r.flag("roundtrip.induced_bimodule", mb.all_pass(), mb.all_pass() ? "" : mb.first_failure()->id);
  auto co = coinvariants(B, E, std::optional<BasicTensorMap<T>>(S), ind.M);
  out.coinvariant_dim = co.dim;
  r.append(co.report);
  auto j = compose({tensor(B.e(), D), ind.L});
  r.check("roundtrip.unit_coinvariant", compose({j, co.retraction, co.inclusion}), j);
  auto jc = compose({j, co.retraction});  // N → coinvariants
  // base action on the coinvariants of the induced module, and j is base linear
  auto act = compose({tensor(b.iota, co.inclusion), ind.M.h, co.retraction});
  r.check("roundtrip.unit_linear", compose({N.g, jc}), compose({tensor(BasicTensorMap<T>::identity({b.r()}), jc), act}));
  out.comparison = invertibility(jc.matrix());
  r.flag("roundtrip.bijective", out.comparison.invertible(),
         std::to_string(out.comparison.rows) + "x" + std::to_string(out.comparison.cols) + " rank " +
             std::to_string(out.comparison.rank));
  if (!out.comparison.invertible())
    throw RoundTripFailed("unit map is not bijective",
                          std::max(out.comparison.rows, out.comparison.cols) - out.comparison.rank);
  return out;
}

}  // namespace wbh
