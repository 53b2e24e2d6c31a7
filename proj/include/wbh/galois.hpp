#pragma once

#include "wbh/antipode.hpp"
#include "wbh/base_object.hpp"

namespace wbh {

struct Invertibility {
  std::size_t rows = 0, cols = 0, rank = 0;
  bool invertible() const { return rows == cols && rank == rows; }
};

template <class T>
Invertibility invertibility(const BasicMat<T>& m) {
  return {m.rows(), m.cols(), rank(m)};
}

template <class T>
struct BasicTensorOverBase {
  BasicTensorMap<T> l;        // [n,n] -> [t], the coequaliser H⊗H → H⊗_{H^ξ̄}H
  BasicTensorMap<T> section;  // [t] -> [n,n], l·section = id
  std::size_t t = 0;
};

template <class T>
struct BasicCotensor {
  BasicTensorMap<T> can;         // [c] -> [n,n], the equaliser inclusion
  BasicTensorMap<T> retraction;  // [n,n] -> [c], retraction·can = id
  std::size_t c = 0;
};

template <class T>
struct BasicGaloisData {
  BasicTensorOverBase<T> tensor;
  BasicCotensor<T> cotensor;
  BasicTensorMap<T> gamma;        // [t] -> [Ḡ]
  BasicTensorMap<T> gamma_prime;  // [T̄] -> [c]
  BasicTensorMap<T> q_tilde;      // [t] -> [n]
  Invertibility gamma_verdict, gamma_prime_verdict;
  AxiomReport report;
  std::size_t t() const { return tensor.t; }
  std::size_t c() const { return cotensor.c; }
};

using GaloisData = BasicGaloisData<Rational>;

template <class T>
BasicTensorOverBase<T> build_tensor_over_base(const BasicWeakBraidedBimonad<T>& B, const BasicBaseObject<T>&,
                                              const BasicActionData<T>& a) {
  const auto I = B.id();
  auto pair = tensor(a.rho_r, I) - tensor(I, a.rho_l);  // [n,r,n] -> [n,n]
  auto ck = cokernel_projection(pair.matrix());
  BasicTensorOverBase<T> out;
  out.t = ck.dim;
  out.l = BasicTensorMap<T>({B.dim(), B.dim()}, {ck.dim}, ck.proj);
  out.section = BasicTensorMap<T>({ck.dim}, {B.dim(), B.dim()}, right_inverse(ck.proj));
  return out;
}

namespace detail {

template <class T>
void require_zero(const BasicTensorMap<T>& f, const std::string& what) {
  if (!f.matrix().is_zero()) throw FactorizationFailed(what);
}

template <class T>
void require_equal(const BasicTensorMap<T>& a, const BasicTensorMap<T>& b, const std::string& what) {
  if (!(a == b)) throw FactorizationFailed(what);
}

}  // namespace detail

// γ with γ·l = p̄·σ.
template <class T>
BasicTensorMap<T> build_gamma(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningData<T>& E,
                              const BasicActionData<T>& a, const BasicTensorOverBase<T>& tb) {
  const auto I = B.id();
  const std::size_t n = B.dim();
  BasicTensorMap<T> pbar({n, n}, {E.g_dim()}, E.kappa_split.p);
  auto target = compose({E.sigma, pbar});
  detail::require_zero(compose({tensor(a.rho_r, I) - tensor(I, a.rho_l), target}),
                       "p-bar.sigma does not coequalise the two base actions");
  auto gamma = compose({tb.section, target});
  detail::require_equal(compose({tb.l, gamma}), target, "gamma.l differs from p-bar.sigma");
  detail::require_equal(compose({B.delta(), pbar}), compose({tensor(I, B.e()), tb.l, gamma}),
                        "p-bar.delta differs from gamma.l.(id x e)");
  return gamma;
}

template <class T>
BasicCotensor<T> build_cotensor(const BasicWeakBraidedBimonad<T>& B, const BasicActionData<T>& a) {
  const auto I = B.id();
  auto pair = tensor(a.theta_r, I) - tensor(I, a.theta_l);  // [n,n] -> [n,r,n]
  auto k = kernel_basis(pair.matrix());
  BasicCotensor<T> out;
  out.c = k.cols();
  out.can = BasicTensorMap<T>({out.c}, {B.dim(), B.dim()}, k);
  out.retraction = BasicTensorMap<T>({B.dim(), B.dim()}, {out.c}, left_inverse(k));
  return out;
}

// γ′ with can·γ′ = σ̄·ī′.
template <class T>
std::pair<BasicCotensor<T>, BasicTensorMap<T>> build_cotensor_and_gamma_prime(const BasicWeakBraidedBimonad<T>& B,
                                                                               const BasicEntwiningData<T>& E,
                                                                               const BasicActionData<T>& a) {
  const auto I = B.id();
  const std::size_t n = B.dim();
  auto ct = build_cotensor(B, a);
  BasicTensorMap<T> ibar_p({E.t_bar_dim()}, {n, n}, E.kappa_prime_split.i);
  auto source = compose({ibar_p, E.sigma_bar});
  detail::require_zero(compose({source, tensor(a.theta_r, I) - tensor(I, a.theta_l)}),
                       "sigma-bar.i-bar' does not land in the cotensor");
  auto gp = compose({source, ct.retraction});
  detail::require_equal(compose({gp, ct.can}), source, "can.gamma' differs from sigma-bar.i-bar'");
  return {std::move(ct), std::move(gp)};
}

// q̃ with q̃·l = m·(ξ̄⊗id).
template <class T>
BasicTensorMap<T> build_q_tilde(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                                const BasicActionData<T>& a, const BasicTensorOverBase<T>& tb) {
  const auto I = B.id();
  auto target = compose({tensor(E.xi_bar, I), B.m()});
  detail::require_zero(compose({tensor(a.rho_r, I) - tensor(I, a.rho_l), target}),
                       "m.(xi-bar x id) does not coequalise the two base actions");
  auto qt = compose({tb.section, target});
  detail::require_equal(compose({tb.l, qt}), target, "q~.l differs from m.(xi-bar x id)");
  return qt;
}

template <class T>
BasicGaloisData<T> build_galois(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningData<T>& E,
                                const BasicBaseObject<T>& base, const BasicActionData<T>& a) {
  using Eq = AxiomReport::Equation<T>;
  const auto I = B.id();
  const std::size_t n = B.dim();
  BasicGaloisData<T> G;
  G.tensor = build_tensor_over_base(B, base, a);
  G.gamma = build_gamma(B, E, a, G.tensor);
  auto [ct, gp] = build_cotensor_and_gamma_prime(B, E, a);
  G.cotensor = std::move(ct);
  G.gamma_prime = std::move(gp);
  G.q_tilde = build_q_tilde(B, E, a, G.tensor);
  G.gamma_verdict = invertibility(G.gamma.matrix());
  G.gamma_prime_verdict = invertibility(G.gamma_prime.matrix());

  // right H-actions: on the quotient via id⊗m, on Ḡ via p̄·(id⊗m)·(ī⊗id)
  const auto& l = G.tensor.l;
  const auto& s = G.tensor.section;
  BasicTensorMap<T> pbar({n, n}, {E.g_dim()}, E.kappa_split.p), ibar({E.g_dim()}, {n, n}, E.kappa_split.i);
  auto act_t = compose({tensor(s, I), tensor(I, B.m()), l});
  auto act_g = compose({tensor(ibar, I), tensor(I, B.m()), pbar});
  const auto Gid = BasicTensorMap<T>::identity({E.g_dim()});
  AxiomReport& r = G.report;
  r.check("galois.quotient_action", compose({tensor(l, I), act_t}), compose({tensor(I, B.m()), l}));
  r.check_all<T>("galois.gbar_action", {
      Eq{"associative", compose({tensor(act_g, I), act_g}), compose({tensor(Gid, B.m()), act_g})},
      Eq{"unital", compose({tensor(Gid, B.e()), act_g}), Gid},
  });
  r.check("galois.gamma_right_linear", compose({act_t, G.gamma}), compose({tensor(G.gamma, I), act_g}));
  r.check("galois.q_tilde_right_linear", compose({act_t, G.q_tilde}), compose({tensor(G.q_tilde, I), B.m()}));
  return G;
}

// The explicit inverses γ⁻¹ = l·(id⊗m)·(id⊗S⊗id)·(δ⊗id)·ī and
// γ′⁻¹ = p̄′·(m⊗id)·(id⊗S⊗id)·(id⊗δ)·can.
template <class T>
AxiomReport check_remark_inverses(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningData<T>& E,
                                  const BasicGaloisData<T>& G, const BasicTensorMap<T>& S) {
  using Eq = AxiomReport::Equation<T>;
  check_antipode(B, E, S).require();
  const auto I = B.id();
  const std::size_t n = B.dim();
  BasicTensorMap<T> ibar({E.g_dim()}, {n, n}, E.kappa_split.i);
  BasicTensorMap<T> pbar_p({n, n}, {E.t_bar_dim()}, E.kappa_prime_split.p);
  auto ginv = compose({ibar, tensor(B.delta(), I), tensor(I, S, I), tensor(I, B.m()), G.tensor.l});
  auto gpinv = compose({G.cotensor.can, tensor(I, B.delta()), tensor(I, S, I), tensor(B.m(), I), pbar_p});
  AxiomReport r;
  r.check_all<T>("remark.gamma_inverse", {
      Eq{"inverse.gamma = id", compose({G.gamma, ginv}), BasicTensorMap<T>::identity({G.t()})},
      Eq{"gamma.inverse = id", compose({ginv, G.gamma}), BasicTensorMap<T>::identity({E.g_dim()})},
  });
  r.check_all<T>("remark.gamma_prime_inverse", {
      Eq{"inverse.gamma' = id", compose({G.gamma_prime, gpinv}), BasicTensorMap<T>::identity({E.t_bar_dim()})},
      Eq{"gamma'.inverse = id", compose({gpinv, G.gamma_prime}), BasicTensorMap<T>::identity({G.c()})},
  });
  return r;
}

}  // namespace wbh
