#pragma once

#include <optional>
#include <string>

#include "wbh/linalg.hpp"
#include "wbh/report.hpp"
#include "wbh/tensor_map.hpp"

namespace wbh {

template <class T>
struct BasicAlgebra {
  BasicTensorMap<T> m;  // [n,n] -> [n]
  BasicTensorMap<T> e;  // []    -> [n]
};

template <class T>
struct BasicCoalgebra {
  BasicTensorMap<T> delta;  // [n] -> [n,n]
  BasicTensorMap<T> eps;    // [n] -> []
};

template <class T>
struct BasicWeakYBPair {
  BasicTensorMap<T> tau, tau_prime;
  BasicTensorMap<T> nabla;  // tau · tau_prime, cached

  BasicWeakYBPair() = default;
  BasicWeakYBPair(BasicTensorMap<T> t, BasicTensorMap<T> tp)
      : tau(std::move(t)), tau_prime(std::move(tp)), nabla(compose({tau_prime, tau})) {}
};

template <class T>
struct BasicWeakBraidedBimonad {
  std::string name;
  BasicAlgebra<T> alg;
  BasicCoalgebra<T> coa;
  BasicWeakYBPair<T> yb;

  std::size_t dim() const { return alg.m.codomain().at(0); }
  const BasicTensorMap<T>& m() const { return alg.m; }
  const BasicTensorMap<T>& e() const { return alg.e; }
  const BasicTensorMap<T>& delta() const { return coa.delta; }
  const BasicTensorMap<T>& eps() const { return coa.eps; }
  const BasicTensorMap<T>& tau() const { return yb.tau; }
  const BasicTensorMap<T>& tau_prime() const { return yb.tau_prime; }
  const BasicTensorMap<T>& nabla() const { return yb.nabla; }
  BasicTensorMap<T> id(std::size_t k = 1) const { return BasicTensorMap<T>::identity(power(dim(), k)); }
};

using Algebra = BasicAlgebra<Rational>;
using Coalgebra = BasicCoalgebra<Rational>;
using WeakYBPair = BasicWeakYBPair<Rational>;
using WeakBraidedBimonad = BasicWeakBraidedBimonad<Rational>;

// Bundles raw structure matrices, checking shapes. Without tau_prime the
// inverse of tau is used (tau itself when tau is an involution).
template <class T>
BasicWeakBraidedBimonad<T> make_bimonad(std::string name, const BasicMat<T>& m, const BasicMat<T>& e,
                                        const BasicMat<T>& delta, const BasicMat<T>& eps, const BasicMat<T>& tau,
                                        const std::optional<BasicMat<T>>& tau_prime = std::nullopt) {
  const std::size_t n = m.rows();
  if (n == 0) throw InvalidSpec("dimension must be positive");
  auto tm = [](Shape d, Shape c, const BasicMat<T>& x, const char* what) {
    if (x.rows() != volume(c) || x.cols() != volume(d))
      throw InvalidSpec(std::string(what) + " has the wrong size");
    return BasicTensorMap<T>(std::move(d), std::move(c), x);
  };
  BasicWeakBraidedBimonad<T> b;
  b.name = std::move(name);
  b.alg.m = tm({n, n}, {n}, m, "m");
  b.alg.e = tm({}, {n}, e, "e");
  b.coa.delta = tm({n}, {n, n}, delta, "delta");
  b.coa.eps = tm({n}, {}, eps, "eps");
  auto t = tm({n, n}, {n, n}, tau, "tau");
  BasicTensorMap<T> tp;
  if (tau_prime) {
    tp = tm({n, n}, {n, n}, *tau_prime, "tau_prime");
  } else {
    try {
      tp = BasicTensorMap<T>({n, n}, {n, n}, invert(tau));
    } catch (const NotInvertible&) {
      throw InvalidSpec("tau is not invertible, so tau_prime must be given");
    }
  }
  b.yb = BasicWeakYBPair<T>(t, tp);
  return b;
}

template <class T>
BasicTensorMap<T> convolution(const BasicTensorMap<T>& f, const BasicTensorMap<T>& g,
                              const BasicWeakBraidedBimonad<T>& B) {
  return compose({B.delta(), tensor(f, g), B.m()});
}

template <class T>
AxiomReport check_algebra(const BasicAlgebra<T>& A) {
  const std::size_t n = A.m.codomain().at(0);
  const auto I = BasicTensorMap<T>::identity({n});
  AxiomReport r;
  r.check("alg.assoc", compose({tensor(A.m, I), A.m}), compose({tensor(I, A.m), A.m}));
  r.check("alg.unit.left", compose({tensor(A.e, I), A.m}), I);
  r.check("alg.unit.right", compose({tensor(I, A.e), A.m}), I);
  return r;
}

template <class T>
AxiomReport check_coalgebra(const BasicCoalgebra<T>& C) {
  const std::size_t n = C.delta.domain().at(0);
  const auto I = BasicTensorMap<T>::identity({n});
  AxiomReport r;
  r.check("coalg.coassoc", compose({C.delta, tensor(C.delta, I)}), compose({C.delta, tensor(I, C.delta)}));
  r.check("coalg.counit.left", compose({C.delta, tensor(C.eps, I)}), I);
  r.check("coalg.counit.right", compose({C.delta, tensor(I, C.eps)}), I);
  return r;
}

template <class T>
AxiomReport check_weak_yb(const BasicWeakYBPair<T>& yb) {
  const std::size_t n = yb.tau.domain().at(0);
  const auto I = BasicTensorMap<T>::identity({n});
  const auto &t = yb.tau, &tp = yb.tau_prime, &nab = yb.nabla;
  AxiomReport r;
  r.check("yb.reg.1", compose({t, tp, t}), t);
  r.check("yb.reg.2", compose({tp, t, tp}), tp);
  r.check("yb.reg.3", compose({tp, t}), compose({t, tp}));
  r.check("yb.tau", compose({tensor(I, t), tensor(t, I), tensor(I, t)}),
          compose({tensor(t, I), tensor(I, t), tensor(t, I)}));
  r.check("yb.tau_prime", compose({tensor(I, tp), tensor(tp, I), tensor(I, tp)}),
          compose({tensor(tp, I), tensor(I, tp), tensor(tp, I)}));
  r.check("yb.nabla.1", compose({tensor(I, nab), tensor(t, I)}), compose({tensor(t, I), tensor(I, nab)}));
  r.check("yb.nabla.2", compose({tensor(nab, I), tensor(I, t)}), compose({tensor(I, t), tensor(nab, I)}));
  r.check("yb.nabla.3", compose({tensor(I, nab), tensor(tp, I)}), compose({tensor(tp, I), tensor(I, nab)}));
  r.check("yb.nabla.4", compose({tensor(nab, I), tensor(I, tp)}), compose({tensor(I, tp), tensor(nab, I)}));
  return r;
}

// The seven conditions. Composites are written in diagram order, so the
// condition "δH·τ = Hτ·τH·Hδ" reads compose({Hδ, τH, Hτ}) on the right.
template <class T>
AxiomReport check_weak_braided_bimonad(const BasicWeakBraidedBimonad<T>& B) {
  using Eq = AxiomReport::Equation<T>;
  const auto I = B.id();
  const auto &m = B.m(), &e = B.e(), &d = B.delta(), &eps = B.eps();
  const auto &t = B.tau(), &tp = B.tau_prime(), &nab = B.nabla();
  AxiomReport r;

  r.check_all<T>("wbb1", {Eq{"m.nabla = m", compose({nab, m}), m}, Eq{"nabla.delta = delta", compose({d, nab}), d}});

  r.check_all<T>("wbb2", {
      Eq{"nabla.He = tau.eH", compose({tensor(I, e), nab}), compose({tensor(e, I), t})},
      Eq{"Heps.nabla = epsH.tau", compose({nab, tensor(I, eps)}), compose({t, tensor(eps, I)})},
      Eq{"nabla.eH = tau.He", compose({tensor(e, I), nab}), compose({tensor(I, e), t})},
      Eq{"epsH.nabla = Heps.tau", compose({nab, tensor(eps, I)}), compose({t, tensor(I, eps)})},
  });

  r.check_all<T>("wbb3", {
      Eq{"deltaH.tau = Htau.tauH.Hdelta", compose({t, tensor(d, I)}),
         compose({tensor(I, d), tensor(t, I), tensor(I, t)})},
      Eq{"tau.mH = Hm.tauH.Htau", compose({tensor(m, I), t}), compose({tensor(I, t), tensor(t, I), tensor(I, m)})},
  });

  r.check_all<T>("wbb4", {
      Eq{"Hdelta.tau = tauH.Htau.deltaH", compose({t, tensor(I, d)}),
         compose({tensor(d, I), tensor(I, t), tensor(t, I)})},
      Eq{"tau.Hm = mH.Htau.tauH", compose({tensor(I, m), t}), compose({tensor(t, I), tensor(I, t), tensor(m, I)})},
  });

  r.check("wbb5", compose({m, d}), compose({tensor(d, d), tensor(I, t, I), tensor(m, m)}));

  {
    auto a = compose({tensor(I, d, I), tensor(m, m), tensor(eps, eps)});
    auto b = compose({tensor(m, I), m, eps});
    auto c = compose({tensor(I, d, I), tensor(I, tp, I), tensor(m, m), tensor(eps, eps)});
    r.check_all<T>("wbb6", {Eq{"epseps.mm.HdeltaH = eps.m.mH", a, b}, Eq{"eps.m.mH = epseps.mm.Htau'H.HdeltaH", b, c}});
  }
  {
    auto a = compose({tensor(e, e), tensor(d, d), tensor(I, m, I)});
    auto b = compose({e, d, tensor(d, I)});
    auto c = compose({tensor(e, e), tensor(d, d), tensor(I, tp, I), tensor(I, m, I)});
    r.check_all<T>("wbb7", {Eq{"HmH.deltadelta.ee = deltaH.delta.e", a, b}, Eq{"deltaH.delta.e = HmH.Htau'H.deltadelta.ee", b, c}});
  }
  return r;
}

// Everything Definition-level in one report: algebra, coalgebra, YB-pair, wbb1..7.
template <class T>
AxiomReport check_all_axioms(const BasicWeakBraidedBimonad<T>& B) {
  AxiomReport r = check_algebra(B.alg);
  r.append(check_coalgebra(B.coa));
  r.append(check_weak_yb(B.yb));
  r.append(check_weak_braided_bimonad(B));
  return r;
}

template <class T>
void require_weak_braided_bimonad(const BasicWeakBraidedBimonad<T>& B) {
  check_all_axioms(B).require();
}

template <class To, class From>
BasicWeakBraidedBimonad<To> convert(const BasicWeakBraidedBimonad<From>& B) {
  BasicWeakBraidedBimonad<To> b;
  b.name = B.name;
  b.alg = {convert<To>(B.alg.m), convert<To>(B.alg.e)};
  b.coa = {convert<To>(B.coa.delta), convert<To>(B.coa.eps)};
  b.yb = BasicWeakYBPair<To>(convert<To>(B.yb.tau), convert<To>(B.yb.tau_prime));
  return b;
}

}  // namespace wbh
