#pragma once

#include <string>

#include "wbh/entwining.hpp"

namespace wbh {

enum class AntipodeOrigin { given, from_galois, from_linear_solve };

inline std::string to_string(AntipodeOrigin o) {
  switch (o) {
    case AntipodeOrigin::given: return "given";
    case AntipodeOrigin::from_galois: return "from_galois";
    case AntipodeOrigin::from_linear_solve: return "from_linear_solve";
  }
  return "?";
}

template <class T>
struct BasicAntipode {
  BasicTensorMap<T> S;  // [n]->[n]
  AntipodeOrigin origin = AntipodeOrigin::given;
};

using Antipode = BasicAntipode<Rational>;

// 1∗S = ξ, S∗1 = ξ̄, S∗1∗S = S, and the consequence 1∗S∗1 = 1.
template <class T>
AxiomReport check_antipode(const BasicWeakBraidedBimonad<T>& B, const BasicEntwiningMaps<T>& E,
                           const BasicTensorMap<T>& S) {
  const auto I = B.id();
  if (S.domain() != I.domain() || S.codomain() != I.codomain()) throw ArityMismatch("antipode must be an endomap of H");
  auto conv = [&](const BasicTensorMap<T>& f, const BasicTensorMap<T>& g) { return convolution(f, g, B); };
  AxiomReport r;
  r.check("antipode.left", conv(I, S), E.xi);
  r.check("antipode.right", conv(S, I), E.xi_bar);
  r.check("antipode.cubic", conv(conv(S, I), S), S);
  r.check("antipode.derived", conv(conv(I, S), I), I);
  return r;
}

}  // namespace wbh
