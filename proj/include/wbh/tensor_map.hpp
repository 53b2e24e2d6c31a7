#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "wbh/matrix.hpp"

namespace wbh {

// Dimensions of the tensor factors of a domain or codomain, leftmost first.
// The empty shape is the ground field (dimension 1).
using Shape = std::vector<std::size_t>;

inline std::size_t volume(const Shape& s) {
  return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
}

inline std::string to_string(const Shape& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "]";
}

inline Shape concat(Shape a, const Shape& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Shape power(std::size_t n, std::size_t k) { return Shape(k, n); }

// A linear map between tensor products, tagged with the factor dimensions.
template <class T>
class BasicTensorMap {
 public:
  BasicTensorMap() = default;
  BasicTensorMap(Shape dom, Shape cod, BasicMat<T> m) : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(m)) {
    if (mat_.rows() != volume(cod_) || mat_.cols() != volume(dom_))
      throw DimensionMismatch("tensor map " + to_string(dom_) + " -> " + to_string(cod_) + " needs a " +
                              std::to_string(volume(cod_)) + "x" + std::to_string(volume(dom_)) + " matrix, got " +
                              std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
  }

  static BasicTensorMap identity(const Shape& s) { return {s, s, BasicMat<T>::identity(volume(s))}; }

  const Shape& domain() const { return dom_; }
  const Shape& codomain() const { return cod_; }
  const BasicMat<T>& matrix() const { return mat_; }
  std::size_t in_arity() const { return dom_.size(); }
  std::size_t out_arity() const { return cod_.size(); }

  friend bool operator==(const BasicTensorMap& a, const BasicTensorMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mat_ == b.mat_;
  }

 private:
  Shape dom_, cod_;
  BasicMat<T> mat_;
};

using TensorMap = BasicTensorMap<Rational>;

template <class T>
BasicTensorMap<T> tensor(const BasicTensorMap<T>& a, const BasicTensorMap<T>& b) {
  return {concat(a.domain(), b.domain()), concat(a.codomain(), b.codomain()), kron(a.matrix(), b.matrix())};
}

template <class T, class... Rest>
BasicTensorMap<T> tensor(const BasicTensorMap<T>& a, const BasicTensorMap<T>& b, const Rest&... rest) {
  return tensor(tensor(a, b), rest...);
}

// Diagram order: chain[0] is applied first.
template <class T>
BasicTensorMap<T> compose(const std::vector<BasicTensorMap<T>>& chain) {
  if (chain.empty()) throw ArityMismatch("compose: empty chain");
  BasicTensorMap<T> acc = chain.front();
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (acc.codomain() != chain[k].domain())
      throw ArityMismatch("compose: map " + std::to_string(k - 1) + " has codomain " + to_string(acc.codomain()) +
                          " but map " + std::to_string(k) + " has domain " + to_string(chain[k].domain()));
    acc = BasicTensorMap<T>(acc.domain(), chain[k].codomain(), mul(chain[k].matrix(), acc.matrix()));
  }
  return acc;
}

template <class T>
BasicTensorMap<T> compose(std::initializer_list<BasicTensorMap<T>> chain) {
  return compose(std::vector<BasicTensorMap<T>>(chain));
}

// id ⊗ f ⊗ id with explicit padding shapes.
template <class T>
BasicTensorMap<T> lift(const BasicTensorMap<T>& f, const Shape& left, const Shape& right) {
  auto m = kron(kron(BasicMat<T>::identity(volume(left)), f.matrix()), BasicMat<T>::identity(volume(right)));
  return {concat(concat(left, f.domain()), right), concat(concat(left, f.codomain()), right), std::move(m)};
}

// Padding by copies of H, where H is read off f's first domain or codomain factor.
template <class T>
BasicTensorMap<T> lift(const BasicTensorMap<T>& f, std::size_t left, std::size_t right) {
  std::size_t n = !f.domain().empty() ? f.domain().front() : !f.codomain().empty() ? f.codomain().front() : 1;
  return lift(f, power(n, left), power(n, right));
}

// Reinterpret the factorization of the domain/codomain without touching the matrix.
template <class T>
BasicTensorMap<T> reshape(const BasicTensorMap<T>& f, Shape dom, Shape cod) {
  return {std::move(dom), std::move(cod), f.matrix()};
}

template <class T>
BasicTensorMap<T> operator+(const BasicTensorMap<T>& a, const BasicTensorMap<T>& b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain()) throw ArityMismatch("sum of maps with different shapes");
  return {a.domain(), a.codomain(), a.matrix() + b.matrix()};
}

template <class T>
BasicTensorMap<T> operator-(const BasicTensorMap<T>& a, const BasicTensorMap<T>& b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain())
    throw ArityMismatch("difference of maps with different shapes");
  return {a.domain(), a.codomain(), a.matrix() - b.matrix()};
}

template <class To, class From>
BasicTensorMap<To> convert(const BasicTensorMap<From>& f) {
  return {f.domain(), f.codomain(), convert<To>(f.matrix())};
}

}  // namespace wbh
