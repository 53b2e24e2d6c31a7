#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbh/errors.hpp"
#include "wbh/scalar.hpp"

namespace wbh {

// First entry (row-major) where two matrices disagree.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

template <class T>
class BasicMat {
 public:
  using value_type = T;
  using traits = scalar_traits<T>;

  BasicMat() = default;
  BasicMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, traits::zero()) {}
  BasicMat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static BasicMat identity(std::size_t n) {
    BasicMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one();
    return m;
  }
  static BasicMat zero(std::size_t r, std::size_t c) { return BasicMat(r, c); }
  static BasicMat diag(const std::vector<T>& d) {
    BasicMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return a_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& data() const { return a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return traits::is_zero(x); });
  }

  friend bool operator==(const BasicMat& a, const BasicMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
      if (!traits::equal(a.a_[k], b.a_[k])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using Mat = BasicMat<Rational>;

template <class T>
BasicMat<T> mul(const BasicMat<T>& a, const BasicMat<T>& b) {
  using tr = scalar_traits<T>;
  if (a.cols() != b.rows())
    throw DimensionMismatch("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  // structure matrices are very sparse, so walk the nonzeros of b by row
  std::vector<std::vector<std::size_t>> nz(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!tr::is_zero(b(k, j))) nz[k].push_back(j);
  BasicMat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (tr::is_zero(x)) continue;
      for (std::size_t j : nz[k]) c(i, j) += x * b(k, j);
    }
  return c;
}

template <class T>
BasicMat<T> operator*(const BasicMat<T>& a, const BasicMat<T>& b) { return mul(a, b); }

template <class T>
BasicMat<T> operator+(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shapes differ");
  BasicMat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
BasicMat<T> operator-(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sub: shapes differ");
  BasicMat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
BasicMat<T> scale(const T& s, BasicMat<T> a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
BasicMat<T> transpose(const BasicMat<T>& a) {
  BasicMat<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// Leftmost factor most significant: (a⊗b)(i*rb+k, j*cb+l) = a(i,j) b(k,l).
template <class T>
BasicMat<T> kron(const BasicMat<T>& a, const BasicMat<T>& b) {
  using tr = scalar_traits<T>;
  BasicMat<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (tr::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!tr::is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

template <class T>
BasicMat<T> hstack(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  BasicMat<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class T>
BasicMat<T> vstack(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  BasicMat<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

template <class T>
BasicMat<T> select_columns(const BasicMat<T>& a, const std::vector<std::size_t>& cols) {
  BasicMat<T> c(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(i, j) = a(i, cols[j]);
  return c;
}

template <class T>
BasicMat<T> select_rows(const BasicMat<T>& a, const std::vector<std::size_t>& rows) {
  BasicMat<T> c(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(rows[i], j);
  return c;
}

// Permutation matrix sending basis vector e_j to e_{perm[j]}.
template <class T = Rational>
BasicMat<T> permutation_matrix(const std::vector<std::size_t>& perm) {
  BasicMat<T> p(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= perm.size()) throw DimensionMismatch("permutation index out of range");
    p(perm[j], j) = scalar_traits<T>::one();
  }
  return p;
}

// Swap of two tensor factors of dims a and b: x⊗y ↦ y⊗x.
template <class T = Rational>
BasicMat<T> flip(std::size_t a, std::size_t b) {
  std::vector<std::size_t> perm(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) perm[i * b + j] = j * a + i;
  return permutation_matrix<T>(perm);
}

template <class T = Rational>
BasicMat<T> flip(std::size_t n) { return flip<T>(n, n); }

template <class T>
std::optional<Witness> first_difference(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("compare: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_traits<T>::equal(a(i, j), b(i, j))) return Witness{i, j};
  return std::nullopt;
}

template <class To, class From>
BasicMat<To> convert(const BasicMat<From>& a) {
  if constexpr (std::is_same_v<To, From>) {
    return a;
  } else {
    BasicMat<To> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = scalar_traits<To>::from_rational(a(i, j));
    return c;
  }
}

}  // namespace wbh
