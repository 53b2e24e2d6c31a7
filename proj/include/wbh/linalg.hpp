#pragma once

#include <cstddef>
#include <vector>

#include "wbh/matrix.hpp"

namespace wbh {

template <class T>
struct Echelon {
  BasicMat<T> reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan. Exact mode takes the first nonzero entry of the column as
// pivot so that every derived basis is reproducible; float mode takes the
// largest magnitude for stability.
template <class T>
Echelon<T> rref(BasicMat<T> a) {
  using tr = scalar_traits<T>;
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = a.rows();
    if constexpr (tr::exact) {
      for (std::size_t i = row; i < a.rows(); ++i)
        if (!tr::is_zero(a(i, col))) { piv = i; break; }
    } else {
      double best = 0;
      for (std::size_t i = row; i < a.rows(); ++i)
        if (!tr::is_zero(a(i, col)) && tr::magnitude(a(i, col)) > best) { best = tr::magnitude(a(i, col)); piv = i; }
    }
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    T inv = tr::one() / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || tr::is_zero(a(i, col))) continue;
      T f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!tr::is_zero(a(row, j))) a(i, j) -= f * a(row, j);
      if constexpr (!tr::exact) a(i, col) = tr::zero();
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const BasicMat<T>& a) { return rref(a).pivots.size(); }

// Columns span the null space. One column per free variable, that variable set to 1.
template <class T>
BasicMat<T> kernel_basis(const BasicMat<T>& a) {
  using tr = scalar_traits<T>;
  auto ech = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  BasicMat<T> k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = tr::one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k(ech.pivots[r], f) = -ech.reduced(r, free[f]);
  }
  return k;
}

template <class T>
struct Cokernel {
  BasicMat<T> proj;  // dim × rows(m), surjective, proj·m = 0
  std::size_t dim = 0;
};

template <class T>
Cokernel<T> cokernel_projection(const BasicMat<T>& m) {
  Cokernel<T> c;
  c.proj = transpose(kernel_basis(transpose(m)));
  c.dim = c.proj.rows();
  return c;
}

template <class T>
struct BasicSplitting {
  BasicMat<T> p;  // r × n
  BasicMat<T> i;  // n × r
  std::size_t rank = 0;
};

using Splitting = BasicSplitting<Rational>;

// Rank factorization e = i·p with i the pivot columns of e and p the nonzero
// rows of its echelon form. Idempotence makes p·i the identity.
template <class T>
BasicSplitting<T> split_idempotent(const BasicMat<T>& e) {
  if (!e.is_square()) throw NotIdempotent("split_idempotent: matrix is not square");
  if (auto w = first_difference(mul(e, e), e))
    throw NotIdempotent("split_idempotent: e*e differs from e at (" + std::to_string(w->row) + "," +
                        std::to_string(w->col) + ")");
  auto ech = rref(e);
  BasicSplitting<T> s;
  s.rank = ech.pivots.size();
  s.i = select_columns(e, ech.pivots);
  std::vector<std::size_t> top(s.rank);
  for (std::size_t k = 0; k < s.rank; ++k) top[k] = k;
  s.p = select_rows(ech.reduced, top);
  if (!(mul(s.p, s.i) == BasicMat<T>::identity(s.rank)) || !(mul(s.i, s.p) == e))
    throw InconsistencyError("split_idempotent: factorization check failed");
  return s;
}

template <class T>
BasicMat<T> invert(const BasicMat<T>& a) {
  if (!a.is_square()) throw NotInvertible(a.rows(), a.cols(), rank(a));
  const std::size_t n = a.rows();
  auto ech = rref(hstack(a, BasicMat<T>::identity(n)));
  std::size_t r = 0;
  while (r < ech.pivots.size() && ech.pivots[r] < n) ++r;
  if (r < n) throw NotInvertible(n, n, r);
  BasicMat<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

// s with a·s = id, for a of full row rank. Supported on the pivot columns of a.
template <class T>
BasicMat<T> right_inverse(const BasicMat<T>& a) {
  auto ech = rref(a);
  if (ech.pivots.size() != a.rows()) throw NotInvertible(a.rows(), a.cols(), ech.pivots.size());
  auto sq = invert(select_columns(a, ech.pivots));
  BasicMat<T> s(a.cols(), a.rows());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t j = 0; j < a.rows(); ++j) s(ech.pivots[k], j) = sq(k, j);
  return s;
}

// r with r·a = id, for a of full column rank.
template <class T>
BasicMat<T> left_inverse(const BasicMat<T>& a) { return transpose(right_inverse(transpose(a))); }

template <class T>
struct AffineSolution {
  bool consistent = false;
  std::size_t rank = 0;            // rank of the coefficient matrix
  std::size_t augmented_rank = 0;  // rank of [a | b]
  BasicMat<T> particular;          // free variables set to zero
  BasicMat<T> homogeneous;         // kernel basis, one column per free variable
};

// Solves a·x = b for a single right-hand column b.
template <class T>
AffineSolution<T> solve_affine(const BasicMat<T>& a, const BasicMat<T>& b) {
  if (b.rows() != a.rows() || b.cols() != 1) throw DimensionMismatch("solve_affine: bad right-hand side");
  AffineSolution<T> s;
  auto ech = rref(hstack(a, b));
  s.augmented_rank = ech.pivots.size();
  s.rank = s.augmented_rank;
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) s.rank -= 1;
  s.consistent = s.rank == s.augmented_rank;
  s.homogeneous = kernel_basis(a);
  s.particular = BasicMat<T>(a.cols(), 1);
  if (s.consistent)
    for (std::size_t r = 0; r < s.rank; ++r) s.particular(ech.pivots[r], 0) = ech.reduced(r, a.cols());
  return s;
}

}  // namespace wbh
