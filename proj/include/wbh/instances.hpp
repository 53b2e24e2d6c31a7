#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wbh/bimonad.hpp"

namespace wbh {

// A groupoid with at most one arrow between any two objects (an equivalence
// relation on the objects). Arrow k goes from arrows[k].first to .second;
// the product of arrows (a,b)(b,c) is (a,c) and other products vanish.
struct GroupoidSpec {
  std::size_t objects = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

inline GroupoidSpec full_groupoid(std::size_t k) {
  GroupoidSpec g{k, {}};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) g.arrows.emplace_back(a, b);
  return g;
}

inline GroupoidSpec discrete_groupoid(std::size_t k) {
  GroupoidSpec g{k, {}};
  for (std::size_t a = 0; a < k; ++a) g.arrows.emplace_back(a, a);
  return g;
}

namespace detail {

inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_index(const GroupoidSpec& g) {
  if (g.arrows.empty()) throw InvalidSpec("groupoid has no arrows");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    auto [s, t] = g.arrows[k];
    if (s >= g.objects || t >= g.objects) throw InvalidSpec("arrow " + std::to_string(k) + " has an unknown endpoint");
    if (!idx.emplace(g.arrows[k], k).second) throw InvalidSpec("parallel arrows are not supported");
  }
  for (std::size_t o = 0; o < g.objects; ++o)
    if (!idx.count({o, o})) throw InvalidSpec("object " + std::to_string(o) + " has no identity arrow");
  for (auto [st, k] : idx) {
    if (!idx.count({st.second, st.first})) throw InvalidSpec("arrow " + std::to_string(k) + " has no inverse");
    for (auto [st2, k2] : idx)
      if (st.second == st2.first && !idx.count({st.first, st2.second}))
        throw InvalidSpec("arrows " + std::to_string(k) + " and " + std::to_string(k2) + " have no composite");
  }
  return idx;
}

// Instance with δ(b) = b⊗b, ε = 1 on every basis element, τ = flip.
inline WeakBraidedBimonad grouplike_instance(std::string name, const Mat& m, const Mat& e) {
  const std::size_t n = m.rows();
  Mat d(n * n, n), eps(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i * n + i, i) = 1;
    eps(0, i) = 1;
  }
  return make_bimonad(std::move(name), m, e, d, eps, flip(n), std::optional<Mat>(flip(n)));
}

inline std::size_t table_unit(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  if (n == 0) throw InvalidSpec("empty multiplication table");
  for (const auto& row : t)
    if (row.size() != n) throw InvalidSpec("multiplication table is not square");
  for (const auto& row : t)
    for (auto x : row)
      if (x >= n) throw InvalidSpec("multiplication table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c));
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[u][a] == a && t[a][u] == a;
    if (ok) return u;
  }
  throw NoUnit("multiplication table has no two-sided unit");
}

}  // namespace detail

inline WeakBraidedBimonad groupoid_algebra(const GroupoidSpec& g, std::string name = "groupoid") {
  auto idx = detail::arrow_index(g);
  const std::size_t n = g.arrows.size();
  Mat m(n, n * n), e(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.arrows[i].second == g.arrows[j].first) m(idx.at({g.arrows[i].first, g.arrows[j].second}), i * n + j) = 1;
  for (std::size_t o = 0; o < g.objects; ++o) e(idx.at({o, o}), 0) = 1;
  return detail::grouplike_instance(std::move(name), m, e);
}

// S(g) = g⁻¹.
inline TensorMap groupoid_antipode(const GroupoidSpec& g) {
  auto idx = detail::arrow_index(g);
  std::vector<std::size_t> perm(g.arrows.size());
  for (std::size_t k = 0; k < g.arrows.size(); ++k) perm[k] = idx.at({g.arrows[k].second, g.arrows[k].first});
  const std::size_t n = g.arrows.size();
  return {{n}, {n}, permutation_matrix(perm)};
}

// table[a][b] is the index of the product a·b.
inline WeakBraidedBimonad monoid_algebra(const std::vector<std::vector<std::size_t>>& table,
                                         std::string name = "monoid") {
  const std::size_t u = detail::table_unit(table);
  const std::size_t n = table.size();
  Mat m(n, n * n), e(n, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(table[a][b], a * n + b) = 1;
  e(u, 0) = 1;
  return detail::grouplike_instance(std::move(name), m, e);
}

inline WeakBraidedBimonad group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                        std::string name = "group") {
  const std::size_t u = detail::table_unit(table);
  for (std::size_t a = 0; a < table.size(); ++a) {
    bool inv = false;
    for (std::size_t b = 0; b < table.size() && !inv; ++b) inv = table[a][b] == u && table[b][a] == u;
    if (!inv) throw InvalidSpec("element " + std::to_string(a) + " has no inverse");
  }
  return monoid_algebra(table, std::move(name));
}

inline TensorMap group_antipode(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t u = detail::table_unit(table), n = table.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == u) perm[a] = b;
  return {{n}, {n}, permutation_matrix(perm)};
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t k) {
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return t;
}

// flip with the Koszul sign: b_i⊗b_j ↦ (−1)^{|i||j|} b_j⊗b_i.
inline Mat graded_flip(const std::vector<int>& grading) {
  const std::size_t n = grading.size();
  Mat t(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j * n + i, i * n + j) = (grading[i] && grading[j]) ? -1 : 1;
  return t;
}

// Basis {1, x}: x² = 0, x primitive, odd.
inline WeakBraidedBimonad super_line() {
  Mat m(2, 4), e(2, 1), d(4, 2), eps(1, 2);
  m(0, 0) = 1;  // 1·1
  m(1, 1) = 1;  // 1·x
  m(1, 2) = 1;  // x·1
  e(0, 0) = 1;
  d(0, 0) = 1;  // δ1 = 1⊗1
  d(1, 1) = 1;  // δx = 1⊗x + x⊗1
  d(2, 1) = 1;
  eps(0, 0) = 1;
  auto t = graded_flip({0, 1});
  return make_bimonad(std::string("SL"), m, e, d, eps, t, std::optional<Mat>(t));
}

inline TensorMap super_line_antipode() { return {{2}, {2}, Mat::diag({1, -1})}; }

// Transpose every structure map; (m, e) and (δ, ε) trade places.
template <class T>
BasicWeakBraidedBimonad<T> dual_instance(const BasicWeakBraidedBimonad<T>& B) {
  return make_bimonad(B.name.rfind("dual(", 0) == 0 && B.name.back() == ')' ? B.name.substr(5, B.name.size() - 6)
                                                                              : "dual(" + B.name + ")",
                      transpose(B.delta().matrix()), transpose(B.eps().matrix()), transpose(B.m().matrix()),
                      transpose(B.e().matrix()), transpose(B.tau().matrix()),
                      std::optional<BasicMat<T>>(transpose(B.tau_prime().matrix())));
}

// The five reference instances.
inline WeakBraidedBimonad g2() { return groupoid_algebra(full_groupoid(2), "G2"); }
inline WeakBraidedBimonad k2() { return groupoid_algebra(discrete_groupoid(2), "K2"); }
inline WeakBraidedBimonad z2() { return group_algebra(cyclic_table(2), "Z2"); }
inline WeakBraidedBimonad nz() { return monoid_algebra({{0, 1}, {1, 1}}, "NZ"); }
inline WeakBraidedBimonad sl() { return super_line(); }

}  // namespace wbh
