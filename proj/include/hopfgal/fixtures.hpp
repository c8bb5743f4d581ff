#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "hopfgal/algebroid/bialgebroid.hpp"

namespace hopfgal::fixtures {

namespace detail {

template <ExactField F>
BasedAlgebra<F> algebra_from_table(const F& field, std::size_t dim, const std::function<Vector<F>(std::size_t, std::size_t)>& product, std::size_t unit_index) {
  std::vector<typename F::Element> s;
  s.reserve(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto p = product(i, j);
      s.insert(s.end(), p.begin(), p.end());
    }
  return BasedAlgebra<F>(field, dim, std::move(s), unit_vector(field, dim, unit_index));
}

}  // namespace detail

/// Group algebra of a finite group given by its multiplication table (element 0 is the identity).
template <ExactField F>
LeftBialgebroid<F> group_algebra(const F& field, const std::vector<std::vector<std::size_t>>& table) {
  const auto n = table.size();
  auto alg = detail::algebra_from_table<F>(field, n, [&](std::size_t i, std::size_t j) { return unit_vector(field, n, table[i][j]); }, 0);
  std::vector<Vector<F>> cols;
  for (std::size_t g = 0; g < n; ++g) cols.push_back(tensor(unit_vector(field, n, g), unit_vector(field, n, g)));
  LinMap<F> counit(field, 1, n);
  for (std::size_t g = 0; g < n; ++g) counit(0, g) = field.one();
  return LeftBialgebroid<F>::hopf_algebra(std::move(alg), LinMap<F>::from_columns(field, n * n, cols), std::move(counit));
}

template <ExactField F>
LeftBialgebroid<F> cyclic_group_algebra(const F& field, std::size_t order) {
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  return group_algebra(field, table);
}

/// k S_3 with the permutations of {0,1,2} in lexicographic order.
template <ExactField F>
LeftBialgebroid<F> symmetric_group_s3(const F& field) {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_algebra(field, table);
}

/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, Delta x = 1 (x) x + x (x) g.
template <ExactField F>
LeftBialgebroid<F> sweedler(const F& field) {
  // basis index = a + 2b for g^a x^b
  auto product = [&](std::size_t i, std::size_t j) {
    const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d > 1) return zero_vector(field, 4);
    auto v = unit_vector(field, 4, (a + c) % 2 + 2 * (b + d));
    if (b * c == 1) v[(a + c) % 2 + 2 * (b + d)] = -field.one();
    return v;
  };
  auto alg = detail::algebra_from_table<F>(field, 4, product, 0);
  auto e = [&](std::size_t i) { return unit_vector(field, 4, i); };
  std::vector<Vector<F>> cols{
      tensor(e(0), e(0)),
      tensor(e(1), e(1)),
      tensor(e(0), e(2)) + tensor(e(2), e(1)),
      tensor(e(1), e(3)) + tensor(e(3), e(0)),
  };
  LinMap<F> counit(field, 1, 4);
  counit(0, 0) = field.one();
  counit(0, 1) = field.one();
  return LeftBialgebroid<F>::hopf_algebra(std::move(alg), LinMap<F>::from_columns(field, 16, cols), std::move(counit));
}

/// The one-dimensional Hopf algebra k.
template <ExactField F>
LeftBialgebroid<F> trivial_hopf(const F& field) {
  return LeftBialgebroid<F>::hopf_algebra(BasedAlgebra<F>::ground(field), LinMap<F>::identity(field, 1), LinMap<F>::identity(field, 1));
}

/// k[X]/(X^2 - X) with X grouplike: a bialgebra that is not Hopf.
template <ExactField F>
LeftBialgebroid<F> idempotent_bialgebra(const F& field) {
  auto alg = detail::algebra_from_table<F>(field, 2, [&](std::size_t i, std::size_t j) { return unit_vector(field, 2, i | j); }, 0);
  std::vector<Vector<F>> cols{tensor(unit_vector(field, 2, 0), unit_vector(field, 2, 0)), tensor(unit_vector(field, 2, 1), unit_vector(field, 2, 1))};
  LinMap<F> counit(field, 1, 2);
  counit(0, 0) = field.one();
  counit(0, 1) = field.one();
  return LeftBialgebroid<F>::hopf_algebra(std::move(alg), LinMap<F>::from_columns(field, 4, cols), std::move(counit));
}

/// kC_2 with Delta g replaced by g (x) 1.
template <ExactField F>
LeftBialgebroid<F> corrupted_c2(const F& field) {
  auto good = cyclic_group_algebra(field, 2);
  auto comult = good.comult();
  auto col = tensor(unit_vector(field, 2, 1), unit_vector(field, 2, 0));
  for (std::size_t i = 0; i < 4; ++i) comult(i, 1) = col[i];
  return LeftBialgebroid<F>::hopf_algebra(good.total(), comult, good.counit());
}

/// kC_2 with eps(1) = 0.
template <ExactField F>
LeftBialgebroid<F> counit_broken_c2(const F& field) {
  auto good = cyclic_group_algebra(field, 2);
  auto counit = good.counit();
  counit(0, 0) = field.zero();
  return LeftBialgebroid<F>::hopf_algebra(good.total(), good.comult(), counit);
}

/// The pair groupoid on two objects: H = M_2(k) with matrix units e_ij (index 2i+j),
/// A = k x k, s(e_i) = t(e_i) = e_ii, Delta e_ij = e_ij (x) e_ij, eps(e_ij) = e_i.
template <ExactField F>
LeftBialgebroid<F> pair_groupoid(const F& field) {
  auto h = detail::algebra_from_table<F>(
      field, 4,
      [&](std::size_t p, std::size_t q) {
        const std::size_t i = p / 2, j = p % 2, k = q / 2, l = q % 2;
        return j == k ? unit_vector(field, 4, 2 * i + l) : zero_vector(field, 4);
      },
      0);
  Vector<F> unit_h = unit_vector(field, 4, 0) + unit_vector(field, 4, 3);
  h = BasedAlgebra<F>(field, 4, h.structure(), unit_h);
  auto a = detail::algebra_from_table<F>(field, 2, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector(field, 2, i) : zero_vector(field, 2); }, 0);
  a = BasedAlgebra<F>(field, 2, a.structure(), Vector<F>{field.one(), field.one()});
  LinMap<F> st(field, 4, 2);
  st(0, 0) = field.one();
  st(3, 1) = field.one();
  std::vector<Vector<F>> cols;
  LinMap<F> counit(field, 2, 4);
  for (std::size_t p = 0; p < 4; ++p) {
    cols.push_back(tensor(unit_vector(field, 4, p), unit_vector(field, 4, p)));
    counit(p / 2, p) = field.one();
  }
  AeRing<F> ring(std::move(a), std::move(h), st, st);
  return LeftBialgebroid<F>(std::move(ring), LinMap<F>::from_columns(field, 16, cols), std::move(counit));
}

/// A^e for A = k x k: H = A (x) A^op with basis e_i (x) e_j (index 2i+j),
/// s(a) = a (x) 1, t(b) = 1 (x) b, Delta(a (x) b) = (a (x) 1) (x)_A (1 (x) b), eps(a (x) b) = ab.
template <ExactField F>
LeftBialgebroid<F> enveloping_split(const F& field) {
  auto h = detail::algebra_from_table<F>(
      field, 4, [&](std::size_t p, std::size_t q) { return p == q ? unit_vector(field, 4, p) : zero_vector(field, 4); }, 0);
  h = BasedAlgebra<F>(field, 4, h.structure(), Vector<F>(4, field.one()));
  auto a = detail::algebra_from_table<F>(field, 2, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector(field, 2, i) : zero_vector(field, 2); }, 0);
  a = BasedAlgebra<F>(field, 2, a.structure(), Vector<F>{field.one(), field.one()});
  LinMap<F> s(field, 4, 2), t(field, 4, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      s(2 * i + j, i) = field.one();
      t(2 * j + i, i) = field.one();
    }
  std::vector<Vector<F>> cols;
  LinMap<F> counit(field, 2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto c = zero_vector(field, 16);
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) c[(2 * i + k) * 4 + (2 * l + j)] = field.one();
      cols.push_back(std::move(c));
      if (i == j) counit(i, 2 * i + j) = field.one();
    }
  AeRing<F> ring(std::move(a), std::move(h), s, t);
  return LeftBialgebroid<F>(std::move(ring), LinMap<F>::from_columns(field, 16, cols), std::move(counit));
}

}  // namespace hopfgal::fixtures
