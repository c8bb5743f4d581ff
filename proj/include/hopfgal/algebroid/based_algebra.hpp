#pragma once

#include <optional>
#include <vector>

#include "hopfgal/exactla/subspace.hpp"

namespace hopfgal {

/// A finite-dimensional associative algebra given by structure constants:
/// e_i * e_j = sum_k coeff(i, j, k) e_k.
template <ExactField F>
class BasedAlgebra {
 public:
  using Element = typename F::Element;

  BasedAlgebra(F field, std::size_t dim, std::vector<Element> structure, Vector<F> unit)
      : field_(std::move(field)), dim_(dim), structure_(std::move(structure)), unit_(std::move(unit)) {
    if (structure_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure constants need dim^3 entries");
    if (unit_.size() != dim_) throw DimensionMismatch("unit has the wrong length");
  }

  /// The ground field as a one-dimensional algebra.
  static BasedAlgebra ground(const F& field) { return BasedAlgebra(field, 1, {field.one()}, {field.one()}); }

  /// Builds the algebra from structure constants, solving for the two-sided unit.
  static std::optional<BasedAlgebra> with_derived_unit(const F& field, std::size_t dim, std::vector<Element> structure) {
    BasedAlgebra probe(field, dim, structure, zero_vector(field, dim));
    auto u = probe.find_unit();
    if (!u) return std::nullopt;
    return BasedAlgebra(field, dim, std::move(structure), std::move(*u));
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector<F>& unit() const { return unit_; }
  const std::vector<Element>& structure() const { return structure_; }
  const Element& coeff(std::size_t i, std::size_t j, std::size_t k) const { return structure_[(i * dim_ + j) * dim_ + k]; }

  Vector<F> basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

  Vector<F> basis_product(std::size_t i, std::size_t j) const {
    return Vector<F>(structure_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                     structure_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
  }

  Vector<F> multiply(const Vector<F>& u, const Vector<F>& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("multiplying vectors of the wrong length");
    auto out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        auto c = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const auto& s = coeff(i, j, k);
          if (!s.is_zero()) out[k] += c * s;
        }
      }
    }
    return out;
  }

  /// v -> u v
  LinMap<F> left_multiplication(const Vector<F>& u) const {
    std::vector<Vector<F>> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(u, basis_vector(j)));
    return LinMap<F>::from_columns(field_, dim_, cols);
  }

  /// v -> v u
  LinMap<F> right_multiplication(const Vector<F>& u) const {
    std::vector<Vector<F>> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(basis_vector(j), u));
    return LinMap<F>::from_columns(field_, dim_, cols);
  }

  BasedAlgebra opposite() const {
    std::vector<Element> s(structure_.size(), field_.zero());
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) s[(i * dim_ + j) * dim_ + k] = coeff(j, i, k);
    return BasedAlgebra(field_, dim_, std::move(s), unit_);
  }

  /// First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
  std::optional<std::vector<std::size_t>> associativity_witness() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (multiply(basis_product(i, j), basis_vector(k)) != multiply(basis_vector(i), basis_product(j, k)))
            return std::vector<std::size_t>{i, j, k};
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> unitality_witness() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      auto e = basis_vector(i);
      if (multiply(unit_, e) != e || multiply(e, unit_) != e) return std::vector<std::size_t>{i};
    }
    return std::nullopt;
  }

  /// Solves u e_i = e_i = e_i u for u.
  std::optional<Vector<F>> find_unit() const {
    // unknowns u_k; equations indexed by (side, i, l)
    LinMap<F> system(field_, 2 * dim_ * dim_, dim_);
    Vector<F> rhs = zero_vector(field_, 2 * dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t l = 0; l < dim_; ++l) {
        std::size_t left_eq = i * dim_ + l, right_eq = dim_ * dim_ + i * dim_ + l;
        for (std::size_t k = 0; k < dim_; ++k) {
          system(left_eq, k) = coeff(k, i, l);
          system(right_eq, k) = coeff(i, k, l);
        }
        if (i == l) rhs[left_eq] = rhs[right_eq] = field_.one();
      }
    return solve(system, rhs);
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Element> structure_;
  Vector<F> unit_;
};

}  // namespace hopfgal
