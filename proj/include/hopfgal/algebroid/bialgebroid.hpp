#pragma once

#include "hopfgal/algebroid/based_algebra.hpp"

namespace hopfgal {

/// An algebra H together with commuting algebra maps s: A -> H and t: A^op -> H.
/// The bimodule notations for H (left/right actions through s or t) are not
/// separate types: each balanced tensor names the multiplications it uses.
template <ExactField F>
class AeRing {
 public:
  AeRing(BasedAlgebra<F> base, BasedAlgebra<F> total, LinMap<F> source, LinMap<F> target)
      : base_(std::move(base)), total_(std::move(total)), source_(std::move(source)), target_(std::move(target)) {
    const auto m = total_.dim(), n = base_.dim();
    if (source_.codomain_dim() != m || source_.domain_dim() != n) throw DimensionMismatch("source must be dim(H) x dim(A)");
    if (target_.codomain_dim() != m || target_.domain_dim() != n) throw DimensionMismatch("target must be dim(H) x dim(A)");
  }

  const F& field() const { return total_.field(); }
  const BasedAlgebra<F>& base() const { return base_; }
  const BasedAlgebra<F>& total() const { return total_; }
  const LinMap<F>& source() const { return source_; }
  const LinMap<F>& target() const { return target_; }

  Vector<F> s(const Vector<F>& a) const { return source_.apply(a); }
  Vector<F> t(const Vector<F>& a) const { return target_.apply(a); }
  Vector<F> s_of_basis(std::size_t a) const { return source_.column(a); }
  Vector<F> t_of_basis(std::size_t a) const { return target_.column(a); }

 private:
  BasedAlgebra<F> base_;
  BasedAlgebra<F> total_;
  LinMap<F> source_;
  LinMap<F> target_;
};

/// A left bialgebroid over A: an A^e-ring with comultiplication into H (x) H
/// (stored as representatives in the unbalanced square, column x = Delta(e_x))
/// and counit H -> A.
template <ExactField F>
class LeftBialgebroid {
 public:
  LeftBialgebroid(AeRing<F> ring, LinMap<F> comult, LinMap<F> counit)
      : ring_(std::move(ring)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const auto m = dim(), n = base_dim();
    if (comult_.codomain_dim() != m * m || comult_.domain_dim() != m) throw DimensionMismatch("comult must be dim(H)^2 x dim(H)");
    if (counit_.codomain_dim() != n || counit_.domain_dim() != m) throw DimensionMismatch("counit must be dim(A) x dim(H)");
  }

  /// A bialgebra over the ground field seen as a bialgebroid over A = k, s = t = unit.
  static LeftBialgebroid hopf_algebra(BasedAlgebra<F> algebra, LinMap<F> comult, LinMap<F> counit) {
    const auto& field = algebra.field();
    auto unit_map = LinMap<F>::from_columns(field, algebra.dim(), {algebra.unit()});
    AeRing<F> ring(BasedAlgebra<F>::ground(field), std::move(algebra), unit_map, unit_map);
    return LeftBialgebroid(std::move(ring), std::move(comult), std::move(counit));
  }

  const F& field() const { return ring_.field(); }
  const AeRing<F>& ring() const { return ring_; }
  const BasedAlgebra<F>& base() const { return ring_.base(); }
  const BasedAlgebra<F>& total() const { return ring_.total(); }
  const LinMap<F>& comult() const { return comult_; }
  const LinMap<F>& counit() const { return counit_; }
  std::size_t dim() const { return ring_.total().dim(); }
  std::size_t base_dim() const { return ring_.base().dim(); }
  bool over_ground_field() const { return base_dim() == 1; }

  Vector<F> one() const { return total().unit(); }
  Vector<F> basis_vector(std::size_t i) const { return total().basis_vector(i); }
  Vector<F> multiply(const Vector<F>& x, const Vector<F>& y) const { return total().multiply(x, y); }
  Vector<F> coproduct(const Vector<F>& x) const { return comult_.apply(x); }
  Vector<F> epsilon(const Vector<F>& x) const { return counit_.apply(x); }

  /// H^+ = ker(counit).
  Subspace<F> augmentation_ideal() const { return kernel(counit_); }

  /// H as a Subspace of itself.
  Subspace<F> whole() const { return Subspace<F>::full(field(), dim()); }

 private:
  AeRing<F> ring_;
  LinMap<F> comult_;
  LinMap<F> counit_;
};

/// Products on the unbalanced square H (x) H:
///   componentwise    (x (x) y)(u (x) v) = xu (x) yv
///   twisted          (x (x) y)(u (x) v) = xu (x) vy
template <ExactField F>
Vector<F> square_product(const BasedAlgebra<F>& h, const Vector<F>& p, const Vector<F>& q, bool twisted) {
  const auto m = h.dim();
  if (p.size() != m * m || q.size() != m * m) throw DimensionMismatch("square_product on vectors outside H (x) H");
  auto out = zero_vector(h.field(), m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& a = p[i * m + j];
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const auto& b = q[k * m + l];
          if (b.is_zero()) continue;
          auto c = a * b;
          auto left = h.basis_product(i, k);
          auto right = twisted ? h.basis_product(l, j) : h.basis_product(j, l);
          for (std::size_t x = 0; x < m; ++x) {
            if (left[x].is_zero()) continue;
            for (std::size_t y = 0; y < m; ++y)
              if (!right[y].is_zero()) out[x * m + y] += c * left[x] * right[y];
          }
        }
    }
  return out;
}

/// The map H (x) H -> H (x) H, x (x) y -> Delta(x) (1 (x) y), on representatives.
template <ExactField F>
LinMap<F> galois_ambient_map(const LeftBialgebroid<F>& b) {
  const auto m = b.dim();
  std::vector<Vector<F>> cols;
  cols.reserve(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    auto dx = b.comult().column(x);
    for (std::size_t y = 0; y < m; ++y) cols.push_back(square_product(b.total(), dx, tensor(b.one(), b.basis_vector(y)), false));
  }
  return LinMap<F>::from_columns(b.field(), m * m, cols);
}

}  // namespace hopfgal
