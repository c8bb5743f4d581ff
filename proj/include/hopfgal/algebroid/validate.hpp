#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/algebroid/balanced_tensor.hpp"

namespace hopfgal {

/// One checked law. `witness` names the basis indices of a counterexample.
struct CheckResult {
  std::string name;
  std::string statement;
  bool passed = true;
  std::vector<std::size_t> witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name);
    return out;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline CheckResult check_from(std::string name, std::string statement, std::optional<std::vector<std::size_t>> witness) {
  CheckResult r{std::move(name), std::move(statement), !witness.has_value(), {}};
  if (witness) r.witness = std::move(*witness);
  return r;
}

/// Runs `bad(i, j, ...)` over all index tuples below the given bounds; returns the first hit.
template <class Pred>
std::optional<std::vector<std::size_t>> first_failure(const std::vector<std::size_t>& bounds, Pred&& bad) {
  std::vector<std::size_t> idx(bounds.size(), 0);
  for (auto b : bounds)
    if (b == 0) return std::nullopt;
  while (true) {
    if (bad(idx)) return idx;
    std::size_t k = idx.size();
    while (k > 0) {
      --k;
      if (++idx[k] < bounds[k]) break;
      idx[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (idx.empty()) return std::nullopt;
  }
}

}  // namespace detail

/// x (x) y -> s(eps(x)) y on the unbalanced square.
template <ExactField F>
LinMap<F> counit_left_leg(const LeftBialgebroid<F>& b) {
  const auto m = b.dim();
  std::vector<Vector<F>> cols;
  for (std::size_t x = 0; x < m; ++x) {
    auto se = b.ring().s(b.counit().column(x));
    for (std::size_t y = 0; y < m; ++y) cols.push_back(b.multiply(se, b.basis_vector(y)));
  }
  return LinMap<F>::from_columns(b.field(), m, cols);
}

/// x (x) y -> t(eps(y)) x on the unbalanced square.
template <ExactField F>
LinMap<F> counit_right_leg(const LeftBialgebroid<F>& b) {
  const auto m = b.dim();
  std::vector<Vector<F>> cols;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) cols.push_back(b.multiply(b.ring().t(b.counit().column(y)), b.basis_vector(x)));
  return LinMap<F>::from_columns(b.field(), m, cols);
}

/// Checks every structural law of a left bialgebroid on all basis tuples.
template <ExactField F>
ValidationReport validate_bialgebroid(const LeftBialgebroid<F>& b) {
  using detail::check_from;
  using detail::first_failure;
  ValidationReport rep;
  const auto& A = b.base();
  const auto& H = b.total();
  const auto& ring = b.ring();
  const auto m = b.dim(), n = b.base_dim();

  rep.checks.push_back(check_from("base_associative", "(a b) c = a (b c) in A", A.associativity_witness()));
  rep.checks.push_back(check_from("base_unital", "1_A a = a = a 1_A", A.unitality_witness()));
  rep.checks.push_back(check_from("total_associative", "(x y) z = x (y z) in H", H.associativity_witness()));
  rep.checks.push_back(check_from("total_unital", "1_H x = x = x 1_H", H.unitality_witness()));

  auto ea = [&](std::size_t i) { return A.basis_vector(i); };
  {
    auto w = first_failure({n, n}, [&](const auto& i) { return ring.s(A.basis_product(i[0], i[1])) != H.multiply(ring.s_of_basis(i[0]), ring.s_of_basis(i[1])); });
    if (ring.s(A.unit()) != H.unit()) w = std::vector<std::size_t>{};
    rep.checks.push_back(check_from("source_algebra_map", "s(1) = 1, s(ab) = s(a) s(b)", w));
  }
  {
    auto w = first_failure({n, n}, [&](const auto& i) { return ring.t(A.basis_product(i[0], i[1])) != H.multiply(ring.t_of_basis(i[1]), ring.t_of_basis(i[0])); });
    if (ring.t(A.unit()) != H.unit()) w = std::vector<std::size_t>{};
    rep.checks.push_back(check_from("target_antialgebra_map", "t(1) = 1, t(ab) = t(b) t(a)", w));
  }
  rep.checks.push_back(check_from("source_target_commute", "s(a) t(b) = t(b) s(a)", first_failure({n, n}, [&](const auto& i) {
    return H.multiply(ring.s_of_basis(i[0]), ring.t_of_basis(i[1])) != H.multiply(ring.t_of_basis(i[1]), ring.s_of_basis(i[0]));
  })));

  const auto square = tensor_over_base(b);
  std::optional<Subspace<F>> tak;
  try {
    tak = takeuchi_subspace(b, square);
  } catch (const IllDefined&) {
    rep.notes.push_back("the Takeuchi condition does not descend to H (x)_A H; s and t do not commute");
  }
  auto delta = [&](const Vector<F>& x) { return b.coproduct(x); };
  auto cls = [&](const Vector<F>& v) { return square.project(v); };

  rep.checks.push_back(check_from("comult_takeuchi", "Delta(x) lies in the Takeuchi subspace of H (x)_A H",
                                  first_failure({m}, [&](const auto& i) { return !tak || !tak->contains(cls(b.comult().column(i[0]))); })));
  rep.checks.push_back(check_from("comult_unital", "Delta(1) = 1 (x) 1", cls(delta(b.one())) != cls(tensor(b.one(), b.one())) ? std::optional(std::vector<std::size_t>{}) : std::nullopt));
  rep.checks.push_back(check_from("comult_multiplicative", "Delta(x y) = Delta(x) Delta(y)", first_failure({m, m}, [&](const auto& i) {
    auto lhs = delta(H.basis_product(i[0], i[1]));
    auto rhs = square_product(H, b.comult().column(i[0]), b.comult().column(i[1]), false);
    return cls(lhs) != cls(rhs);
  })));
  rep.checks.push_back(check_from("comult_bilinear", "Delta(s(a) t(c) x) = s(a) x_1 (x) t(c) x_2", first_failure({n, n, m}, [&](const auto& i) {
    auto sa = ring.s_of_basis(i[0]), tc = ring.t_of_basis(i[1]);
    auto lhs = delta(H.multiply(H.multiply(sa, tc), b.basis_vector(i[2])));
    auto rhs = kron(H.left_multiplication(sa), H.left_multiplication(tc)).apply(b.comult().column(i[2]));
    return cls(lhs) != cls(rhs);
  })));

  {
    const auto triple = triple_over_base(b);
    const auto id = LinMap<F>::identity(b.field(), m);
    const auto left = kron(b.comult(), id) * b.comult();
    const auto right = kron(id, b.comult()) * b.comult();
    rep.checks.push_back(check_from("coassociative", "(Delta (x) H) Delta = (H (x) Delta) Delta in H (x)_A H (x)_A H",
                                    first_failure({m}, [&](const auto& i) { return triple.project(left.column(i[0])) != triple.project(right.column(i[0])); })));
  }
  {
    const auto l = counit_left_leg(b) * b.comult();
    const auto r = counit_right_leg(b) * b.comult();
    rep.checks.push_back(check_from("counit", "s(eps(x_1)) x_2 = x = t(eps(x_2)) x_1", first_failure({m}, [&](const auto& i) {
      auto e = b.basis_vector(i[0]);
      return l.column(i[0]) != e || r.column(i[0]) != e;
    })));
  }
  rep.checks.push_back(check_from("counit_bilinear", "eps(s(a) t(c) x) = a eps(x) c", first_failure({n, n, m}, [&](const auto& i) {
    auto lhs = b.epsilon(H.multiply(H.multiply(ring.s_of_basis(i[0]), ring.t_of_basis(i[1])), b.basis_vector(i[2])));
    auto rhs = A.multiply(A.multiply(ea(i[0]), b.counit().column(i[2])), ea(i[1]));
    return lhs != rhs;
  })));
  rep.checks.push_back(check_from("counit_character", "eps(x s(eps(y))) = eps(x y) = eps(x t(eps(y)))", first_failure({m, m}, [&](const auto& i) {
    auto x = b.basis_vector(i[0]);
    auto ey = b.counit().column(i[1]);
    auto mid = b.epsilon(H.basis_product(i[0], i[1]));
    return b.epsilon(H.multiply(x, ring.s(ey))) != mid || b.epsilon(H.multiply(x, ring.t(ey))) != mid;
  })));
  rep.checks.push_back(check_from("counit_unital", "eps(1_H) = 1_A", b.epsilon(b.one()) != A.unit() ? std::optional(std::vector<std::size_t>{}) : std::nullopt));

  rep.notes.push_back("H (x)_A H is balanced by t(a) x (x) y = x (x) s(a) y; the A-bimodule structure on H is a.x.c = s(a) t(c) x");
  rep.notes.push_back("H (x)_{A^op} H is balanced by x t(a) (x) y = x (x) t(a) y");
  rep.notes.push_back("counit legs: (eps (x)_A H)(x (x) y) = s(eps(x)) y and (H (x)_A eps)(x (x) y) = t(eps(y)) x");
  return rep;
}

/// B^+ = B intersected with ker(eps).
template <ExactField F>
Subspace<F> bplus(const LeftBialgebroid<F>& b, const Subspace<F>& B) {
  if (B.ambient_dim() != b.dim()) throw DimensionMismatch("subspace of dimension " + std::to_string(B.ambient_dim()) + " in H of dimension " + std::to_string(b.dim()));
  return intersect(B, b.augmentation_ideal());
}

/// span{ e_i v : i basis of H, v in S }.
template <ExactField F>
Subspace<F> left_ideal_generated(const LeftBialgebroid<F>& b, const Subspace<F>& S) {
  Subspace<F> out(b.field(), b.dim());
  for (const auto& v : S.basis())
    for (std::size_t i = 0; i < b.dim(); ++i) out.insert(b.total().multiply(b.basis_vector(i), v));
  return out;
}

namespace detail {

template <ExactField F>
void check_ambient(const LeftBialgebroid<F>& b, const Subspace<F>& S) {
  if (S.ambient_dim() != b.dim()) throw DimensionMismatch("subspace of dimension " + std::to_string(S.ambient_dim()) + " in H of dimension " + std::to_string(b.dim()));
}

template <ExactField F>
bool stable_under(const Subspace<F>& S, const std::vector<LinMap<F>>& ops) {
  for (const auto& op : ops)
    for (const auto& v : S.basis())
      if (!S.contains(op.apply(v))) return false;
  return true;
}

/// Image of X (x) H + H (x) Y (either may be absent) in a balanced square.
template <ExactField F>
Subspace<F> image_in_square(const BalancedTensor<F>& square, std::size_t m, const Subspace<F>* left, const Subspace<F>* right) {
  const auto& field = square.quotient.field();
  Subspace<F> out(field, square.dim());
  if (left)
    for (const auto& v : left->basis())
      for (std::size_t j = 0; j < m; ++j) out.insert(square.project(tensor(v, unit_vector(field, m, j))));
  if (right)
    for (const auto& v : right->basis())
      for (std::size_t j = 0; j < m; ++j) out.insert(square.project(tensor(unit_vector(field, m, j), v)));
  return out;
}

}  // namespace detail

/// A-subbimodule for the left s- and t-actions, eps(N) = 0 and
/// Delta(N) inside the image of N (x)_A H + H (x)_A N.
template <ExactField F>
bool is_coideal(const LeftBialgebroid<F>& b, const Subspace<F>& N) {
  detail::check_ambient(b, N);
  if (!detail::stable_under(N, left_by_source(b)) || !detail::stable_under(N, left_by_target(b))) return false;
  for (const auto& v : N.basis())
    if (!all_zero(b.epsilon(v))) return false;
  const auto square = tensor_over_base(b);
  const auto target = detail::image_in_square(square, b.dim(), &N, &N);
  for (const auto& v : N.basis())
    if (!target.contains(square.project(b.coproduct(v)))) return false;
  return true;
}

template <ExactField F>
bool is_left_ideal(const LeftBialgebroid<F>& b, const Subspace<F>& I) {
  detail::check_ambient(b, I);
  for (const auto& v : I.basis())
    for (std::size_t i = 0; i < b.dim(); ++i)
      if (!I.contains(b.total().multiply(b.basis_vector(i), v))) return false;
  return true;
}

template <ExactField F>
bool is_left_ideal_coideal(const LeftBialgebroid<F>& b, const Subspace<F>& I) {
  return is_left_ideal(b, I) && is_coideal(b, I);
}

template <ExactField F>
bool is_subring(const LeftBialgebroid<F>& b, const Subspace<F>& B) {
  detail::check_ambient(b, B);
  if (!B.contains(b.one())) return false;
  for (const auto& u : B.basis())
    for (const auto& v : B.basis())
      if (!B.contains(b.multiply(u, v))) return false;
  return true;
}

/// A subring containing t(A) whose comultiplication corestricts to B (x)_A H.
template <ExactField F>
bool is_comodule_subring(const LeftBialgebroid<F>& b, const Subspace<F>& B) {
  if (!is_subring(b, B)) return false;
  for (std::size_t a = 0; a < b.base_dim(); ++a)
    if (!B.contains(b.ring().t_of_basis(a))) return false;
  const auto square = tensor_over_base(b);
  const auto target = detail::image_in_square<F>(square, b.dim(), &B, nullptr);
  for (const auto& v : B.basis())
    if (!target.contains(square.project(b.coproduct(v)))) return false;
  return true;
}

/// The right coaction B -> B (x)_A H solving (iota (x) H) delta = Delta iota,
/// as a map from B-coordinates into the unbalanced B (x) H (one solution).
template <ExactField F>
std::optional<LinMap<F>> corestricted_coaction(const LeftBialgebroid<F>& b, const Subspace<F>& B) {
  const auto square = tensor_over_base(b);
  const auto m = b.dim();
  const auto id = LinMap<F>::identity(b.field(), m);
  const auto embed = square.quotient.projection() * kron(B.inclusion(), id);
  std::vector<Vector<F>> cols;
  for (const auto& v : B.basis()) {
    auto sol = solve(embed, square.project(b.coproduct(v)));
    if (!sol) return std::nullopt;
    cols.push_back(std::move(*sol));
  }
  return LinMap<F>::from_columns(b.field(), B.dim() * m, cols);
}

/// Throws AxiomError naming the first failed law.
inline void require_valid(const ValidationReport& rep) {
  std::string msg;
  for (const auto& c : rep.checks)
    if (!c.passed) msg += (msg.empty() ? "" : "; ") + c.name + " (" + c.statement + ")";
  if (!msg.empty()) throw AxiomError("failed checks: " + msg);
}

}  // namespace hopfgal
