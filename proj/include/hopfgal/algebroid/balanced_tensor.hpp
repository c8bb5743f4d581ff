#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hopfgal/algebroid/bialgebroid.hpp"

namespace hopfgal {

/// Which relation family a tensor product is balanced by.
enum class Balancing {
  over_base,     ///< t(a) x (x) y = x (x) s(a) y
  over_base_op,  ///< x t(a) (x) y = x (x) t(a) y
  over_subring,  ///< x b (x) y = x (x) b y for b in a subring B
  custom,
};

inline const char* to_string(Balancing b) {
  switch (b) {
    case Balancing::over_base: return "over_base";
    case Balancing::over_base_op: return "over_base_op";
    case Balancing::over_subring: return "over_subring";
    case Balancing::custom: return "custom";
  }
  return "?";
}

/// The relation family at the seam between two neighbouring factors: for each
/// generator a, (left_action[a] on the left factor) - (right_action[a] on the right factor).
template <ExactField F>
struct TensorJunction {
  std::vector<LinMap<F>> left_action;
  std::vector<LinMap<F>> right_action;
};

/// A factor of a tensor product; when `submodule` is set the factor is the
/// quotient of the coordinate space by it.
template <ExactField F>
struct TensorFactor {
  std::size_t dim;
  std::optional<Subspace<F>> submodule;
};

/// An iterated tensor product realised as a quotient of the unbalanced
/// Kronecker space (index convention of tensor()).
template <ExactField F>
struct BalancedTensor {
  std::vector<std::size_t> factor_dims;
  Balancing balancing;
  std::optional<Subspace<F>> subring;
  QuotientSpace<F> quotient;

  std::size_t ambient_dim() const { return quotient.ambient_dim(); }
  std::size_t dim() const { return quotient.dim(); }
  const Subspace<F>& killed() const { return quotient.killed(); }
  Vector<F> project(Vector<F> v) const { return quotient.project(std::move(v)); }
  Vector<F> lift(const Vector<F>& q) const { return quotient.lift(q); }
};

namespace detail {

/// I (x) ... (x) op (x) ... (x) I with op at `position`; op may change that factor's dimension.
template <ExactField F>
LinMap<F> embed_at(const F& field, const std::vector<std::size_t>& dims, std::size_t position, const LinMap<F>& op) {
  std::size_t before = 1, after = 1;
  for (std::size_t i = 0; i < position; ++i) before *= dims[i];
  for (std::size_t i = position + 1; i < dims.size(); ++i) after *= dims[i];
  return kron(kron(LinMap<F>::identity(field, before), op), LinMap<F>::identity(field, after));
}

}  // namespace detail

/// A relation family between two (not necessarily neighbouring) factors:
/// (first_action[a] at `first`) - (second_action[a] at `second`) for each generator a.
template <ExactField F>
struct TensorRelation {
  std::size_t first;
  std::size_t second;
  std::vector<LinMap<F>> first_action;
  std::vector<LinMap<F>> second_action;
};

template <ExactField F>
BalancedTensor<F> make_related_tensor(const F& field, const std::vector<TensorFactor<F>>& factors,
                                      const std::vector<TensorRelation<F>>& relations, Balancing balancing,
                                      std::type_identity_t<std::optional<Subspace<F>>> subring = std::nullopt) {
  if (factors.empty()) throw InvalidArgument("inconsistent action spec: no factors");
  std::vector<std::size_t> dims;
  std::size_t ambient = 1;
  for (const auto& f : factors) {
    dims.push_back(f.dim);
    ambient *= f.dim;
    if (f.submodule && f.submodule->ambient_dim() != f.dim) throw InvalidArgument("inconsistent action spec: submodule in the wrong space");
  }

  Subspace<F> killed(field, ambient);
  auto add_columns = [&](const LinMap<F>& m) {
    for (std::size_t j = 0; j < m.domain_dim(); ++j) {
      auto c = m.column(j);
      if (!all_zero(c)) killed.insert(std::move(c));
    }
  };

  for (const auto& rel : relations) {
    if (rel.first >= dims.size() || rel.second >= dims.size() || rel.first == rel.second)
      throw InvalidArgument("inconsistent action spec: relation between invalid factor positions");
    if (rel.first_action.size() != rel.second_action.size()) throw InvalidArgument("inconsistent action spec: generator counts differ across a relation");
    for (std::size_t a = 0; a < rel.first_action.size(); ++a) {
      const auto& l = rel.first_action[a];
      const auto& r = rel.second_action[a];
      if (l.domain_dim() != dims[rel.first] || l.codomain_dim() != dims[rel.first] || r.domain_dim() != dims[rel.second] || r.codomain_dim() != dims[rel.second])
        throw InvalidArgument("inconsistent action spec: action of the wrong size between factors " + std::to_string(rel.first) + " and " + std::to_string(rel.second));
      add_columns(detail::embed_at(field, dims, rel.first, l) - detail::embed_at(field, dims, rel.second, r));
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k].submodule && factors[k].submodule->dim() > 0) add_columns(detail::embed_at(field, dims, k, factors[k].submodule->inclusion()));

  return BalancedTensor<F>{std::move(dims), balancing, std::move(subring), QuotientSpace<F>(std::move(killed))};
}

template <ExactField F>
BalancedTensor<F> make_balanced_tensor(const F& field, const std::vector<TensorFactor<F>>& factors,
                                       const std::vector<TensorJunction<F>>& junctions, Balancing balancing,
                                       std::type_identity_t<std::optional<Subspace<F>>> subring = std::nullopt) {
  if (factors.empty() || junctions.size() + 1 != factors.size()) throw InvalidArgument("inconsistent action spec: need one junction between each pair of factors");
  std::vector<TensorRelation<F>> relations;
  for (std::size_t k = 0; k < junctions.size(); ++k) relations.push_back({k, k + 1, junctions[k].left_action, junctions[k].right_action});
  return make_related_tensor(field, factors, relations, balancing, std::move(subring));
}

/// A module described by the linear action of each generator of the balancing algebra.
template <ExactField F>
struct ModuleSpec {
  std::size_t dim;
  std::vector<LinMap<F>> actions;
  std::optional<Subspace<F>> submodule = std::nullopt;
};

/// left (x)_R right for modules given by their action matrices.
template <ExactField F>
BalancedTensor<F> balanced_tensor(const F& field, const ModuleSpec<F>& left, const ModuleSpec<F>& right,
                                  Balancing balancing = Balancing::custom, std::type_identity_t<std::optional<Subspace<F>>> subring = std::nullopt) {
  return make_balanced_tensor(field, {{left.dim, left.submodule}, {right.dim, right.submodule}},
                              {{left.actions, right.actions}}, balancing, std::move(subring));
}

// Multiplication operators on H used by the standard balancings.

template <ExactField F>
std::vector<LinMap<F>> left_by_source(const LeftBialgebroid<F>& b) {
  std::vector<LinMap<F>> out;
  for (std::size_t a = 0; a < b.base_dim(); ++a) out.push_back(b.total().left_multiplication(b.ring().s_of_basis(a)));
  return out;
}

template <ExactField F>
std::vector<LinMap<F>> left_by_target(const LeftBialgebroid<F>& b) {
  std::vector<LinMap<F>> out;
  for (std::size_t a = 0; a < b.base_dim(); ++a) out.push_back(b.total().left_multiplication(b.ring().t_of_basis(a)));
  return out;
}

template <ExactField F>
std::vector<LinMap<F>> right_by_source(const LeftBialgebroid<F>& b) {
  std::vector<LinMap<F>> out;
  for (std::size_t a = 0; a < b.base_dim(); ++a) out.push_back(b.total().right_multiplication(b.ring().s_of_basis(a)));
  return out;
}

template <ExactField F>
std::vector<LinMap<F>> right_by_target(const LeftBialgebroid<F>& b) {
  std::vector<LinMap<F>> out;
  for (std::size_t a = 0; a < b.base_dim(); ++a) out.push_back(b.total().right_multiplication(b.ring().t_of_basis(a)));
  return out;
}

/// The restriction of an operator on H to a subspace it preserves, in the subspace's coordinates.
template <ExactField F>
LinMap<F> restrict_to(const Subspace<F>& sub, const LinMap<F>& op, const char* what = "operator") {
  std::vector<Vector<F>> cols;
  for (const auto& v : sub.basis()) {
    auto w = op.apply(v);
    if (!sub.contains(w)) throw InvalidSubring(std::string(what) + " does not preserve the subspace");
    cols.push_back(sub.coordinates(w));
  }
  return LinMap<F>::from_columns(sub.field(), sub.dim(), cols);
}

/// H (x)_A H, or (H/I) (x)_A H when `left_quotient` is given:
/// relations t(a) x (x) y - x (x) s(a) y.
template <ExactField F>
BalancedTensor<F> tensor_over_base(const LeftBialgebroid<F>& b, std::type_identity_t<std::optional<Subspace<F>>> left_quotient = std::nullopt) {
  return make_balanced_tensor(b.field(), {{b.dim(), std::move(left_quotient)}, {b.dim(), std::nullopt}},
                              {{left_by_target(b), left_by_source(b)}}, Balancing::over_base);
}

/// H (x)_{A^op} H: relations x t(a) (x) y - x (x) t(a) y.
template <ExactField F>
BalancedTensor<F> tensor_over_base_op(const LeftBialgebroid<F>& b) {
  return make_balanced_tensor(b.field(), {{b.dim(), std::nullopt}, {b.dim(), std::nullopt}},
                              {{right_by_target(b), left_by_target(b)}}, Balancing::over_base_op);
}

/// H (x)_B H for a subring B: relations x b (x) y - x (x) b y.
template <ExactField F>
BalancedTensor<F> tensor_over_subring(const LeftBialgebroid<F>& b, const Subspace<F>& subring) {
  if (subring.ambient_dim() != b.dim()) throw DimensionMismatch("subring lives in the wrong space");
  if (!subring.contains(b.one())) throw InvalidSubring("subring must contain 1");
  for (const auto& u : subring.basis())
    for (const auto& v : subring.basis())
      if (!subring.contains(b.multiply(u, v))) throw InvalidSubring("subspace is not closed under multiplication");
  std::vector<LinMap<F>> right, left;
  for (const auto& v : subring.basis()) {
    right.push_back(b.total().right_multiplication(v));
    left.push_back(b.total().left_multiplication(v));
  }
  return make_balanced_tensor(b.field(), {{b.dim(), std::nullopt}, {b.dim(), std::nullopt}}, {{right, left}},
                              Balancing::over_subring, subring);
}

/// H (x)_A M (x)_A H with M = H or H/I in the middle.
template <ExactField F>
BalancedTensor<F> triple_over_base(const LeftBialgebroid<F>& b, std::type_identity_t<std::optional<Subspace<F>>> middle_quotient = std::nullopt) {
  auto lt = left_by_target(b), ls = left_by_source(b);
  return make_balanced_tensor(b.field(), {{b.dim(), std::nullopt}, {b.dim(), std::move(middle_quotient)}, {b.dim(), std::nullopt}},
                              {{lt, ls}, {lt, ls}}, Balancing::over_base);
}

/// The Takeuchi-Sweedler part of a balanced square of H.
///  over_base:    classes with  sum x_i t(a) (x) y_i = sum x_i (x) y_i s(a)
///  over_base_op: classes with  sum t(a) x_i (x) y_i = sum x_i (x) y_i t(a)
/// Returned in the quotient coordinates of `t`.
template <ExactField F>
Subspace<F> takeuchi_subspace(const LeftBialgebroid<F>& b, const BalancedTensor<F>& t) {
  if (t.factor_dims.size() != 2 || t.factor_dims[0] != b.dim() || t.factor_dims[1] != b.dim())
    throw InvalidArgument("takeuchi_subspace needs a balanced square of H");
  std::vector<LinMap<F>> first, second;
  switch (t.balancing) {
    case Balancing::over_base: first = right_by_target(b); second = right_by_source(b); break;
    case Balancing::over_base_op: first = left_by_target(b); second = right_by_target(b); break;
    default: throw InvalidArgument(std::string("takeuchi_subspace is undefined for balancing ") + to_string(t.balancing));
  }
  const auto id = LinMap<F>::identity(b.field(), b.dim());
  std::vector<LinMap<F>> conditions;
  for (std::size_t a = 0; a < b.base_dim(); ++a)
    conditions.push_back(descend(t.quotient, kron(first[a], id) - kron(id, second[a]), t.quotient, "Takeuchi condition"));
  if (conditions.empty()) return Subspace<F>::full(b.field(), t.dim());
  return kernel(vstack(b.field(), t.dim(), conditions));
}

}  // namespace hopfgal
