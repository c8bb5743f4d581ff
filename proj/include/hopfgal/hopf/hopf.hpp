#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/algebroid/validate.hpp"

namespace hopfgal {

/// x (x)_{A^op} y -> sum x_1 (x)_A x_2 y, between the two balanced squares.
template <ExactField F>
LinMap<F> beta_map(const LeftBialgebroid<F>& b, const BalancedTensor<F>& over_op, const BalancedTensor<F>& over_base) {
  return descend(over_op.quotient, galois_ambient_map(b), over_base.quotient, "canonical map");
}

template <ExactField F>
LinMap<F> beta_map(const LeftBialgebroid<F>& b) {
  return beta_map(b, tensor_over_base_op(b), tensor_over_base(b));
}

template <ExactField F>
LinMap<F> invert_beta(const LinMap<F>& beta) {
  auto inv = inverse(beta);
  if (!inv)
    throw NotLeftHopf("canonical map " + beta.shape() + " of rank " + std::to_string(rank(beta)) + " is not invertible");
  return *inv;
}

template <ExactField F>
LinMap<F> invert_beta(const LeftBialgebroid<F>& b) {
  return invert_beta(beta_map(b));
}

/// A left Hopf algebroid with its canonical map inverted once.
template <ExactField F>
class HopfData {
 public:
  explicit HopfData(LeftBialgebroid<F> b)
      : bialgebroid_(std::move(b)),
        tensor_op_(tensor_over_base_op(bialgebroid_)),
        tensor_base_(tensor_over_base(bialgebroid_)),
        beta_(beta_map(bialgebroid_, tensor_op_, tensor_base_)),
        beta_inverse_(invert_beta(beta_)),
        distinguished_(takeuchi_subspace(bialgebroid_, tensor_op_)) {}

  const LeftBialgebroid<F>& bialgebroid() const { return bialgebroid_; }
  const F& field() const { return bialgebroid_.field(); }
  /// H (x)_{A^op} H
  const BalancedTensor<F>& tensor_op() const { return tensor_op_; }
  /// H (x)_A H
  const BalancedTensor<F>& tensor_base() const { return tensor_base_; }
  const LinMap<F>& beta() const { return beta_; }
  const LinMap<F>& beta_inverse() const { return beta_inverse_; }
  /// H x_{A^op} H inside H (x)_{A^op} H: t(a) x (x) y = x (x) y t(a).
  const Subspace<F>& distinguished() const { return distinguished_; }

 private:
  LeftBialgebroid<F> bialgebroid_;
  BalancedTensor<F> tensor_op_;
  BalancedTensor<F> tensor_base_;
  LinMap<F> beta_;
  LinMap<F> beta_inverse_;
  Subspace<F> distinguished_;
};

/// (x (x) y)(u (x) v) = xu (x) vy on classes of H (x)_{A^op} H.
template <ExactField F>
Vector<F> translation_product(const HopfData<F>& h, const Vector<F>& p, const Vector<F>& q) {
  const auto& t = h.tensor_op();
  return t.project(square_product(h.bialgebroid().total(), t.lift(p), t.lift(q), true));
}

/// gamma(x) = beta^{-1}(x (x) 1), as a class in H (x)_{A^op} H.
template <ExactField F>
Vector<F> translation_map(const HopfData<F>& h, const Vector<F>& x) {
  const auto& b = h.bialgebroid();
  auto g = h.beta_inverse().apply(h.tensor_base().project(tensor(x, b.one())));
  if (!h.distinguished().contains(g)) throw ContractViolation("translation map leaves the distinguished subspace");
  return g;
}

struct TranslationReport {
  bool inverse_identities = true;
  bool in_distinguished = true;
  bool unital = true;
  bool multiplicative = true;
  std::vector<std::size_t> witness;

  bool ok() const { return inverse_identities && in_distinguished && unital && multiplicative; }
};

/// beta beta^{-1} = id = beta^{-1} beta, gamma(1) = 1 (x) 1 and gamma(xy) = gamma(x) gamma(y) on basis pairs.
template <ExactField F>
TranslationReport check_translation_map(const HopfData<F>& h) {
  TranslationReport r;
  const auto& b = h.bialgebroid();
  const auto m = b.dim();
  const auto& f = h.field();
  r.inverse_identities = h.beta() * h.beta_inverse() == LinMap<F>::identity(f, h.tensor_base().dim()) &&
                         h.beta_inverse() * h.beta() == LinMap<F>::identity(f, h.tensor_op().dim());
  std::vector<Vector<F>> gamma;
  for (std::size_t x = 0; x < m; ++x) {
    auto g = h.beta_inverse().apply(h.tensor_base().project(tensor(b.basis_vector(x), b.one())));
    if (!h.distinguished().contains(g) && r.in_distinguished) {
      r.in_distinguished = false;
      r.witness = {x};
    }
    gamma.push_back(std::move(g));
  }
  auto one = h.beta_inverse().apply(h.tensor_base().project(tensor(b.one(), b.one())));
  r.unital = one == h.tensor_op().project(tensor(b.one(), b.one()));
  for (std::size_t x = 0; x < m && r.multiplicative; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      auto xy = b.total().basis_product(x, y);
      Vector<F> lhs = zero_vector(f, h.tensor_op().dim());
      for (std::size_t k = 0; k < m; ++k)
        if (!xy[k].is_zero()) lhs = lhs + scaled(xy[k], gamma[k]);
      if (lhs != translation_product(h, gamma[x], gamma[y])) {
        r.multiplicative = false;
        if (r.witness.empty()) r.witness = {x, y};
        break;
      }
    }
  return r;
}

/// p: H (x)_{A^op} H -> H (x)_B H, induced by the identity on representatives.
template <ExactField F>
LinMap<F> op_to_subring_projection(const HopfData<F>& h, const BalancedTensor<F>& over_subring) {
  const auto n = h.tensor_op().ambient_dim();
  return descend(h.tensor_op().quotient, LinMap<F>::identity(h.field(), n), over_subring.quotient, "projection onto H (x)_B H");
}

/// (p o beta^{-1})(H B^+ (x)_A H) = 0.
template <ExactField F>
bool check_bbeta_condition(const HopfData<F>& h, const Subspace<F>& B) {
  const auto& b = h.bialgebroid();
  const auto hbplus = left_ideal_generated(b, bplus(b, B));
  if (hbplus.dim() == 0) return true;
  const auto over_b = tensor_over_subring(b, B);
  const auto composite = op_to_subring_projection(h, over_b) * h.beta_inverse();
  for (const auto& v : hbplus.basis())
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!all_zero(composite.apply(h.tensor_base().project(tensor(v, b.basis_vector(j)))))) return false;
  return true;
}

/// Whether gamma restricted to B factors through B (x)_{A^op} H, i.e. a
/// gamma' with (iota (x) H) gamma' = gamma iota exists.
template <ExactField F>
bool gamma_prime_exists(const HopfData<F>& h, const Subspace<F>& B) {
  const auto& b = h.bialgebroid();
  const auto target = detail::image_in_square<F>(h.tensor_op(), b.dim(), &B, nullptr);
  for (const auto& v : B.basis())
    if (!target.contains(translation_map(h, v))) return false;
  return true;
}

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Injectivity of the inclusion B -> H after tensoring with H over A^op.
///  side: where H sits relative to B (left: H (x) B, right: B (x) H)
///  tensorand: which t-action of B is balanced against H
///    (left, left):   x t(a) (x) b ~ x (x) t(a) b
///    (left, right):  t(a) x (x) b ~ x (x) b t(a)
///    (right, right): b t(a) (x) x ~ b (x) t(a) x
///    (right, left):  t(a) b (x) x ~ b (x) x t(a)
template <ExactField F>
bool purity_check(const LeftBialgebroid<F>& b, const Subspace<F>& inclusion, Side side, Side tensorand) {
  detail::check_ambient(b, inclusion);
  const auto& f = b.field();
  const auto m = b.dim(), r = inclusion.dim();
  const auto lt = left_by_target(b), rt = right_by_target(b);
  auto restricted = [&](const std::vector<LinMap<F>>& ops) {
    std::vector<LinMap<F>> out;
    for (const auto& op : ops) out.push_back(restrict_to(inclusion, op, "target action"));
    return out;
  };
  const auto& on_h = tensorand == Side::left ? rt : lt;
  const auto& on_sub_full = tensorand == Side::left ? lt : rt;
  const auto on_sub = restricted(on_sub_full);
  const auto id = LinMap<F>::identity(f, m);
  if (side == Side::left) {
    auto dom = make_balanced_tensor(f, {{m, std::nullopt}, {r, std::nullopt}}, {{on_h, on_sub}}, Balancing::custom);
    auto cod = make_balanced_tensor(f, {{m, std::nullopt}, {m, std::nullopt}}, {{on_h, on_sub_full}}, Balancing::custom);
    auto map = descend(dom.quotient, kron(id, inclusion.inclusion()), cod.quotient, "tensored inclusion");
    return rank(map) == dom.dim();
  }
  auto dom = make_balanced_tensor(f, {{r, std::nullopt}, {m, std::nullopt}}, {{on_sub, on_h}}, Balancing::custom);
  auto cod = make_balanced_tensor(f, {{m, std::nullopt}, {m, std::nullopt}}, {{on_sub_full, on_h}}, Balancing::custom);
  auto map = descend(dom.quotient, kron(inclusion.inclusion(), id), cod.quotient, "tensored inclusion");
  return rank(map) == dom.dim();
}

}  // namespace hopfgal
