#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hopfgal/exactla/linmap.hpp"

namespace hopfgal {

namespace detail {

/// Gauss-Jordan elimination in place. On return `rows` holds the nonzero rows
/// of the reduced row echelon form (leading ones, pivot columns cleared) and
/// the result lists the pivot column of each row.
template <ExactField F>
std::vector<std::size_t> row_reduce(std::vector<Vector<F>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    auto inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      auto factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form of the matrix of `m`, same shape, zero rows last.
template <ExactField F>
LinMap<F> rref(const LinMap<F>& m) {
  auto rows = m.rows();
  detail::row_reduce<F>(rows, m.domain_dim());
  LinMap<F> out(m.field(), m.codomain_dim(), m.domain_dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.domain_dim(); ++j) out(i, j) = rows[i][j];
  return out;
}

template <ExactField F>
std::size_t rank(const LinMap<F>& m) {
  auto rows = m.rows();
  return detail::row_reduce<F>(rows, m.domain_dim()).size();
}

/// A subspace of F^n stored canonically: its basis is the list of nonzero rows
/// of a reduced row echelon form, so equal subspaces compare equal member-wise.
template <ExactField F>
class Subspace {
 public:
  using Element = typename F::Element;

  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  static Subspace zero(const F& field, std::size_t ambient_dim) { return Subspace(field, ambient_dim); }

  static Subspace full(const F& field, std::size_t ambient_dim) {
    Subspace s(field, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      s.basis_.push_back(unit_vector(field, ambient_dim, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  static Subspace span(const F& field, std::size_t ambient_dim, const std::vector<Vector<F>>& vectors) {
    Subspace s(field, ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds a vector to the span, keeping the basis reduced. Returns false if it was already inside.
  bool insert(Vector<F> v) {
    if (v.size() != ambient_) throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(ambient_));
    reduce(v);
    auto lead = std::find_if(v.begin(), v.end(), [](const Element& x) { return !x.is_zero(); });
    if (lead == v.end()) return false;
    std::size_t c = static_cast<std::size_t>(lead - v.begin());
    auto inv = v[c].inverse();
    for (std::size_t j = c; j < ambient_; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
    for (auto& row : basis_) {
      if (row[c].is_zero()) continue;
      auto factor = row[c];
      for (std::size_t j = c; j < ambient_; ++j)
        if (!v[j].is_zero()) row[j] -= factor * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
  }

  /// Subtracts the basis components at pivot columns; the remainder is zero iff v is inside.
  void reduce(Vector<F>& v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const auto c = pivots_[r];
      if (v[c].is_zero()) continue;
      auto factor = v[c];
      for (std::size_t j = c; j < ambient_; ++j)
        if (!basis_[r][j].is_zero()) v[j] -= factor * basis_[r][j];
    }
  }

  bool contains(Vector<F> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("membership test with a vector of the wrong length");
    reduce(v);
    return all_zero(v);
  }

  bool is_subspace_of(const Subspace& other) const {
    check_ambient(other);
    for (const auto& b : basis_)
      if (!other.contains(b)) return false;
    return true;
  }

  /// Coordinates of a member in the stored basis; these are its entries at the pivot columns.
  Vector<F> coordinates(const Vector<F>& v) const {
    if (!contains(v)) throw InvalidArgument("coordinates requested for a vector outside the subspace");
    Vector<F> c;
    c.reserve(dim());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// The inclusion map F^dim -> F^ambient sending the i-th coordinate to the i-th basis row.
  LinMap<F> inclusion() const { return LinMap<F>::from_columns(field_, ambient_, basis_); }

  /// Vectors orthogonal to every member under the coordinate pairing.
  Subspace annihilator() const;

  friend Subspace operator+(Subspace a, const Subspace& b) {
    a.check_ambient(b);
    for (const auto& v : b.basis_) a.insert(v);
    return a;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  /// Printable canonical form, also used as a sort key for reports.
  std::string key() const {
    std::string s = "[";
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (r) s += ",";
      s += "[";
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (j) s += ",";
        s += field_.format(basis_[r][j]);
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("subspaces of ambient dimensions " + std::to_string(ambient_) + " and " + std::to_string(other.ambient_));
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical ordering of subspaces: by dimension, then by the printed basis.
template <ExactField F>
bool canonical_less(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.key() < b.key();
}

/// {v : m(v) = 0}. Rank-nullity holds exactly.
template <ExactField F>
Subspace<F> kernel(const LinMap<F>& m) {
  const auto n = m.domain_dim();
  auto rows = m.rows();
  auto pivots = detail::row_reduce<F>(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<F>> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    auto v = unit_vector(m.field(), n, f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(m.field(), n, gens);
}

template <ExactField F>
Subspace<F> image(const LinMap<F>& m) {
  return Subspace<F>::span(m.field(), m.codomain_dim(), m.columns());
}

template <ExactField F>
Subspace<F> Subspace<F>::annihilator() const {
  return kernel(LinMap<F>::from_rows(field_, ambient_, basis_));
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  return (a.annihilator() + b.annihilator()).annihilator();
}

/// Image of a subspace under a map.
template <ExactField F>
Subspace<F> image_of(const LinMap<F>& m, const Subspace<F>& s) {
  if (m.domain_dim() != s.ambient_dim()) throw DimensionMismatch("image of a subspace under a map with a different domain");
  Subspace<F> out(m.field(), m.codomain_dim());
  for (const auto& b : s.basis()) out.insert(m.apply(b));
  return out;
}

/// Some x with m(x) = b, if one exists.
template <ExactField F>
std::optional<Vector<F>> solve(const LinMap<F>& m, const Vector<F>& b) {
  if (b.size() != m.codomain_dim()) throw DimensionMismatch("right-hand side length does not match codomain");
  const auto n = m.domain_dim();
  std::vector<Vector<F>> rows;
  rows.reserve(m.codomain_dim());
  for (std::size_t i = 0; i < m.codomain_dim(); ++i) {
    auto r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto pivots = detail::row_reduce<F>(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  auto x = zero_vector(m.field(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][n];
  return x;
}

/// Exact two-sided inverse of a square map, or nothing when singular.
template <ExactField F>
std::optional<LinMap<F>> inverse(const LinMap<F>& m) {
  if (m.domain_dim() != m.codomain_dim()) return std::nullopt;
  const auto n = m.domain_dim();
  std::vector<Vector<F>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = m.row(i);
    auto e = unit_vector(m.field(), n, i);
    r.insert(r.end(), e.begin(), e.end());
    rows.push_back(std::move(r));
  }
  auto pivots = detail::row_reduce<F>(rows, 2 * n);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  LinMap<F> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  return inv;
}

/// V / killed with a chosen complement. The section sends the i-th quotient
/// basis vector to the standard basis vector at the i-th non-pivot column of
/// `killed`, so projection * section = identity and ker(projection) = killed.
template <ExactField F>
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace<F> killed)
      : killed_(std::move(killed)),
        projection_(killed_.field(), 0, 0),
        section_(killed_.field(), 0, 0) {
    const auto n = killed_.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : killed_.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) free_.push_back(j);

    const auto& field = killed_.field();
    projection_ = LinMap<F>(field, free_.size(), n);
    section_ = LinMap<F>(field, n, free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) {
      projection_(k, free_[k]) = field.one();
      section_(free_[k], k) = field.one();
    }
    for (std::size_t r = 0; r < killed_.dim(); ++r) {
      const auto& row = killed_.basis()[r];
      for (std::size_t k = 0; k < free_.size(); ++k)
        if (!row[free_[k]].is_zero()) projection_(k, killed_.pivots()[r]) = -row[free_[k]];
    }
  }

  const F& field() const { return killed_.field(); }
  std::size_t ambient_dim() const { return killed_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const Subspace<F>& killed() const { return killed_; }
  const LinMap<F>& projection() const { return projection_; }
  const LinMap<F>& section() const { return section_; }

  Vector<F> project(Vector<F> v) const {
    killed_.reduce(v);
    Vector<F> out;
    out.reserve(free_.size());
    for (auto f : free_) out.push_back(std::move(v[f]));
    return out;
  }

  Vector<F> lift(const Vector<F>& q) const { return section_.apply(q); }

 private:
  Subspace<F> killed_;
  std::vector<std::size_t> free_;
  LinMap<F> projection_;
  LinMap<F> section_;
};

template <ExactField F>
Subspace<F> equalizer(const LinMap<F>& f, const LinMap<F>& g) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw DimensionMismatch("equalizer of " + f.shape() + " and " + g.shape());
  return kernel(f - g);
}

template <ExactField F>
QuotientSpace<F> coequalizer(const LinMap<F>& f, const LinMap<F>& g) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw DimensionMismatch("coequalizer of " + f.shape() + " and " + g.shape());
  return QuotientSpace<F>(image(f - g));
}

/// The map induced on the quotient by `m`, which must vanish on q.killed().
template <ExactField F>
LinMap<F> quotient_map_compose(const QuotientSpace<F>& q, const LinMap<F>& m) {
  if (m.domain_dim() != q.ambient_dim()) throw DimensionMismatch("map domain does not match quotient ambient");
  for (const auto& k : q.killed().basis())
    if (!all_zero(m.apply(k))) throw IllDefined("map does not vanish on the killed subspace");
  return m * q.section();
}

/// Induced map between quotients: `ambient_map` goes between the ambients of
/// `from` and `to` and must send from.killed() into to.killed().
template <ExactField F>
LinMap<F> descend(const QuotientSpace<F>& from, const LinMap<F>& ambient_map, const QuotientSpace<F>& to,
                  const std::string& what = "map") {
  if (ambient_map.domain_dim() != from.ambient_dim() || ambient_map.codomain_dim() != to.ambient_dim())
    throw DimensionMismatch(what + ": ambient shape " + ambient_map.shape() + " does not fit the quotients");
  for (const auto& k : from.killed().basis())
    if (!to.killed().contains(ambient_map.apply(k))) throw IllDefined(what + " does not respect the balancing relations");
  return to.projection() * ambient_map * from.section();
}

}  // namespace hopfgal
