#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfgal/errors.hpp"
#include "hopfgal/exactla/field.hpp"

namespace hopfgal {

template <ExactField F>
using Vector = std::vector<typename F::Element>;

template <ExactField F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

template <ExactField F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  auto v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

template <ExactField F>
bool is_zero_vector(std::span<const typename F::Element> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class E>
bool all_zero(const std::vector<E>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class E>
std::vector<E> operator+(std::vector<E> a, const std::vector<E>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class E>
std::vector<E> operator-(std::vector<E> a, const std::vector<E>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class E>
std::vector<E> scaled(const E& c, std::vector<E> v) {
  for (auto& x : v) x *= c;
  return v;
}

/// Kronecker product of coordinate vectors; index i*|v| + j.
template <class E>
std::vector<E> tensor(const std::vector<E>& u, const std::vector<E>& v) {
  std::vector<E> out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) out.push_back(a * b);
  return out;
}

/// A linear map between coordinate spaces. Column j is the image of the j-th
/// domain basis vector, so the matrix is codomain_dim x domain_dim.
template <ExactField F>
class LinMap {
 public:
  using Element = typename F::Element;

  LinMap(F field, std::size_t codomain_dim, std::size_t domain_dim)
      : field_(std::move(field)), rows_(codomain_dim), cols_(domain_dim), data_(rows_ * cols_, field_.zero()) {}

  static LinMap identity(const F& field, std::size_t n) {
    LinMap m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static LinMap from_columns(const F& field, std::size_t codomain_dim, const std::vector<Vector<F>>& cols) {
    LinMap m(field, codomain_dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != codomain_dim) throw DimensionMismatch("column length does not match codomain dimension");
      for (std::size_t i = 0; i < codomain_dim; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static LinMap from_rows(const F& field, std::size_t domain_dim, const std::vector<Vector<F>>& rows) {
    LinMap m(field, rows.size(), domain_dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != domain_dim) throw DimensionMismatch("row length does not match domain dimension");
      for (std::size_t j = 0; j < domain_dim; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t domain_dim() const { return cols_; }
  std::size_t codomain_dim() const { return rows_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<F> column(std::size_t j) const {
    Vector<F> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Vector<F> row(std::size_t i) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<Vector<F>> columns() const {
    std::vector<Vector<F>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  std::vector<Vector<F>> rows() const {
    std::vector<Vector<F>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Vector<F> apply(const Vector<F>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("applying a map on dimension " + std::to_string(cols_) + " to a vector of length " + std::to_string(v.size()));
    Vector<F> out(rows_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const auto& a = (*this)(i, j);
        if (!a.is_zero()) out[i] += a * v[j];
      }
    }
    return out;
  }

  bool is_zero() const { return all_zero(data_); }

  LinMap transpose() const {
    LinMap t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Composition: (a * b)(v) = a(b(v)).
  friend LinMap operator*(const LinMap& a, const LinMap& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("composing " + a.shape() + " after " + b.shape());
    LinMap c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend LinMap operator+(LinMap a, const LinMap& b) {
    a.check_same_shape(b, "sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend LinMap operator-(LinMap a, const LinMap& b) {
    a.check_same_shape(b, "difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const LinMap& b, const char* what) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch(std::string(what) + " of " + shape() + " and " + b.shape());
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// (a (x) b)(u (x) v) = a(u) (x) b(v), with the tensor index convention of tensor().
template <ExactField F>
LinMap<F> kron(const LinMap<F>& a, const LinMap<F>& b) {
  LinMap<F> k(a.field(), a.codomain_dim() * b.codomain_dim(), a.domain_dim() * b.domain_dim());
  for (std::size_t i = 0; i < a.codomain_dim(); ++i)
    for (std::size_t j = 0; j < a.domain_dim(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.codomain_dim(); ++p)
        for (std::size_t q = 0; q < b.domain_dim(); ++q) {
          const auto& y = b(p, q);
          if (!y.is_zero()) k(i * b.codomain_dim() + p, j * b.domain_dim() + q) = x * y;
        }
    }
  return k;
}

/// Stacks maps sharing a domain on top of each other.
template <ExactField F>
LinMap<F> vstack(const F& field, std::size_t domain_dim, const std::vector<LinMap<F>>& maps) {
  std::size_t rows = 0;
  for (const auto& m : maps) {
    if (m.domain_dim() != domain_dim) throw DimensionMismatch("vstack of maps with different domains");
    rows += m.codomain_dim();
  }
  LinMap<F> out(field, rows, domain_dim);
  std::size_t offset = 0;
  for (const auto& m : maps) {
    for (std::size_t i = 0; i < m.codomain_dim(); ++i)
      for (std::size_t j = 0; j < domain_dim; ++j) out(offset + i, j) = m(i, j);
    offset += m.codomain_dim();
  }
  return out;
}

}  // namespace hopfgal
