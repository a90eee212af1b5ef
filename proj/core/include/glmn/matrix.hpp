#pragma once

// Dense matrices and subspaces over a Field.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glmn/field.hpp"

namespace glmn {

using Vec = std::vector<Elem>;

namespace detail {
/// F_5, shared by default-constructed containers.
const Field& placeholder_field();
}  // namespace detail

class Matrix {
 public:
  Matrix() : field_(detail::placeholder_field()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n);
  /// Rows of the result are the given vectors.
  static Matrix from_rows(const Field& field, std::size_t cols, std::span<const Vec> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  Vec column(std::size_t j) const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem c);
Matrix transpose(const Matrix& a);
Matrix power(const Matrix& a, std::uint64_t e);
/// Super commutator ab - sign * ba with sign = +1 or -1.
Matrix commutator(const Matrix& a, const Matrix& b, bool anti);

Vec mul_vec(const Matrix& a, std::span<const Elem> v);
Vec add(const Field& F, std::span<const Elem> a, std::span<const Elem> b);
Vec scale(const Field& F, std::span<const Elem> a, Elem c);
bool is_zero(std::span<const Elem> v);
/// Adds c*src into dst.
void axpy(const Field& F, std::span<Elem> dst, Elem c, std::span<const Elem> src);

struct Echelon {
  Matrix form;  // reduced row-echelon, same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Elem determinant(const Matrix& m);

/// Row space in canonical reduced echelon form.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);  // zero subspace

  static Subspace span(const Field& field, std::size_t ambient, std::span<const Vec> vectors);
  static Subspace full(const Field& field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> vectors() const;

  /// v minus its projection along pivots; zero iff v lies in the subspace.
  Vec reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed inside) in the echelon basis.
  Vec coordinates(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {v : Mv = 0}.
Subspace kernel_basis(const Matrix& m);
/// Kernel of the stacked matrices.
Subspace joint_kernel(std::span<const Matrix> ms);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Vectors pairing to zero with every basis vector under the dot product.
Subspace annihilator(const Subspace& a);

/// Incrementally grown echelon basis; rows kept fully reduced against each other.
class EchelonBuilder {
 public:
  EchelonBuilder(Field field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  /// Returns true when v enlarged the span.
  bool insert(std::span<const Elem> v);
  Vec reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const { return is_zero(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Field& field() const { return field_; }
  /// Inserted vectors in original form, in insertion order of the successful inserts.
  const std::vector<Vec>& originals() const { return originals_; }
  Subspace subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
  std::vector<Vec> originals_;
};

}  // namespace glmn
