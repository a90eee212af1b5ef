#include "glmn/matrix.hpp"

#include <stdexcept>

namespace glmn {

namespace detail {
const Field& placeholder_field() {
  static const Field f = Field::make(5);
  return f;
}
}  // namespace detail

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (e.code) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (Elem e : data_) n += e.code != 0;
  return n;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const Field& F = a.field();
  Matrix out(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem c = a(i, k);
      if (c.code == 0) continue;
      axpy(F, out.row(i), c, b.row(k));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().sub(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Matrix& a, Elem c) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(a(i, j), c);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix power(const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix x = a;
  while (e) {
    if (e & 1) result = result * x;
    e >>= 1;
    if (e) x = x * x;
  }
  return result;
}

Matrix commutator(const Matrix& a, const Matrix& b, bool anti) {
  return anti ? a * b + b * a : a * b - b * a;
}

Vec mul_vec(const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  const Field& F = a.field();
  Vec out(a.rows());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].code == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Elem x = a(i, j);
      if (x.code) out[i] = F.add(out[i], F.mul(x, v[j]));
    }
  }
  return out;
}

Vec add(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.begin(), a.end());
  axpy(F, out, F.one(), b);
  return out;
}

Vec scale(const Field& F, std::span<const Elem> a, Elem c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  for (Elem e : v)
    if (e.code) return false;
  return true;
}

void axpy(const Field& F, std::span<Elem> dst, Elem c, std::span<const Elem> src) {
  if (c.code == 0) return;
  if (F.is_one(c)) {
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i].code) dst[i] = F.add(dst[i], src[i]);
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i].code) dst[i] = F.add(dst[i], F.mul(c, src[i]));
}

Echelon row_reduce(Matrix m) {
  const Field& F = m.field();
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).code == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).code == 0) continue;
      axpy(F, m.row(i), F.neg(m(i, c)), m.row(r));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto e = row_reduce(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.form(i, n + j);
  return out;
}

Elem determinant(const Matrix& m_in) {
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = m_in;
  const Field& F = m.field();
  Elem det = F.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).code == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const Elem inv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).code == 0) continue;
      axpy(F, m.row(i), F.neg(F.mul(m(i, c), inv)), m.row(c));
    }
  }
  return det;
}

// ---- Subspace

Subspace::Subspace(Field field, std::size_t ambient) : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::span(const Field& field, std::size_t ambient, std::span<const Vec> vectors) {
  auto e = row_reduce(Matrix::from_rows(field, ambient, vectors));
  Matrix basis(field, e.rank, ambient);
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = e.form(i, j);
  return Subspace(std::move(basis), std::move(e.pivots), ambient);
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv), ambient);
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace ambient");
  Vec out(v.begin(), v.end());
  const Field& F = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = out[pivots_[i]];
    if (c.code) axpy(F, out, F.neg(c), basis_.row(i));
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  const Field& F = m.field();
  const auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = F.one();
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = F.neg(e.form(r, f));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(F, m.cols(), vecs);
}

Subspace joint_kernel(std::span<const Matrix> ms) {
  if (ms.empty()) throw std::invalid_argument("joint kernel of no matrices");
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix stacked(ms[0].field(), rows, ms[0].cols());
  std::size_t r = 0;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i, ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) stacked(r, j) = m(i, j);
  return kernel_basis(stacked);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  auto vecs = a.vectors();
  for (auto& v : b.vectors()) vecs.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), vecs);
}

Subspace annihilator(const Subspace& a) {
  if (a.dim() == 0) return Subspace::full(a.field(), a.ambient_dim());
  return kernel_basis(a.basis());
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  return annihilator(sum(annihilator(a), annihilator(b)));
}

// ---- EchelonBuilder

Vec EchelonBuilder::reduce(std::span<const Elem> v) const {
  Vec out(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = out[pivots_[i]];
    if (c.code) axpy(field_, out, field_.neg(c), rows_[i]);
  }
  return out;
}

bool EchelonBuilder::insert(std::span<const Elem> v) {
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < r.size() && r[piv].code == 0) ++piv;
  if (piv == r.size()) return false;
  const Elem inv = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(x, inv);
  for (auto& row : rows_) {
    const Elem c = row[piv];
    if (c.code) axpy(field_, row, field_.neg(c), r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  originals_.emplace_back(v.begin(), v.end());
  return true;
}

Subspace EchelonBuilder::subspace() const { return Subspace::span(field_, ambient_, rows_); }

}  // namespace glmn
