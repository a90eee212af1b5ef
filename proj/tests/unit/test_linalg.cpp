#include <doctest.h>

#include "glmn/matrix.hpp"
#include "oracles.hpp"

using namespace glmn;

TEST_CASE("row reduction of identity and zero") {
  const Field F = Field::make(5);
  const auto id = row_reduce(Matrix::identity(F, 6));
  CHECK(id.rank == 6);
  CHECK(id.form == Matrix::identity(F, 6));
  const auto z = row_reduce(Matrix(F, 4, 6));
  CHECK(z.rank == 0);
  CHECK(z.form.is_zero());
  CHECK(kernel_basis(Matrix::identity(F, 5)).dim() == 0);
  CHECK(kernel_basis(Matrix(F, 5, 5)).dim() == 5);
}

TEST_CASE("rank agrees with an independent elimination") {
  for (auto [p, k] : {std::pair{5u, 1u}, {5u, 2u}, {7u, 1u}}) {
    const Field F = Field::make(p, k);
    std::uint64_t state = 100 + p + k;
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = 1 + splitmix64(state) % 20, c = 1 + splitmix64(state) % 20;
      const Matrix m = oracle::random_matrix(F, r, c, state, t % 3 == 0 ? 0 : 3);
      CHECK(rank(m) == oracle::rank(m));
    }
    const Matrix sq = oracle::random_matrix(F, 20, 20, state);
    CHECK(rank(sq) == oracle::rank(sq));
  }
}

TEST_CASE("low rank products") {
  const Field F = Field::make(5);
  std::uint64_t state = 8;
  for (std::size_t r = 0; r <= 6; ++r) {
    const Matrix a = oracle::random_matrix(F, 12, r, state), b = oracle::random_matrix(F, r, 15, state);
    const Matrix m = a * b;
    CHECK(rank(m) == oracle::rank(m));
    CHECK(rank(m) <= r);
  }
}

TEST_CASE("kernel residual, rank-nullity and idempotence") {
  const Field F = Field::make(5, 2);
  std::uint64_t state = 21;
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + splitmix64(state) % 12, c = 1 + splitmix64(state) % 12;
    const Matrix m = oracle::random_matrix(F, r, c, state, 2);
    const Subspace ker = kernel_basis(m);
    CHECK(rank(m) + ker.dim() == c);
    for (const auto& v : ker.vectors()) CHECK(is_zero(mul_vec(m, v)));
    const auto e = row_reduce(m);
    CHECK(row_reduce(e.form).form == e.form);
  }
}

TEST_CASE("inverse and determinant") {
  const Field F = Field::make(7);
  std::uint64_t state = 5;
  for (int t = 0; t < 30; ++t) {
    const Matrix m = oracle::random_matrix(F, 6, 6, state);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (oracle::rank(m) == 6));
    CHECK((determinant(m).code != 0) == (oracle::rank(m) == 6));
    if (inv) CHECK(m * *inv == Matrix::identity(F, 6));
  }
}

TEST_CASE("subspace lattice") {
  const Field F = Field::make(5);
  std::uint64_t state = 13;
  for (int t = 0; t < 30; ++t) {
    const Matrix a = oracle::random_matrix(F, 1 + splitmix64(state) % 6, 9, state, 2);
    const Matrix b = oracle::random_matrix(F, 1 + splitmix64(state) % 6, 9, state, 2);
    std::vector<Vec> ra, rb;
    for (std::size_t i = 0; i < a.rows(); ++i) ra.push_back(a.row_vec(i));
    for (std::size_t i = 0; i < b.rows(); ++i) rb.push_back(b.row_vec(i));
    const Subspace U = Subspace::span(F, 9, ra), W = Subspace::span(F, 9, rb);
    const Subspace S = sum(U, W), I = intersection(U, W);
    CHECK(S.dim() + I.dim() == U.dim() + W.dim());
    CHECK(S.contains(U));
    CHECK(S.contains(W));
    CHECK(U.contains(I));
    CHECK(W.contains(I));
    for (const auto& v : U.vectors()) {
      const Vec coords = U.coordinates(v);
      Vec back(9);
      for (std::size_t i = 0; i < U.dim(); ++i) axpy(F, back, coords[i], U.vector(i));
      CHECK(back == v);
    }
    // canonical form: pivots increase
    for (std::size_t i = 1; i < U.dim(); ++i) CHECK(U.pivots()[i - 1] < U.pivots()[i]);
    const Subspace ann = annihilator(U);
    CHECK(ann.dim() + U.dim() == 9);
  }
}

TEST_CASE("echelon builder tracks the span") {
  const Field F = Field::make(5);
  std::uint64_t state = 17;
  EchelonBuilder B(F, 8);
  std::vector<Vec> inserted;
  for (int t = 0; t < 12; ++t) {
    Vec v(8);
    for (auto& x : v) x = (splitmix64(state) % 3) ? F.zero() : oracle::random_elem(F, state);
    const std::size_t before = inserted.empty() ? 0 : Subspace::span(F, 8, inserted).dim();
    const bool grew = B.insert(v);
    inserted.push_back(v);
    CHECK(grew == (Subspace::span(F, 8, inserted).dim() == before + 1));
    if (grew) CHECK(B.originals().back() == v);
    CHECK(B.subspace() == Subspace::span(F, 8, inserted));
  }
}
