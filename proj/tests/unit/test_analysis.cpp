#include <doctest.h>

#include "glmn/analysis.hpp"
#include "glmn/error.hpp"
#include "glmn/verma.hpp"
#include "oracles.hpp"

using namespace glmn;

namespace {

int idx(const SuperAlgebra& A, int i, int j) { return A.index(i - 1, j - 1); }

bool invariant(const ModuleRep& M, const Subspace& S) {
  for (const Vec& v : S.vectors())
    for (const Matrix& a : M.action)
      if (!S.contains(mul_vec(a, v))) return false;
  return true;
}

std::vector<int> negatives(const RootSystem& R) {
  std::vector<int> out;
  for (Root a : R.positive()) out.push_back(R.root_vector(a.negated()));
  return out;
}

}  // namespace

TEST_CASE("spin") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, {1, 4}));
  CHECK(spin(Z, Z.basis_vector(0)).dim() == 2);
  const auto S = spin(Z, Z.basis_vector(1));
  CHECK(S.dim() == 1);
  CHECK(S.odd_dim == 1);
  CHECK(S.even_dim == 0);
  try {
    spin(Z, Vec(2, F.zero()));
    FAIL("zero vector spun");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("spins are submodules") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, {0, 0, 0}));
  std::uint64_t state = 99;
  for (int t = 0; t < 20; ++t) {
    Vec v = oracle::random_vector_nonzero(F, Z.dim, state);
    // homogeneous part
    const auto [ev, od] = Z.split(v);
    const Vec& w = is_zero(ev) ? od : ev;
    const auto S = spin(Z, w);
    CHECK(S.space.contains(w));
    CHECK(invariant(Z, S.space));
    CHECK(S.even_dim + S.odd_dim == S.dim());
  }
}

TEST_CASE("simplicity in gl(1|1) follows l1 + l2") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) {
      const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, {a, b}));
      const auto v = is_simple(Z);
      CHECK(v.simple == ((a + b) % 5 != 0));
      CHECK_FALSE(v.probabilistic);
      if (!v.simple) {
        REQUIRE(v.witness_weight);
        CHECK(*v.witness_weight == make_weight(F, {a - 1, b + 1}));
        CHECK(v.witness_parity == 1);
      }
    }
}

TEST_CASE("simplicity agrees with the top product on every weight") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const VermaFactory fac(A, Character(A));
  for (const auto& w : weight_variety(A, Character(A)).weights) {
    const ModuleRep Z = fac.build(w);
    const bool nonzero = !F.is_zero(f_direct(Z));
    const auto v = is_simple(Z);
    CHECK(v.simple == nonzero);
    // in a simple module any homogeneous vector generates
    if (v.simple) {
      std::uint64_t state = w.values[0].code * 31 + w.values[1].code * 7 + w.values[2].code;
      for (int t = 0; t < 3; ++t) {
        const Vec r = oracle::random_vector_nonzero(F, Z.dim, state);
        const auto [ev, od] = Z.split(r);
        CHECK(spin(Z, is_zero(ev) ? od : ev).dim() == Z.dim);
      }
    }
  }
}

TEST_CASE("simple heads and composition series") {
  const Field F = Field::make(5);
  const SuperAlgebra A1 = SuperAlgebra::build(1, 1, F);
  {
    const ModuleRep Z = build_baby_verma(A1, Character(A1), make_weight(F, {1, 4}));
    const auto h = simple_head(Z);
    CHECK(h.head.dim == 1);
    CHECK(h.radical.dim() == 1);
    CHECK(is_simple(h.head).simple);
    CHECK(invariant(Z, h.radical.space));
  }
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, {0, 0, 0}));
  const auto cs = composition_series(Z);
  REQUIRE(cs.chain.size() == cs.factors.size() + 1);
  CHECK(cs.chain.front().dim() == Z.dim);
  CHECK(cs.chain.back().dim() == 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < cs.factors.size(); ++i) {
    CHECK(cs.chain[i].contains(cs.chain[i + 1]));
    CHECK(cs.chain[i].dim() - cs.chain[i + 1].dim() == cs.factors[i].dim);
    CHECK(invariant(Z, cs.chain[i]));
    total += cs.factors[i].dim;
  }
  CHECK(total == 20);
  CHECK(cs.factors.size() > 1);
  CHECK(cs.factors.front().dim == simple_head(Z).head.dim);
}

TEST_CASE("regular modules") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  const ReductionContext ctx(A, Character(A));
  std::vector<int> all(A.dim());
  for (int i = 0; i < A.dim(); ++i) all[i] = i;
  const ModuleRep L = regular_module(ctx, all, Side::Left);
  CHECK(L.dim == 100);
  CHECK(verify_module(L).ok());
  CHECK(trivial_submodules(L).dim() == 1);
  const ModuleRep Rt = regular_module(ctx, all, Side::Right);
  CHECK(trivial_submodules(Rt).dim() == 1);
  // left and right multiplication commute
  for (const Matrix& a : L.action)
    for (const Matrix& b : Rt.action) CHECK(a * b == b * a);
  CHECK_THROWS_AS(regular_module(ctx, {idx(A, 1, 2), idx(A, 2, 1)}, Side::Left), Error);
}

TEST_CASE("Frobenius forms") {
  const Field F = Field::make(5);
  {
    const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
    const ReductionContext ctx(A, Character(A));
    const auto g = frobenius_gram(ctx, {idx(A, 1, 2)}, 1000);
    REQUIRE(g.gram.rows() == 2);
    CHECK(g.nondegenerate);
    CHECK(g.gram(0, 0) == F.zero());
    CHECK(g.gram(0, 1) == F.one());
    CHECK(g.gram(1, 0) == F.one());
    CHECK(g.gram(1, 1) == F.zero());
  }
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const RootSystem R(A);
  const ReductionContext ctx(A, Character(A));
  const auto top = frobenius_gram(ctx, negatives(R), 1000);
  CHECK(top.gram.rows() == 20);
  CHECK(top.nondegenerate);
  CHECK(oracle::rank(top.gram) == 20);
  const auto unit = frobenius_gram(ctx, negatives(R), 1000, FrobeniusForm::UnitCoefficient);
  CHECK_FALSE(unit.nondegenerate);
  try {
    frobenius_gram(ctx, negatives(R), 10);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionBudgetExceeded);
  }
  // with chi nonzero on a negative root vector the top form stays nondegenerate
  Character chi(A);
  chi.set(1, 0, F.from_int(2));
  const ReductionContext c2(A, chi);
  CHECK(frobenius_gram(c2, negatives(R), 1000).nondegenerate);
}

TEST_CASE("twisting preserves the module axioms and simplicity") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const VermaFactory fac(A, Character(A));
  Matrix g = Matrix::identity(F, 3);
  g(0, 1) = F.one();
  g(1, 0) = F.from_int(2);  // det = 1 - 2 = -1
  g(2, 2) = F.from_int(2);
  for (const auto& w : weight_variety(A, Character(A)).weights) {
    const ModuleRep Z = fac.build(w);
    const ModuleRep T = twist_module(Z, g);
    CHECK(T.chi.is_zero());
    CHECK(verify_module(T).ok());
    CHECK(is_simple(T).simple == is_simple(Z).simple);
  }
  Matrix bad = Matrix::identity(F, 3);
  bad(0, 2) = F.one();
  CHECK_THROWS_AS(twist_module(fac.build(make_weight(F, {0, 0, 0})), bad), Error);
  CHECK_THROWS_AS(twist_module(fac.build(make_weight(F, {0, 0, 0})), Matrix(F, 3, 3)), Error);
}

TEST_CASE("maximal vectors need the Cartan to split") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  // E(1,1) acting by a matrix with no eigenvalue in F_5 on a 2-dim even space
  ModuleRep M(A, Character(A));
  M.dim = 2;
  M.parity = {0, 0};
  M.labels = {"a", "b"};
  Matrix h(F, 2, 2);
  h(0, 1) = F.one();
  h(1, 0) = F.from_int(2);  // x^2 - 2 irreducible mod 5
  M.gens = {idx(A, 1, 1)};
  M.action = {h};
  M.cartan = {idx(A, 1, 1)};
  try {
    maximal_vectors(M);
    FAIL("split assumed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EigenvaluesOutsideField);
  }
}

TEST_CASE("seeds") {
  std::uint64_t a = 5, b = 5;
  for (int i = 0; i < 10; ++i) CHECK(splitmix64(a) == splitmix64(b));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  CHECK(derive_seed(7, 7) == derive_seed(7, 7));
}
