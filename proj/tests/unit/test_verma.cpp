#include <doctest.h>

#include "glmn/analysis.hpp"
#include "glmn/error.hpp"
#include "glmn/io.hpp"
#include "glmn/verma.hpp"
#include "oracles.hpp"

using namespace glmn;

namespace {
int idx(const SuperAlgebra& A, int i, int j) { return A.index(i - 1, j - 1); }
}  // namespace

TEST_CASE("baby Verma dimensions, defining relations and module axioms") {
  const Field F = Field::make(5);
  for (auto [m, n, dim] : {std::tuple{1, 1, 2u}, {2, 1, 20u}}) {
    const SuperAlgebra A = SuperAlgebra::build(m, n, F);
    const RootSystem R(A);
    const VermaFactory fac(A, Character(A));
    CHECK(fac.dim() == dim);
    const auto X = weight_variety(A, Character(A));
    for (std::size_t w = 0; w < X.weights.size(); w += 7) {
      const ModuleRep Z = fac.build(X.weights[w]);
      REQUIRE(Z.dim == dim);
      const Vec v = *Z.highest_vector;
      CHECK(Z.parity[0] == 0);
      for (int k = 0; k < A.size(); ++k)
        CHECK(mul_vec(Z.act(A.index(k, k)), v) == scale(F, v, X.weights[w].values[k]));
      for (Root a : R.positive()) CHECK(is_zero(mul_vec(Z.act(R.root_vector(a)), v)));
      const auto ck = verify_module(Z);
      CHECK(ck.ok());
      CHECK(ck.bracket_pairs == static_cast<std::size_t>(A.dim() * A.dim()));
    }
  }
}

TEST_CASE("verma errors") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  Character chi(A);
  chi.set(0, 1, F.one());
  try {
    VermaFactory fac(A, chi);
    FAIL("chi(N+) != 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChiNotBorelCompatible);
  }
  Character c2(A);
  c2.set(0, 0, F.one());
  const auto X = weight_variety(A, c2);
  const VermaFactory fac(X.algebra, X.chi);
  try {
    fac.build(Weight{Vec(3, X.algebra.field().zero())});
    FAIL("weight outside X accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaNotInX);
  }
}

TEST_CASE("f_direct in gl(1|1) is l1 + l2") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  const RootSystem R(A);
  const VermaFactory fac(A, Character(A));
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) {
      const Weight w = make_weight(F, {a, b});
      CHECK(f_direct(fac.build(w)) == F.from_int(a + b));
      CHECK(f_formula(R, w).f_formula == F.from_int(a + b));
    }
  CHECK(f_direct(fac.build(make_weight(F, {2, 3}))) == F.zero());
  CHECK(f_direct(fac.build(make_weight(F, {1, 3}))) == F.from_int(4));
}

TEST_CASE("closed form in gl(2|1)") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const RootSystem R(A);
  const VermaFactory fac(A, Character(A));
  CHECK(f_direct(fac.build(make_weight(F, {0, 0, 0}))) == F.zero());
  for (const auto& w : weight_variety(A, Character(A)).weights) {
    const Elem l1 = w.values[0], l2 = w.values[1], l3 = w.values[2];
    const Elem even = F.sub(F.pow(F.add(F.sub(l1, l2), F.one()), 4), F.one());
    const Elem odd = F.mul(F.add(F.add(l1, l3), F.one()), F.add(l2, l3));
    const auto pol = f_formula(R, w);
    CHECK(pol.f0 == even);
    CHECK(pol.f1 == odd);
    CHECK(pol.f_formula == F.mul(even, odd));
  }
  // l1 - l2 + 1 = 0 gives an even factor of -1
  CHECK(f_formula(R, make_weight(F, {4, 0, 0})).f0 == F.neg(F.one()));
}

TEST_CASE("gamma route equals the matrix route") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const ReductionContext ctx(A, Character(A));
  const VermaFactory fac(A, Character(A));
  const auto X = weight_variety(A, Character(A));
  for (std::size_t i = 0; i < X.weights.size(); i += 9)
    CHECK(f_via_gamma(ctx, X.weights[i]) == f_direct(fac.build(X.weights[i])));
  const SuperAlgebra B = SuperAlgebra::build(1, 1, F);
  const ReductionContext cb(B, Character(B));
  const PBWElement g = cb.hc_gamma(pbar_product(cb));
  CHECK(g == cb.add(cb.generator_element(idx(B, 1, 1)), cb.generator_element(idx(B, 2, 2))));
}

TEST_CASE("scalar multiple") {
  const Field F = Field::make(5);
  const Vec v{F.one(), F.zero()};
  CHECK(scalar_multiple(F, Vec{F.from_int(3), F.zero()}, v) == F.from_int(3));
  CHECK(scalar_multiple(F, Vec{F.zero(), F.zero()}, v) == F.zero());
  try {
    scalar_multiple(F, Vec{F.one(), F.one()}, v);
    FAIL("non-scalar accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonScalarResult);
  }
}

TEST_CASE("simple g0-modules") {
  const Field F = Field::make(5);
  {
    const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
    const ModuleRep M = build_simple_g0_module(A, Character(A), make_weight(F, {2, 4}));
    CHECK(M.dim == 1);
  }
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  CHECK(build_simple_g0_module(A, Character(A), make_weight(F, {0, 0, 0})).dim == 1);
  CHECK(build_simple_g0_module(A, Character(A), make_weight(F, {3, 0, 0})).dim == 4);
  for (std::int64_t a = 0; a < 5; ++a) {
    const ModuleRep M = build_simple_g0_module(A, Character(A), make_weight(F, {a, 0, 0}));
    CHECK(M.dim == static_cast<std::size_t>(a + 1));
    CHECK(is_simple(M).simple);
  }
}

TEST_CASE("graded Vermas") {
  const Field F = Field::make(5);
  {
    const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
    for (std::int64_t a = 0; a < 5; ++a) {
      const Weight w = make_weight(F, {a, 2});
      const ModuleRep M = build_simple_g0_module(A, Character(A), w);
      const ModuleRep Zg = build_graded_verma(A, Character(A), M);
      const ModuleRep Z = build_baby_verma(A, Character(A), w);
      REQUIRE(Zg.dim == 2);
      // both have basis (v, f v): the action matrices coincide
      for (int g = 0; g < A.dim(); ++g) CHECK(Zg.act(g) == Z.act(g));
      CHECK(f1_direct(Zg) == F.from_int(a + 2));
    }
  }
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const ModuleRep M = build_simple_g0_module(A, Character(A), make_weight(F, {3, 0, 0}));
  const ModuleRep Zg = build_graded_verma(A, Character(A), M);
  CHECK(Zg.dim == 16);
  CHECK(verify_module(Zg).ok());
  // g_1 kills 1 (x) M, which sits in the first dim M coordinates
  for (int g = 0; g < A.dim(); ++g) {
    if (A.z_degree(g) != 1) continue;
    for (std::size_t i = 0; i < M.dim; ++i) CHECK(is_zero(mul_vec(Zg.act(g), Zg.basis_vector(i))));
  }
  // a module that is not a g0-module is rejected
  ModuleRep broken = M;
  for (std::size_t g = 0; g < broken.gens.size(); ++g)
    if (broken.gens[g] == idx(A, 1, 2)) broken.action[g] = scale(broken.action[g], F.from_int(2));
  try {
    build_graded_verma(A, Character(A), broken);
    FAIL("broken module accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotG0Module);
  }
}

TEST_CASE("maximal vectors and induced homomorphisms") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  const VermaFactory fac(A, Character(A));
  const ModuleRep Z = fac.build(make_weight(F, {1, 4}));
  const auto maxs = maximal_vectors(Z);
  CHECK(maxs.size() == 2);
  const ModuleRep Z2 = fac.build(make_weight(F, {1, 3}));
  CHECK(maximal_vectors(Z2).size() == 1);
  // identity map
  const auto id = induced_hom(fac, Z2, make_weight(F, {1, 3}), Z2, *Z2.highest_vector);
  CHECK(id.rank == 2);
  CHECK(id.map == Matrix::identity(F, 2));
  // f v in the reducible module: weight (0, 0) after the shift by -alpha
  const Vec fv = Z.basis_vector(1);
  const Weight mu = make_weight(F, {0, 0});
  CHECK(is_maximal_vector(Z, fv, mu));
  const ModuleRep Zmu = fac.build(mu);
  const auto h = induced_hom(fac, Zmu, mu, Z, fv);
  CHECK(h.rank == 1);
  CHECK(h.rank == spin(Z, fv).dim());
  try {
    induced_hom(fac, Z2, make_weight(F, {1, 3}), Z2, Z2.basis_vector(1));
    FAIL("non-maximal accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMaximal);
  }
}

TEST_CASE("module dump round trip") {
  const Field F = Field::make(5, 2);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, {2, 1}));
  const ModuleDump d = parse_module_dump(dump_module(Z));
  CHECK(d.p == 5);
  CHECK(d.k == 2);
  CHECK(d.modulus == F.modulus());
  CHECK(d.m == 1);
  CHECK(d.n == 1);
  CHECK(d.dim == Z.dim);
  CHECK(d.parity == Z.parity);
  CHECK(d.labels == Z.labels);
  REQUIRE(d.gens.size() == Z.gens.size());
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    CHECK(parse_unit_label(A, d.gens[g]) == Z.gens[g]);
    CHECK(d.action[g] == Z.action[g]);
  }
  for (const char* bad : {"", "glmn-module 2\n", "glmn-module 1\nfield 4 1 0 1\n",
                          "glmn-module 1\nfield 4 1 0 1\nalgebra 1 1\ndim 0\nparity\n"}) {
    try {
      parse_module_dump(bad);
      FAIL("accepted garbage");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  CHECK_THROWS_AS(parse_unit_label(A, "E(3,1)"), Error);
  CHECK_THROWS_AS(parse_unit_label(A, "F(1,1)"), Error);
}
