#include <doctest.h>

#include <algorithm>
#include <set>

#include "glmn/error.hpp"
#include "glmn/superalgebra.hpp"
#include "oracles.hpp"

using namespace glmn;

namespace {

// Matrix-level bracket as an independent oracle for the structure constants.
Matrix super_bracket(const SuperAlgebra& A, int a, int b) {
  const Matrix x = A.to_matrix(A.unit_vector(a)), y = A.to_matrix(A.unit_vector(b));
  const bool anti = A.parity(a) && A.parity(b);
  return anti ? x * y + y * x : x * y - y * x;
}

int idx(const SuperAlgebra& A, int i, int j) { return A.index(i - 1, j - 1); }

}  // namespace

TEST_CASE("bracket table matches matrix super commutators") {
  const Field F = Field::make(5);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 3}}) {
    const SuperAlgebra A = SuperAlgebra::build(m, n, F);
    CHECK(A.dim() == (m + n) * (m + n));
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b)
        CHECK(A.to_matrix(A.bracket(A.unit_vector(a), A.unit_vector(b))) == super_bracket(A, a, b));
  }
  CHECK_THROWS_AS(SuperAlgebra::build(0, 1, F), Error);
}

TEST_CASE("bracket examples") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
  AlgElem h = A.zero();
  h[idx(A, 1, 1)] = F.one();
  h[idx(A, 2, 2)] = F.one();
  CHECK(A.bracket(A.unit_vector(idx(A, 1, 2)), A.unit_vector(idx(A, 2, 1))) == h);
  CHECK(A.bracket(A.unit_vector(idx(A, 1, 1)), A.unit_vector(idx(A, 1, 2))) == A.unit_vector(idx(A, 1, 2)));
  CHECK(A.parity(idx(A, 1, 2)) == 1);
  CHECK(A.parity(idx(A, 2, 2)) == 0);
}

TEST_CASE("super anticommutativity and Jacobi on every basis triple") {
  const Field F = Field::make(5);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const SuperAlgebra A = SuperAlgebra::build(m, n, F);
    auto sgn = [&](int a, int b) { return A.parity(a) && A.parity(b) ? F.neg(F.one()) : F.one(); };
    std::size_t bad = 0;
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b) {
        const AlgElem x = A.unit_vector(a), y = A.unit_vector(b);
        if (!is_zero(add(F, A.bracket(x, y), scale(F, A.bracket(y, x), sgn(a, b))))) ++bad;
        for (int c = 0; c < A.dim(); ++c) {
          const AlgElem z = A.unit_vector(c);
          AlgElem s = scale(F, A.bracket(x, A.bracket(y, z)), sgn(a, c));
          s = add(F, s, scale(F, A.bracket(y, A.bracket(z, x)), sgn(b, a)));
          s = add(F, s, scale(F, A.bracket(z, A.bracket(x, y)), sgn(c, b)));
          if (!is_zero(s)) ++bad;
        }
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("p-mapping") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  CHECK(A.p_power(A.unit_vector(idx(A, 1, 1))) == A.unit_vector(idx(A, 1, 1)));
  CHECK(is_zero(A.p_power(A.unit_vector(idx(A, 1, 2)))));
  CHECK_THROWS_AS(A.p_power(A.unit_vector(idx(A, 1, 3))), Error);
  AlgElem d = A.zero();
  d[idx(A, 1, 1)] = F.from_int(2);
  d[idx(A, 2, 2)] = F.from_int(3);
  d[idx(A, 3, 3)] = F.from_int(4);
  AlgElem dp = A.zero();
  dp[idx(A, 1, 1)] = F.pow(F.from_int(2), 5);
  dp[idx(A, 2, 2)] = F.pow(F.from_int(3), 5);
  dp[idx(A, 3, 3)] = F.pow(F.from_int(4), 5);
  CHECK(A.p_power(d) == dp);

  // restrictedness: ad(x^[p]) = ad(x)^p, matrix power as the oracle
  std::uint64_t state = 99;
  for (const auto& [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const SuperAlgebra B = SuperAlgebra::build(m, n, F);
    for (int g : B.even_basis()) CHECK(B.ad(B.p_power(B.unit_vector(g))) == power(B.ad(B.unit_vector(g)), 5));
    for (int t = 0; t < 50; ++t) {
      AlgElem x = B.zero();
      for (int g : B.even_basis()) x[g] = oracle::random_elem(F, state);
      CHECK(B.to_matrix(B.p_power(x)) == power(B.to_matrix(x), 5));
      CHECK(B.ad(B.p_power(x)) == power(B.ad(x), 5));
    }
  }
}

TEST_CASE("supertrace") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  AlgElem id = A.zero();
  for (int i = 1; i <= 3; ++i) id[idx(A, i, i)] = F.one();
  CHECK(A.supertrace(id) == F.one());
  for (int a = 0; a < A.dim(); ++a)
    if (!A.is_diagonal(a)) CHECK(A.supertrace(A.unit_vector(a)) == F.zero());
  std::uint64_t state = 4;
  for (int t = 0; t < 100; ++t) {
    AlgElem x = A.zero(), y = A.zero();
    const int px = t & 1, py = (t >> 1) & 1;
    for (int g = 0; g < A.dim(); ++g) {
      if (A.parity(g) == px) x[g] = oracle::random_elem(F, state);
      if (A.parity(g) == py) y[g] = oracle::random_elem(F, state);
    }
    CHECK(A.supertrace(A.bracket(x, y)) == F.zero());
  }
}

TEST_CASE("root system of gl(2|1)") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const RootSystem R(A);
  REQUIRE(R.positive().size() == 3);
  CHECK(R.positive()[0] == Root{0, 1});
  CHECK(R.positive()[1] == Root{1, 2});
  CHECK(R.positive()[2] == Root{0, 2});
  CHECK(R.parity(R.positive()[0]) == 0);
  CHECK(R.parity(R.positive()[1]) == 1);
  CHECK(R.parity(R.positive()[2]) == 1);
  CHECK(R.positive()[2].height() == 2);
  CHECK(R.label(Root{0, 2}) == "e1-d1");
  // rho(h) for the odd root e1-d1 is 2
  CHECK(R.on_coroot(R.rho(), Root{0, 2}) == F.from_int(2));
  CHECK(R.on_coroot(R.rho(), Root{1, 2}) == F.from_int(1));
  CHECK(R.on_coroot(R.rho(), Root{0, 1}) == F.from_int(1));
  // h_a = [e_a, f_a]
  for (Root a : R.positive())
    CHECK(R.coroot(a) == A.bracket(A.unit_vector(R.root_vector(a)), A.unit_vector(R.root_vector(a.negated()))));
}

TEST_CASE("rho: one on simple coroots, closed form on odd roots, independent of the completing element") {
  const Field F = Field::make(7);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 3}}) {
    const SuperAlgebra A = SuperAlgebra::build(m, n, F);
    const RootSystem R(A);
    CHECK(R.positive().size() == static_cast<std::size_t>((m + n) * (m + n - 1) / 2));
    for (Root a : R.simple()) CHECK(R.on_coroot(R.rho(), a) == F.one());
    CHECK(R.rho().values.back() == F.zero());
    // expand h_a in simple coroots: solve by the chain of simple roots between i and j
    for (Root a : R.positive_odd()) {
      const int i = a.i + 1, j = a.j - m + 1;
      CHECK(R.on_coroot(R.rho(), a) == F.from_int(m - i - j + 2));
      if (n == 1) CHECK(R.on_coroot(R.rho(), a) == F.from_int(m - i + j));
    }
    // shifting rho by any multiple of the supertrace functional (which kills all
    // coroots) leaves every rho(h_a) unchanged
    Weight shifted = R.rho();
    for (int k = 0; k < m + n; ++k)
      shifted.values[k] = F.add(shifted.values[k], k < m ? F.from_int(3) : F.from_int(-3));
    for (Root a : R.positive()) CHECK(R.on_coroot(shifted, a) == R.on_coroot(R.rho(), a));
  }
}

TEST_CASE("reflections") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const RootSystem R(A);
  const Root a{0, 1};
  CHECK(R.reflect(a, Root{0, 2}) == Root{1, 2});
  CHECK(R.reflect(a, a) == a.negated());
  const Weight lambda = make_weight(F, {3, 1, 0});
  CHECK(R.reflect(a, lambda) == make_weight(F, {1, 3, 0}));
  CHECK(R.reflect(a, R.reflect(a, lambda)) == lambda);
  for (Root b : R.all()) CHECK(R.reflect(a, R.reflect(a, b)) == b);
  CHECK_THROWS_AS(R.reflect(Root{0, 2}, lambda), Error);
  // s(lambda) = lambda - lambda(h) a
  const Vec alpha = R.as_functional(a);
  const Elem c = R.on_coroot(lambda, a);
  Weight expect = lambda;
  for (std::size_t k = 0; k < 3; ++k) expect.values[k] = F.sub(expect.values[k], F.mul(c, alpha[k]));
  CHECK(R.reflect(a, lambda) == expect);
}

TEST_CASE("moving odd roots to simple ones") {
  const Field F = Field::make(5);
  {
    const RootSystem R(SuperAlgebra::build(2, 1, F));
    auto [w0, img0] = R.move_to_simple(Root{1, 2});
    CHECK(w0.empty());
    CHECK(img0 == Root{1, 2});
    auto [w1, img1] = R.move_to_simple(Root{0, 2});
    CHECK(w1 == std::vector<Root>{Root{0, 1}});
    CHECK(img1 == Root{1, 2});
  }
  const RootSystem R(SuperAlgebra::build(2, 2, F));
  const auto simple = R.simple();
  for (Root b : R.positive_odd()) {
    auto [word, img] = R.move_to_simple(b);
    CHECK(R.apply_word(word, b) == img);
    CHECK(std::find(simple.begin(), simple.end(), img) != simple.end());
    CHECK(R.parity(img) == 1);
  }
  // the even Weyl group keeps odd roots on their side
  for (Root b : R.positive_odd()) CHECK_THROWS_AS(R.move_to_simple(b.negated()), Error);
}

TEST_CASE("character classification") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  const RootSystem R(A);
  const auto z = classify_character(R, Character(A));
  CHECK(z.semisimple);
  CHECK(z.standard_levi);
  CHECK(z.levi_set.empty());
  Character chi(A);
  chi.set(1, 0, F.one());
  const auto c = classify_character(R, chi);
  CHECK_FALSE(c.semisimple);
  CHECK(c.borel_vanishing);
  CHECK(c.standard_levi);
  CHECK(c.levi_set == std::vector<Root>{Root{0, 1}});
  Character bad(A);
  try {
    bad.set(2, 0, F.one());
    FAIL("odd support accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSupport);
  }
}

TEST_CASE("weight variety sizes and extension") {
  const Field F = Field::make(5);
  {
    const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
    const auto X = weight_variety(A, Character(A));
    CHECK(X.weights.size() == 25);
    CHECK(X.algebra.field().degree() == 1);
    std::set<Weight> distinct(X.weights.begin(), X.weights.end());
    CHECK(distinct.size() == 25);
  }
  {
    const SuperAlgebra A = SuperAlgebra::build(1, 1, F);
    Character chi(A);
    chi.set(0, 0, F.one());
    const auto X = weight_variety(A, chi);
    CHECK(X.weights.size() == 25);
    CHECK(X.algebra.field().degree() == 5);
    const Field& E = X.algebra.field();
    for (const auto& w : X.weights) {
      CHECK(in_weight_variety(X.algebra, X.chi, w));
      CHECK(F.one().code == 1);
      CHECK(E.sub(E.frobenius(w.values[0]), w.values[0]) == E.one());
      CHECK(E.sub(E.frobenius(w.values[1]), w.values[1]) == E.zero());
    }
  }
  {
    const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
    CHECK(weight_variety(A, Character(A)).weights.size() == 125);
  }
}

TEST_CASE("root spaces are one-dimensional matrix units") {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 2, F);
  const RootSystem R(A);
  // weight of E(i,j) under ad of the diagonal is e_i - e_j; distinct roots give distinct units
  std::set<int> units;
  for (Root a : R.all()) {
    const int u = R.root_vector(a);
    CHECK(units.insert(u).second);
    for (int k = 0; k < A.size(); ++k) {
      const AlgElem h = A.unit_vector(A.index(k, k));
      const AlgElem br = A.bracket(h, A.unit_vector(u));
      const Elem expect = F.from_int((k == a.i) - (k == a.j));
      CHECK(br == scale(F, A.unit_vector(u), expect));
    }
  }
  CHECK(units.size() == static_cast<std::size_t>(A.dim() - A.size()));
}
