#include <doctest.h>

#include <algorithm>
#include <set>

#include "glmn/error.hpp"
#include "glmn/field.hpp"
#include "oracles.hpp"

using namespace glmn;

namespace {

// Brute-force irreducibility of a monic degree-k polynomial over F_p (k <= 5):
// trial division by every monic polynomial of degree 1..k/2.
bool irreducible_by_trial(std::uint32_t p, const std::vector<std::uint32_t>& f) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> g(d + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::int64_t>(c % p);
      g[d] = 1;
      std::vector<std::int64_t> r(f.begin(), f.end());
      for (int top = k; top >= d; --top) {
        const std::int64_t q = r[top] % p;
        for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - q * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field construction and errors") {
  const Field F = Field::make(5);
  CHECK(F.order() == 5);
  CHECK(F.degree() == 1);
  CHECK_THROWS_AS(Field::make(4), Error);
  try {
    Field::make(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositeP);
  }
  try {
    Field::make(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PTooSmall);
  }
  try {
    Field::make(5, 2, std::vector<Coeff>{1, 0, 1});  // x^2 + 1 = (x-2)(x+2) over F_5
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIrreducibleModulus);
  }
}

TEST_CASE("default modulus is the first irreducible in c0-first lexicographic order") {
  for (unsigned k : {2u, 3u, 5u}) {
    const Field F = Field::make(5, k);
    const auto& mod = F.modulus();
    REQUIRE(mod.size() == k + 1);
    CHECK(irreducible_by_trial(5, mod));
    // every earlier candidate in the same order is reducible
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= 5;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> cand(k + 1, 0);
      std::uint64_t c = code;
      for (int i = static_cast<int>(k) - 1; i >= 0; --i, c /= 5) cand[i] = static_cast<std::uint32_t>(c % 5);
      cand[k] = 1;
      if (cand == mod) break;
      CHECK_FALSE(irreducible_by_trial(5, cand));
    }
  }
  CHECK(Field::make(5, 5).modulus() == std::vector<Coeff>{1, 0, 0, 0, 4, 1});
}

TEST_CASE("field axioms on seeded triples") {
  for (auto [p, k] : {std::pair{5u, 1u}, {7u, 1u}, {5u, 2u}, {5u, 5u}, {11u, 3u}}) {
    const Field F = Field::make(p, k);
    std::uint64_t state = 42 + p * 10 + k;
    for (int t = 0; t < 1000; ++t) {
      const Elem a = oracle::random_elem(F, state), b = oracle::random_elem(F, state), c = oracle::random_elem(F, state);
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
      if (a.code) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}

TEST_CASE("table addition agrees with coefficientwise addition") {
  const Field F = Field::make(5, 5);
  std::uint64_t state = 9;
  for (int t = 0; t < 2000; ++t) {
    const Elem a = oracle::random_elem(F, state), b = oracle::random_elem(F, state);
    auto ca = F.coeffs(a), cb = F.coeffs(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % 5;
    CHECK(F.add(a, b) == F.from_coeffs(ca));
  }
}

TEST_CASE("frobenius is additive and fixes exactly the prime field") {
  const Field F5 = Field::make(5);
  for (std::uint64_t c = 0; c < 5; ++c) CHECK(F5.frobenius(F5.from_code(c)) == F5.from_code(c));
  const Field F = Field::make(5, 5);
  std::size_t fixed = 0;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const Elem a = F.from_code(c);
    if (F.frobenius(a) == a) {
      ++fixed;
      CHECK(F.in_prime_field(a));
    }
  }
  CHECK(fixed == 5);
  std::uint64_t state = 3;
  for (int t = 0; t < 500; ++t) {
    const Elem a = oracle::random_elem(F, state), b = oracle::random_elem(F, state);
    CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
  }
}

TEST_CASE("artin-schreier roots") {
  const Field F5 = Field::make(5);
  auto r0 = artin_schreier_roots(F5, F5.zero());
  CHECK(r0.size() == 5);
  CHECK(artin_schreier_roots(F5, F5.one()).empty());

  const Field F = Field::make(5, 5);
  const auto r1 = artin_schreier_roots(F, F.one());
  REQUIRE(r1.size() == 5);
  // exhaustive oracle
  std::vector<Elem> brute;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const Elem x = F.from_code(c);
    if (F.sub(F.frobenius(x), x) == F.one()) brute.push_back(x);
  }
  CHECK(brute == r1);
  // coset of F_p: closed under +1
  std::set<std::uint64_t> codes;
  for (Elem x : r1) codes.insert(x.code);
  for (Elem x : r1) CHECK(codes.count(F.add(x, F.one()).code) == 1);
  // roots generate the degree-5 extension
  for (Elem x : r1) CHECK_FALSE(F.in_prime_field(x));

  std::uint64_t state = 77;
  for (int t = 0; t < 50; ++t) {
    const Elem c = oracle::random_elem(F, state);
    const auto r = artin_schreier_roots(F, c);
    CHECK((r.empty() || r.size() == 5));
    for (Elem x : r) CHECK(F.sub(F.frobenius(x), x) == c);
  }
}

TEST_CASE("format and parse round trip") {
  const Field F = Field::make(5, 3);
  for (std::uint64_t c = 0; c < F.order(); c += 7) {
    const Elem a = F.from_code(c);
    CHECK(F.parse(F.format(a)) == a);
  }
  CHECK(F.format(F.generator()) == "[0,1,0]");
  CHECK(F.from_int(-1) == F.from_code(4));
  CHECK(F.to_prime(F.from_int(13)) == 3);
}

TEST_CASE("embedding respects arithmetic") {
  const Field small = Field::make(5, 1);
  const Field big = Field::make(5, 5);
  const auto e = FieldEmbedding::find(small, big);
  for (std::uint64_t a = 0; a < 5; ++a)
    for (std::uint64_t b = 0; b < 5; ++b) {
      const Elem x = small.from_code(a), y = small.from_code(b);
      CHECK(e(small.add(x, y)) == big.add(e(x), e(y)));
      CHECK(e(small.mul(x, y)) == big.mul(e(x), e(y)));
    }
}
