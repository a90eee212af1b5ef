#pragma once

// Dense univariate polynomials over a Field, little-endian coefficient
// vectors with no trailing zeros (the zero polynomial is empty).

#include <cstdint>
#include <vector>

#include "glmn/field.hpp"

namespace glmn::poly {

using Poly = std::vector<Elem>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
Poly powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& modulus);
Elem eval(const Field& F, const Poly& f, Elem x);

/// Rabin's test over the prime field of F.
bool is_irreducible(const Field& prime_field, const Poly& f);

/// All roots of f in F (distinct, sorted by code).
std::vector<Elem> roots(const Field& F, const Poly& f);

}  // namespace glmn::poly
