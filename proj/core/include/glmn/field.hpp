#pragma once

// Finite fields F_{p^k} realized as F_p[x]/(modulus).
//
// Elements are plain values (Elem) whose code is the base-p integer
// sum c_i p^i of the coefficient vector in the generator. All arithmetic
// goes through a Field handle, in the style of FFLAS/Givaro field objects:
//   F.mul(a, b), F.add(a, b), ...
// A Field is a cheap, immutable, shareable handle.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glmn {

struct Elem {
  std::uint64_t code = 0;
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

using Coeff = std::uint32_t;

class Field {
 public:
  /// Builds F_{p^k}. Without an explicit modulus, the lexicographically least
  /// monic irreducible of degree k is used, comparing the little-endian list
  /// [c0, c1, ..., c_{k-1}] from c0 onwards.
  static Field make(std::uint32_t p, unsigned k = 1,
                    std::optional<std::vector<Coeff>> modulus = std::nullopt);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Monic modulus, little-endian, k+1 coefficients.
  const std::vector<Coeff>& modulus() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const Coeff> coeffs) const;
  /// The class of x in F_p[x]/(modulus).
  Elem generator() const;
  /// Element with the given code; codes enumerate the field 0..q-1.
  Elem from_code(std::uint64_t code) const;
  std::vector<Coeff> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, characteristic()); }

  bool is_zero(Elem a) const { return a.code == 0; }
  bool is_one(Elem a) const { return a.code == 1; }
  bool in_prime_field(Elem a) const { return a.code < characteristic(); }
  /// Residue in {0..p-1} of a prime-field element.
  std::uint32_t to_prime(Elem a) const;

  /// "[c0,c1,...,c_{k-1}]".
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

/// Roots of x^p - x = c in F, sorted by code. Either empty or a coset a + F_p.
std::vector<Elem> artin_schreier_roots(const Field& field, Elem c);

/// An embedding F -> F' of finite fields of the same characteristic,
/// determined by the image of the generator.
class FieldEmbedding {
 public:
  FieldEmbedding() = default;
  FieldEmbedding(Field source, Field target, Elem generator_image);

  static FieldEmbedding identity(const Field& field);
  /// Embeds `source` into `target` (degree must divide), sending the generator
  /// to the root of its modulus with the smallest code.
  static FieldEmbedding find(const Field& source, const Field& target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem operator()(Elem a) const;
  std::vector<Elem> operator()(std::span<const Elem> v) const;

 private:
  Field source_ = Field::make(5);  // replaced on construction
  Field target_ = source_;
  std::vector<Elem> powers_;  // images of generator^i
};

}  // namespace glmn
