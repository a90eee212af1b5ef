#pragma once

// gl(m|n) over F_{p^k}: matrix-unit basis, super bracket, p-mapping,
// roots, characters and the weight variety.
//
// Indices are 0-based internally; E(i,j) sits at basis index i*(m+n)+j and
// prints 1-based.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glmn/field.hpp"
#include "glmn/matrix.hpp"

namespace glmn {

/// Dense coordinates on the matrix-unit basis.
using AlgElem = Vec;

struct Term {
  int index;
  Elem coeff;
};

class SuperAlgebra {
 public:
  static SuperAlgebra build(int m, int n, const Field& field);

  int m() const;
  int n() const;
  int size() const { return m() + n(); }  // m+n
  int dim() const { return size() * size(); }
  const Field& field() const;

  int index(int i, int j) const { return i * size() + j; }
  std::pair<int, int> unit(int idx) const { return {idx / size(), idx % size()}; }
  int parity(int idx) const;  // 0 even, 1 odd
  bool is_even(int idx) const { return parity(idx) == 0; }
  bool is_diagonal(int idx) const { return idx / size() == idx % size(); }
  /// Z-degree: -1 on g_{-1}, 0 on g_0, +1 on g_1.
  int z_degree(int idx) const;
  std::string label(int idx) const;

  /// [x_a, x_b] as a sparse combination (at most two terms).
  const std::vector<Term>& bracket(int a, int b) const;
  AlgElem bracket(const AlgElem& x, const AlgElem& y) const;
  /// p-map on a basis element: E(i,i) for diagonal units, 0 for even off-diagonal.
  const std::vector<Term>& pmap(int a) const;

  AlgElem unit_vector(int idx) const;
  AlgElem zero() const { return AlgElem(dim()); }
  Matrix to_matrix(const AlgElem& x) const;
  AlgElem from_matrix(const Matrix& a) const;
  /// 0, 1 or -1 for a mixed element; zero counts as even.
  int parity_of(const AlgElem& x) const;

  Elem supertrace(const AlgElem& x) const;
  /// Matrix p-th power of an even element.
  AlgElem p_power(const AlgElem& x) const;
  /// ad(x) as a dim x dim matrix acting on coordinate columns.
  Matrix ad(const AlgElem& x) const;

  /// Same algebra over a different field of the same characteristic.
  SuperAlgebra with_field(const Field& field) const;

  std::vector<int> even_basis() const;
  std::vector<int> odd_basis() const;

 private:
  struct Impl;
  explicit SuperAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Root {
  int i = 0, j = 0;  // epsilon_i - epsilon_j, 0-based, i != j
  friend constexpr auto operator<=>(const Root&, const Root&) = default;
  bool positive() const { return i < j; }
  int height() const { return j - i; }
  Root negated() const { return {j, i}; }
};

struct Weight {
  Vec values;  // lambda(E(i,i))
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.values <=> b.values; }
};

class Character {
 public:
  explicit Character(const SuperAlgebra& algebra);

  static Character zero(const SuperAlgebra& algebra) { return Character(algebra); }
  /// Throws InvalidSupport on an odd unit.
  void set(int i, int j, Elem value);
  Elem at(int idx) const { return values_[idx]; }
  Elem at(int i, int j) const { return values_[static_cast<std::size_t>(i * size_ + j)]; }
  Elem eval(const AlgElem& x) const;
  const Vec& values() const { return values_; }
  bool is_zero() const { return glmn::is_zero(values_); }
  Character embed(const FieldEmbedding& e) const;
  /// "E(i,j)=value" pairs of the nonzero entries.
  std::string format() const;
  const Field& field() const { return field_; }
  friend bool operator==(const Character& a, const Character& b) {
    return a.field_ == b.field_ && a.values_ == b.values_;
  }

 private:
  Field field_;
  int size_ = 0;
  int m_ = 0;
  Vec values_;
};

class RootSystem {
 public:
  explicit RootSystem(const SuperAlgebra& algebra);

  const SuperAlgebra& algebra() const { return algebra_; }
  int parity(Root a) const { return (a.i < algebra_.m()) != (a.j < algebra_.m()) ? 1 : 0; }
  /// Ascending height, lexicographic tie-break.
  const std::vector<Root>& positive() const { return positive_; }
  const std::vector<Root>& simple() const { return simple_; }
  std::vector<Root> all() const;
  std::vector<Root> positive_even() const;
  std::vector<Root> positive_odd() const;
  std::vector<Root> simple_even() const;

  int root_vector(Root a) const { return algebra_.index(a.i, a.j); }
  /// h_a = [e_a, f_a].
  AlgElem coroot(Root a) const;
  /// lambda(h_a) for a positive root.
  Elem on_coroot(const Weight& w, Root a) const;
  Elem on_coroot(const Character& chi, Root a) const;
  /// rho as values on E(i,i), fixed by rho(h_simple)=1 and rho(E(N,N))=0.
  const Weight& rho() const { return rho_; }
  /// Root as a functional on the diagonal.
  Vec as_functional(Root a) const;

  Root reflect(Root a, Root b) const;
  /// Even a only.
  Weight reflect(Root a, const Weight& w) const;
  /// Shortest word of even simple reflections taking an odd root into the simple system;
  /// the word acts rightmost first.
  std::pair<std::vector<Root>, Root> move_to_simple(Root beta) const;
  Root apply_word(const std::vector<Root>& word, Root b) const;

  std::string label(Root a) const;

 private:
  SuperAlgebra algebra_;
  std::vector<Root> positive_, simple_;
  Weight rho_;
};

struct CharacterClass {
  bool semisimple = false;        // zero on every root vector
  bool borel_vanishing = false;   // zero on H and N+
  bool nplus_vanishing = false;   // zero on N+
  bool standard_levi = false;
  std::vector<Root> levi_set;     // I, when standard_levi
};

CharacterClass classify_character(const RootSystem& roots, const Character& chi);

struct WeightVariety {
  SuperAlgebra algebra;  // possibly over an extension of the input field
  Character chi;
  FieldEmbedding embedding;  // input field into algebra.field()
  std::vector<std::vector<Elem>> coordinate_roots;
  std::vector<Weight> weights;  // lexicographic in the coordinate root lists
};

/// All lambda with lambda_i^p - lambda_i = chi(E(i,i))^p, extending the field as needed.
WeightVariety weight_variety(const SuperAlgebra& algebra, const Character& chi);
bool in_weight_variety(const SuperAlgebra& algebra, const Character& chi, const Weight& w);

/// Weight with the given integer coordinates.
Weight make_weight(const Field& field, const std::vector<std::int64_t>& coords);
std::string format_weight(const Field& field, const Weight& w);

}  // namespace glmn
