#pragma once

// PBW normal forms in the reduced enveloping algebra u(g, chi).
//
// A monomial is an exponent vector over generator *positions*; the context
// fixes which basis element sits at each position. The default order is
//   f (negative root vectors, ascending height) | h (E(i,i)) | e (positive root vectors)
// and any other total order can be supplied, e.g. to put a complement
// subalgebra first for induction.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glmn/superalgebra.hpp"

namespace glmn {

struct Monomial {
  std::vector<std::uint16_t> exps;  // by position
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  bool is_one() const;
  unsigned degree() const;
};

struct PBWElement {
  std::map<Monomial, Elem> terms;  // no zero coefficients
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const PBWElement&, const PBWElement&) = default;
};

class ReductionContext {
 public:
  /// `order` lists every basis index once; defaults to the f | h | e order.
  ReductionContext(const SuperAlgebra& algebra, const Character& chi, std::optional<std::vector<int>> order = {});
  ~ReductionContext();
  ReductionContext(const ReductionContext&) = delete;
  ReductionContext& operator=(const ReductionContext&) = delete;

  static std::vector<int> default_order(const RootSystem& roots);

  const SuperAlgebra& algebra() const { return algebra_; }
  const RootSystem& roots() const { return roots_; }
  const Character& chi() const { return chi_; }
  const Field& field() const { return algebra_.field(); }
  const std::vector<int>& order() const { return order_; }
  int position(int basis_index) const { return position_[basis_index]; }
  int generator(int pos) const { return order_[pos]; }
  int size() const { return static_cast<int>(order_.size()); }

  Monomial one_monomial() const { return Monomial{std::vector<std::uint16_t>(order_.size(), 0)}; }
  PBWElement one() const;
  PBWElement scalar(Elem c) const;
  PBWElement monomial(const Monomial& m, Elem c) const;
  /// Image of an algebra element.
  PBWElement embed(const AlgElem& x) const;
  PBWElement generator_element(int basis_index) const;

  PBWElement add(const PBWElement& a, const PBWElement& b) const;
  PBWElement sub(const PBWElement& a, const PBWElement& b) const;
  PBWElement scale(const PBWElement& a, Elem c) const;
  void add_into(PBWElement& acc, const Monomial& m, Elem c) const;
  void add_into(PBWElement& acc, const PBWElement& x, Elem c) const;

  /// Normal form of c * w_1 w_2 ... w_k for basis indices w_i.
  PBWElement normalize(const std::vector<int>& word, Elem c) const;
  PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
  /// m * x in normal form (memoized).
  PBWElement mul_gen(const Monomial& m, int basis_index) const;
  PBWElement mul_gen(const PBWElement& a, int basis_index) const;
  /// x * m in normal form.
  PBWElement left_mul_gen(int basis_index, const Monomial& m) const;
  /// Generators of m, left to right, repeated by exponent.
  std::vector<int> word(const Monomial& m) const;

  int parity(const Monomial& m) const;
  /// 0, 1, or -1 when mixed; zero counts as even.
  int parity(const PBWElement& u) const;
  /// Sum of exps * root as a functional on the diagonal.
  Vec weight(const Monomial& m) const;

  /// a u - (-1)^{p(a)p(u)} u a.
  PBWElement ad_action(const AlgElem& a, const PBWElement& u) const;
  /// Same map, by the derivation rule over the factors of each monomial.
  PBWElement ad_action_leibniz(const AlgElem& a, const PBWElement& u) const;
  /// Pure Cartan part of a weight-zero element.
  PBWElement hc_gamma(const PBWElement& u) const;
  /// Value of a Cartan-only element at a weight.
  Elem evaluate_cartan(const PBWElement& u, const Weight& w) const;

  /// Exponent vectors over the given basis indices: odd exps <= 1, even exps < p.
  std::vector<Monomial> admissible_monomials(const std::vector<int>& basis_indices) const;
  std::uint64_t admissible_count(const std::vector<int>& basis_indices) const;

  /// "coeff * f(...)h(...)e(...)" per term.
  std::string format(const PBWElement& u) const;
  std::string format(const Monomial& m) const;

  std::size_t memo_size() const;

 private:
  PBWElement compute_mul_gen(const Monomial& m, int pos) const;

  SuperAlgebra algebra_;
  RootSystem roots_;
  Character chi_;
  std::vector<int> order_, position_;
  std::vector<Elem> chi_p_;  // chi(x)^p by basis index
  Elem half_;
  struct Memo;
  std::unique_ptr<Memo> memo_;
};

}  // namespace glmn
