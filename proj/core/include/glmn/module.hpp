#pragma once

// Finite-dimensional Z2-graded modules given by action matrices, and the
// induction machinery that builds (graded) baby Verma modules.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glmn/enveloping.hpp"
#include "glmn/matrix.hpp"
#include "glmn/superalgebra.hpp"

namespace glmn {

struct ModuleRep {
  SuperAlgebra algebra;
  Character chi;
  std::size_t dim = 0;
  std::vector<int> gens;          // basis indices that act
  std::vector<Matrix> action;     // parallel to gens
  std::vector<std::uint8_t> parity;
  std::vector<std::string> labels;

  // Weight frame used to find maximal vectors: vectors killed by every
  // raising operator (action minus shift) that are joint eigenvectors of cartan.
  std::vector<int> raising;
  std::vector<Elem> raising_shift;
  std::vector<int> cartan;

  std::optional<Vec> highest_vector;
  std::optional<Weight> highest_weight;

  ModuleRep(SuperAlgebra a, Character c) : algebra(std::move(a)), chi(std::move(c)) {}

  const Field& field() const { return algebra.field(); }
  bool acts(int basis_index) const;
  const Matrix& act(int basis_index) const;
  /// Sets raising = acting positive root vectors (no shift) and cartan = acting diagonal units.
  void default_frame();
  std::vector<std::size_t> coords_of_parity(int parity) const;
  Vec basis_vector(std::size_t i) const;
  /// 0, 1, or -1 when mixed; zero counts as even.
  int parity_of(const Vec& v) const;
  /// Splits v into even and odd components.
  std::pair<Vec, Vec> split(const Vec& v) const;
};

/// Module axioms checked exhaustively on acting generators.
struct ModuleCheck {
  std::size_t bracket_pairs = 0;
  std::size_t p_relations = 0;
  std::size_t parity_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ModuleCheck verify_module(const ModuleRep& M);

/// A graded submodule, stored as one subspace of the ambient module.
struct GradedSubmodule {
  Subspace space;
  std::size_t even_dim = 0, odd_dim = 0;
  std::size_t dim() const { return space.dim(); }
};
GradedSubmodule make_graded(const ModuleRep& M, Subspace s);

/// Action on the subspace, basis = the echelon rows of s.
ModuleRep submodule(const ModuleRep& M, const Subspace& s);
/// M/R with basis the non-pivot coordinates of R.
ModuleRep quotient(const ModuleRep& M, const Subspace& r);
/// Coordinates of the image of v in quotient(M, r).
Vec project_to_quotient(const Subspace& r, const Vec& v);
/// Preimage in M of a quotient vector.
Vec lift_from_quotient(const Subspace& r, std::size_t ambient, const Vec& q);

/// Twist by an even automorphism g of the defining space: x acts as rho(g^{-1} x g).
/// The twisted module has character chi(g^{-1} . g).
ModuleRep twist_module(const ModuleRep& M, const Matrix& g);

/// Precomputed normal forms x * u for acting x and lower monomials u, split as
/// (lower monomial) * (upper tail). Inducing a module M over the upper
/// subalgebra then only evaluates tails on M. The ordering context must list the
/// lower generators first. Independent of M, so scans reuse one template.
class InductionTemplate {
 public:
  InductionTemplate(std::shared_ptr<const ReductionContext> ctx, std::vector<int> lower, std::vector<int> upper,
                    std::vector<int> acting);

  const ReductionContext& context() const { return *ctx_; }
  const std::vector<Monomial>& lower_monomials() const { return lower_monomials_; }
  std::size_t lower_count() const { return lower_monomials_.size(); }
  std::size_t index_of(const Monomial& m) const { return lower_index_.at(m); }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& upper() const { return upper_; }
  const std::vector<int>& acting() const { return acting_; }

  /// M must act by every upper generator.
  ModuleRep induce(const ModuleRep& M) const;

 private:
  struct Entry {
    std::size_t row;
    Elem coeff;
    std::size_t tail;
  };
  std::shared_ptr<const ReductionContext> ctx_;
  std::vector<int> lower_, upper_, acting_;
  std::vector<Monomial> lower_monomials_;
  std::map<Monomial, std::size_t> lower_index_;
  std::vector<Monomial> tails_;  // upper-only monomials
  std::vector<std::vector<std::vector<Entry>>> entries_;  // [acting][lower column]
};

/// Ordering with the given generators first (in default relative order), then the rest.
std::vector<int> order_with_first(const RootSystem& roots, const std::vector<int>& first);

}  // namespace glmn
