#pragma once

// Baby Verma modules Z^chi(lambda), graded Verma modules Z^chi(M), the
// simplicity polynomials and induced homomorphisms.

#include <memory>
#include <optional>
#include <vector>

#include "glmn/analysis.hpp"
#include "glmn/module.hpp"

namespace glmn {

/// Builds baby Vermas for a subalgebra spanned by H and a set of root
/// vectors closed under negation (g itself, g_0, a Levi l'). One template per
/// (algebra, chi, subalgebra), reused for every lambda.
class VermaFactory {
 public:
  /// `acting` defaults to the whole algebra. Requires chi(N+) = 0 on the acting part.
  VermaFactory(const SuperAlgebra& algebra, const Character& chi, std::optional<std::vector<int>> acting = {});

  const SuperAlgebra& algebra() const { return algebra_; }
  const Character& chi() const { return chi_; }
  const InductionTemplate& tmpl() const { return *tmpl_; }
  std::shared_ptr<const InductionTemplate> tmpl_ptr() const { return tmpl_; }
  const std::vector<int>& acting() const { return acting_; }
  std::size_t dim() const { return tmpl_->lower_count(); }

  /// Throws LambdaNotInX.
  ModuleRep build(const Weight& lambda) const;

 private:
  SuperAlgebra algebra_;
  Character chi_;
  std::vector<int> acting_;
  std::shared_ptr<const ReductionContext> ctx_;
  std::shared_ptr<const InductionTemplate> tmpl_;
};

ModuleRep build_baby_verma(const SuperAlgebra& algebra, const Character& chi, const Weight& lambda);

/// Applies the ordered monomial to v through the action matrices (rightmost factor first).
Vec apply_monomial(const ModuleRep& M, const ReductionContext& ctx, const Monomial& m, const Vec& v);
/// Applies basis elements w_1 ... w_k to v, w_k first.
Vec apply_word(const ModuleRep& M, const std::vector<int>& word, const Vec& v);

/// Coefficient c with w = c v; throws NonScalarResult otherwise.
Elem scalar_multiple(const Field& F, const Vec& w, const Vec& v);

/// (prod e^{pbar-1}) (prod f^{pbar-1}) v in ascending height order, as a multiple of v.
Elem f_direct(const ModuleRep& Z);

struct SimplicityPolynomials {
  Elem f0, f1, f_formula;
};
/// Products over positive roots of [(lambda(h)+rho(h))^{p-1} - 1] (even) and
/// [lambda(h)+rho(h) - 1] (odd).
SimplicityPolynomials f_formula(const RootSystem& roots, const Weight& lambda);

/// prod e^{pbar-1} prod f^{pbar-1} (ascending height) in normal form.
PBWElement pbar_product(const ReductionContext& ctx);
/// The big element prod e^{pbar-1} prod f^{pbar-1}, its Cartan projection evaluated at lambda.
Elem f_via_gamma(const ReductionContext& ctx, const Weight& lambda);

/// Even-part baby Verma (acting by g_0 only) and its simple head.
ModuleRep build_simple_g0_module(const SuperAlgebra& algebra, const Character& chi, const Weight& lambda,
                                 const Sampling& s = {});

/// u(g,chi) (x) M over g_0 + g_1 with g_1 acting by zero.
class GradedVermaFactory {
 public:
  GradedVermaFactory(const SuperAlgebra& algebra, const Character& chi);
  const InductionTemplate& tmpl() const { return *tmpl_; }
  /// Throws NotG0Module.
  ModuleRep build(const ModuleRep& M) const;

 private:
  SuperAlgebra algebra_;
  Character chi_;
  std::shared_ptr<const ReductionContext> ctx_;
  std::shared_ptr<const InductionTemplate> tmpl_;
};

ModuleRep build_graded_verma(const SuperAlgebra& algebra, const Character& chi, const ModuleRep& M);

/// e_1 ... e_l f_1 ... f_l v for the odd root vectors of g_1 / g_{-1} in ascending height order,
/// as a multiple of the highest vector.
Elem f1_direct(const ModuleRep& Z);
Elem f1_direct(const ModuleRep& Z, const Vec& v);

/// Checks that u is a homogeneous maximal vector of the given weight.
bool is_maximal_vector(const ModuleRep& M, const Vec& u, const Weight& mu);

struct InducedHom {
  Matrix map;  // target.dim x source.dim
  std::size_t rank = 0;
};

/// The map f-monomial . v -> f-monomial . u from a baby Verma built by `source`.
/// Throws NotMaximal or IntertwinerCheckFailed.
InducedHom induced_hom(const VermaFactory& source, const ModuleRep& source_module, const Weight& mu,
                       const ModuleRep& target, const Vec& u);

}  // namespace glmn
