#pragma once

// Brute-force module oracles: maximal vectors, spinning, graded simplicity,
// simple heads, composition series, regular modules and Frobenius forms.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glmn/enveloping.hpp"
#include "glmn/module.hpp"

namespace glmn {

struct MaximalSpace {
  Weight weight;  // values on the frame's cartan generators, in order
  Subspace space;
  int parity = 0;
};

/// Homogeneous joint eigenvectors killed by every raising operator of the frame.
/// Throws EigenvaluesOutsideField when the Cartan action does not split.
std::vector<MaximalSpace> maximal_vectors(const ModuleRep& M);

/// Smallest graded submodule containing w.
GradedSubmodule spin(const ModuleRep& M, const Vec& w);

struct Sampling {
  std::uint64_t line_budget = 10000;
  std::uint64_t seed = 0;
  /// Lines spun per space when the line count exceeds the budget.
  std::uint64_t samples = 64;
};

struct SimplicityVerdict {
  bool simple = false;
  bool probabilistic = false;
  std::uint64_t lines_checked = 0;
  std::optional<Vec> witness;  // non-generating maximal vector
  std::optional<Weight> witness_weight;
  int witness_parity = 0;
};

SimplicityVerdict is_simple(const ModuleRep& M, const Sampling& s = {});

struct LineWalk {
  std::uint64_t checked = 0;
  bool probabilistic = false;
};

/// Visits every line of the space (one normalized vector each) or, past the line
/// budget, `samples` random lines; stops when visit returns true.
LineWalk walk_lines(const Subspace& space, const Sampling& s, std::uint64_t& state,
                    const std::function<bool(const Vec&)>& visit);

struct SimpleHead {
  GradedSubmodule radical;  // R with M/R simple
  ModuleRep head;
  bool probabilistic = false;
  std::vector<Subspace> absorbed;  // proper spins collected along the way
};

SimpleHead simple_head(const ModuleRep& M, const Sampling& s = {});

/// Sorted (weight, dim, parity) of the maximal-vector spaces.
std::vector<std::string> fingerprint(const ModuleRep& M);

struct CompositionFactor {
  std::size_t dim = 0;
  std::vector<std::string> fingerprint;
};

struct CompositionSeries {
  std::vector<Subspace> chain;  // M = chain[0] > chain[1] > ... > 0
  std::vector<CompositionFactor> factors;
  bool probabilistic = false;
};

CompositionSeries composition_series(const ModuleRep& M, const Sampling& s = {});

enum class Side { Left, Right };

/// u(sub, chi) acting on itself by left or right multiplication; basis = admissible
/// monomials over `sub`. Raising frame: every generator, shifted by chi on even ones.
ModuleRep regular_module(const ReductionContext& ctx, const std::vector<int>& sub, Side side);

/// Joint kernel of the frame's raising operators.
Subspace trivial_submodules(const ModuleRep& M);

struct GramResult {
  Matrix gram;
  bool nondegenerate = false;
};

enum class FrobeniusForm { TopCoefficient, UnitCoefficient };

/// Gram matrix of (a,b) -> coefficient of the top (or unit) monomial in ab.
GramResult frobenius_gram(const ReductionContext& ctx, const std::vector<int>& sub, std::uint64_t dim_budget,
                          FrobeniusForm form = FrobeniusForm::TopCoefficient);

/// Throws NotClosed unless the span of `sub` is closed under the bracket.
void require_subalgebra(const SuperAlgebra& A, const std::vector<int>& sub);

/// PBW element for a coordinate vector over monomials.
PBWElement element_from_coords(const ReductionContext& ctx, const std::vector<Monomial>& basis, const Vec& v);

/// Deterministic stream splitter.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
Vec random_vector(const Field& F, std::size_t n, std::uint64_t& state);

}  // namespace glmn
