#pragma once

// Character decomposition, Levi data, the ordering of Phi', Kac-Weisfeiler
// dimension checks, the dot action and standard Levi form scans.

#include <optional>
#include <string>
#include <vector>

#include "glmn/analysis.hpp"
#include "glmn/verma.hpp"

namespace glmn {

struct CharacterDecomposition {
  Character chi_s, chi_n;
};

/// Phi' = positive roots with chi(h_a) != 0, in positive-root order.
std::vector<Root> phi_prime(const RootSystem& R, const Character& chi);
/// Throws NotNormalized unless chi(N+) = 0 and chi(f_a) = 0 for a in Phi'.
void require_normalized(const RootSystem& R, const Character& chi);
CharacterDecomposition decompose_character(const RootSystem& R, const Character& chi);

struct LeviData {
  std::vector<Root> phi_prime;
  std::vector<int> levi_prime;   // basis indices of l' (H plus root vectors with chi(h_a) = 0)
  Subspace levi;                 // [l', l'] inside g
  std::vector<int> parabolic;    // P = B + l'
  std::vector<int> nilradical;   // positive root vectors of Phi'
  std::vector<int> opposite;     // negative root vectors of Phi'
  std::size_t n_even = 0, n_odd = 0;
  bool chi_on_levi_nilpotent = false;  // chi vanishes on the Borel part of l
};

/// Throws NotNormalized, ClosureFailure.
LeviData levi_data(const RootSystem& R, const Character& chi);

struct OrderingStep {
  Root alpha;
  std::vector<Root> simple;  // Delta_i before reflecting
};

struct PhiOrdering {
  std::vector<OrderingStep> steps;
  bool prefixes_closed = false;
  bool prefixes_normalized = false;
};

/// Greedy reordering: pick a simple root of the current positive system lying in Phi', reflect, repeat.
/// Throws OrderingStuck.
PhiOrdering order_phi_prime(const RootSystem& R, const Character& chi);

/// Is {-a_1, ..., -a_i} closed under root addition, and normalized by positive l' roots?
bool negatives_closed(const std::vector<Root>& set);
bool negatives_normalized(const std::vector<Root>& set, const std::vector<Root>& levi_positive);
/// Validity of an explicit order: each root simple when reached, prefixes closed and normalized.
bool valid_phi_order(const RootSystem& R, const std::vector<Root>& order, const std::vector<Root>& levi_positive);

struct KWReport {
  std::vector<Root> phi_prime;
  std::size_t n_even = 0, n_odd = 0;
  std::size_t dim_m_prime = 0;
  std::size_t predicted_dim = 0;
  std::size_t induced_dim = 0;
  SimplicityVerdict induced_verdict;
  std::size_t head_dim = 0;  // simple head of the full baby Verma at lambda
  bool m_prime_simple = false;
  bool chi_on_levi_nilpotent = false;
  bool ok() const {
    return predicted_dim == induced_dim && induced_verdict.simple && head_dim == predicted_dim && m_prime_simple &&
           chi_on_levi_nilpotent;
  }
};

KWReport kw_verify(const SuperAlgebra& A, const Character& chi, const Weight& lambda, const Sampling& s = {},
                   std::size_t dim_budget = 2000);

/// w(lambda + rho) - rho for a word of even reflections, rightmost first.
Weight dot_action(const RootSystem& R, const std::vector<Root>& word, const Weight& lambda);

struct LeviScanEntry {
  Root alpha;
  std::uint32_t a = 0;                    // lambda(h_alpha) in {0..p-1}
  bool maximal = false;                  // f^{a+1} v maximal of weight lambda - (a+1) alpha
  Weight mu;                             // s_alpha . lambda
  std::size_t hom_rank = 0;
  std::size_t dim = 0;
  bool heads_match = false;              // L(s.lambda) and L(lambda): dim and fingerprint
};

struct LeviScanReport {
  std::vector<Root> levi_set;
  std::vector<LeviScanEntry> entries;
  std::size_t head_dim = 0;
  bool head_simple = false;
  bool radical_absorbs = false;     // every non-generating maximal vector spins inside R
  std::size_t outside_samples = 0;  // sampled vectors outside R ...
  bool outside_generate = false;    // ... and all of them generate
  std::vector<std::string> head_fingerprint;
  bool probabilistic = false;
  bool ok() const;
};

/// Throws NotStandardLevi.
LeviScanReport levi_scan(const SuperAlgebra& A, const Character& chi, const Weight& lambda, const Sampling& s = {},
                         std::size_t outside_samples = 20);

/// (g.chi)(x) = chi(g^{-1} x g); g must be invertible and block diagonal. Throws SingularG.
Character conjugate_character(const SuperAlgebra& A, const Matrix& g, const Character& chi);

struct Normalization {
  std::optional<Matrix> g;
  Character chi;
  std::string reason;  // empty on success
};

/// Blockwise diagonalization of the character's matrix avatar; soft failure leaves chi untouched.
Normalization normalize_character(const SuperAlgebra& A, const Character& chi);

}  // namespace glmn
