#include "glmn/kw.hpp"

#include <algorithm>
#include <set>

#include "glmn/error.hpp"

namespace glmn {

namespace {

bool contains_index(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::optional<Root> root_sum(Root a, Root b) {
  if (a.j == b.i && a.i != b.j) return Root{a.i, b.j};
  if (b.j == a.i && b.i != a.j) return Root{b.i, a.j};
  return std::nullopt;
}

std::vector<int> all_indices(const SuperAlgebra& A) {
  std::vector<int> out(A.dim());
  for (int a = 0; a < A.dim(); ++a) out[a] = a;
  return out;
}

}  // namespace

std::vector<Root> phi_prime(const RootSystem& R, const Character& chi) {
  std::vector<Root> out;
  for (Root a : R.positive())
    if (R.on_coroot(chi, a).code) out.push_back(a);
  return out;
}

void require_normalized(const RootSystem& R, const Character& chi) {
  for (Root a : R.positive())
    if (chi.at(a.i, a.j).code)
      throw Error(ErrorCode::NotNormalized, "chi(" + R.algebra().label(R.root_vector(a)) + ") != 0 on N+");
  for (Root a : phi_prime(R, chi))
    if (chi.at(a.j, a.i).code)
      throw Error(ErrorCode::NotNormalized, "chi(f) != 0 for " + R.label(a) + " with chi(h) != 0");
}

CharacterDecomposition decompose_character(const RootSystem& R, const Character& chi) {
  require_normalized(R, chi);
  const SuperAlgebra& A = R.algebra();
  CharacterDecomposition out{Character(A), Character(A)};
  out.chi_s = Character::zero(A).embed(FieldEmbedding::identity(chi.field()));
  out.chi_n = out.chi_s;
  for (int a : A.even_basis()) {
    const auto [i, j] = A.unit(a);
    (i == j ? out.chi_s : out.chi_n).set(i, j, chi.at(a));
  }
  return out;
}

LeviData levi_data(const RootSystem& R, const Character& chi) {
  require_normalized(R, chi);
  const SuperAlgebra& A = R.algebra();
  const Field& F = A.field();
  LeviData L{{}, {}, Subspace(F, A.dim()), {}, {}, {}, 0, 0, false};
  L.phi_prime = phi_prime(R, chi);
  auto in_phi = [&](Root a) {
    const Root pos = a.positive() ? a : a.negated();
    return std::find(L.phi_prime.begin(), L.phi_prime.end(), pos) != L.phi_prime.end();
  };
  for (int g = 0; g < A.dim(); ++g) {
    const auto [i, j] = A.unit(g);
    const Root r{i, j};
    if (i == j || !in_phi(r)) L.levi_prime.push_back(g);
    if (i == j || i < j || !in_phi(r)) L.parabolic.push_back(g);
    if (i < j && in_phi(r)) {
      L.nilradical.push_back(g);
      (A.parity(g) ? L.n_odd : L.n_even)++;
    }
    if (i > j && in_phi(r)) L.opposite.push_back(g);
  }

  auto closed = [&](const std::vector<int>& xs, const std::vector<int>& ys, const std::vector<int>& target) {
    for (int x : xs)
      for (int y : ys)
        for (const auto& t : A.bracket(x, y))
          if (!contains_index(target, t.index)) return false;
    return true;
  };
  if (!closed(L.levi_prime, L.levi_prime, L.levi_prime))
    throw Error(ErrorCode::ClosureFailure, "l' is not closed under the bracket");
  if (!closed(L.nilradical, L.nilradical, L.nilradical))
    throw Error(ErrorCode::ClosureFailure, "N is not closed under the bracket");
  if (!closed(L.parabolic, L.nilradical, L.nilradical))
    throw Error(ErrorCode::ClosureFailure, "N is not an ideal of P");

  std::vector<Vec> brackets;
  for (int x : L.levi_prime)
    for (int y : L.levi_prime) {
      AlgElem b = A.zero();
      for (const auto& t : A.bracket(x, y)) b[t.index] = t.coeff;
      if (!is_zero(b)) brackets.push_back(std::move(b));
    }
  L.levi = brackets.empty() ? Subspace(F, A.dim()) : Subspace::span(F, A.dim(), brackets);

  // chi on the Borel part of l
  std::vector<Vec> borel;
  for (int g = 0; g < A.dim(); ++g) {
    const auto [i, j] = A.unit(g);
    if (i <= j) borel.push_back(A.unit_vector(g));
  }
  const Subspace b_l = intersection(L.levi, Subspace::span(F, A.dim(), borel));
  L.chi_on_levi_nilpotent = true;
  for (std::size_t r = 0; r < b_l.dim(); ++r)
    if (chi.eval(b_l.vector(r)).code) L.chi_on_levi_nilpotent = false;
  return L;
}

bool negatives_closed(const std::vector<Root>& set) {
  std::vector<Root> neg;
  for (Root a : set) neg.push_back(a.negated());
  for (Root a : neg)
    for (Root b : neg)
      if (auto s = root_sum(a, b); s && std::find(neg.begin(), neg.end(), *s) == neg.end()) return false;
  return true;
}

bool negatives_normalized(const std::vector<Root>& set, const std::vector<Root>& levi_positive) {
  std::vector<Root> neg;
  for (Root a : set) neg.push_back(a.negated());
  for (Root b : levi_positive)
    for (Root a : neg)
      if (auto s = root_sum(a, b); s && std::find(neg.begin(), neg.end(), *s) == neg.end()) return false;
  return true;
}

namespace {

std::vector<Root> simple_of(const std::vector<int>& pi) {
  std::vector<Root> out;
  for (std::size_t a = 0; a + 1 < pi.size(); ++a) out.push_back({pi[a], pi[a + 1]});
  return out;
}

std::vector<Root> levi_positive_roots(const RootSystem& R, const std::vector<Root>& phi) {
  std::vector<Root> out;
  for (Root a : R.positive())
    if (std::find(phi.begin(), phi.end(), a) == phi.end()) out.push_back(a);
  return out;
}

}  // namespace

PhiOrdering order_phi_prime(const RootSystem& R, const Character& chi) {
  require_normalized(R, chi);
  const auto phi = phi_prime(R, chi);
  const auto levi_pos = levi_positive_roots(R, phi);
  std::vector<int> pi(R.algebra().size());
  for (std::size_t a = 0; a < pi.size(); ++a) pi[a] = static_cast<int>(a);
  std::set<Root> chosen;
  PhiOrdering out;
  while (chosen.size() < phi.size()) {
    const auto delta = simple_of(pi);
    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < delta.size() && !pick; ++a)
      if (std::find(phi.begin(), phi.end(), delta[a]) != phi.end() && !chosen.count(delta[a])) pick = a;
    if (!pick) {
      std::string state;
      for (Root d : delta) state += " " + R.label(d);
      throw Error(ErrorCode::OrderingStuck, "no simple root of the current system lies in Phi'; simple:" + state);
    }
    out.steps.push_back({delta[*pick], delta});
    chosen.insert(delta[*pick]);
    std::swap(pi[*pick], pi[*pick + 1]);
  }
  out.prefixes_closed = out.prefixes_normalized = true;
  std::vector<Root> prefix;
  for (const auto& st : out.steps) {
    prefix.push_back(st.alpha);
    out.prefixes_closed &= negatives_closed(prefix);
    out.prefixes_normalized &= negatives_normalized(prefix, levi_pos);
  }
  return out;
}

bool valid_phi_order(const RootSystem& R, const std::vector<Root>& order, const std::vector<Root>& levi_positive) {
  std::vector<int> pi(R.algebra().size());
  for (std::size_t a = 0; a < pi.size(); ++a) pi[a] = static_cast<int>(a);
  std::vector<Root> prefix;
  for (Root alpha : order) {
    const auto delta = simple_of(pi);
    auto it = std::find(delta.begin(), delta.end(), alpha);
    if (it == delta.end()) return false;
    if (std::find(prefix.begin(), prefix.end(), alpha) != prefix.end()) return false;
    const std::size_t a = static_cast<std::size_t>(it - delta.begin());
    std::swap(pi[a], pi[a + 1]);
    prefix.push_back(alpha);
    if (!negatives_closed(prefix) || !negatives_normalized(prefix, levi_positive)) return false;
  }
  return true;
}

KWReport kw_verify(const SuperAlgebra& A, const Character& chi, const Weight& lambda, const Sampling& s,
                   std::size_t dim_budget) {
  const RootSystem R(A);
  const LeviData L = levi_data(R, chi);
  KWReport rep;
  rep.phi_prime = L.phi_prime;
  rep.n_even = L.n_even;
  rep.n_odd = L.n_odd;
  rep.chi_on_levi_nilpotent = L.chi_on_levi_nilpotent;

  const VermaFactory full(A, chi);
  if (full.dim() > dim_budget)
    throw Error(ErrorCode::DimensionBudgetExceeded,
                "baby Verma of dimension " + std::to_string(full.dim()) + " exceeds budget " + std::to_string(dim_budget));

  const VermaFactory levi(A, chi, L.levi_prime);
  const ModuleRep Zl = levi.build(lambda);
  auto head_l = simple_head(Zl, s);
  ModuleRep Mp = std::move(head_l.head);
  rep.dim_m_prime = Mp.dim;
  rep.m_prime_simple = is_simple(Mp, s).simple;

  std::size_t factor = 1;
  for (std::size_t i = 0; i < L.n_even; ++i) factor *= A.field().characteristic();
  factor <<= L.n_odd;
  rep.predicted_dim = factor * Mp.dim;

  // N acts by zero on M'
  for (int g : L.nilradical) {
    Mp.gens.push_back(g);
    Mp.action.emplace_back(A.field(), Mp.dim, Mp.dim);
  }
  auto ctx = std::make_shared<ReductionContext>(A, chi, order_with_first(R, L.opposite));
  const InductionTemplate tmpl(ctx, L.opposite, L.parabolic, all_indices(A));
  const ModuleRep M = tmpl.induce(Mp);
  rep.induced_dim = M.dim;
  rep.induced_verdict = is_simple(M, s);

  const ModuleRep Z = full.build(lambda);
  rep.head_dim = simple_head(Z, s).head.dim;
  return rep;
}

Weight dot_action(const RootSystem& R, const std::vector<Root>& word, const Weight& lambda) {
  const Field& F = R.algebra().field();
  Weight w = lambda;
  for (std::size_t i = 0; i < w.values.size(); ++i) w.values[i] = F.add(w.values[i], R.rho().values[i]);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = R.reflect(*it, w);
  for (std::size_t i = 0; i < w.values.size(); ++i) w.values[i] = F.sub(w.values[i], R.rho().values[i]);
  return w;
}

bool LeviScanReport::ok() const {
  for (const auto& e : entries)
    if (!e.maximal || e.hom_rank != e.dim || !e.heads_match) return false;
  return head_simple && radical_absorbs && outside_generate;
}

LeviScanReport levi_scan(const SuperAlgebra& A, const Character& chi, const Weight& lambda, const Sampling& s,
                         std::size_t outside_samples) {
  const RootSystem R(A);
  const auto cls = classify_character(R, chi);
  if (!cls.standard_levi) throw Error(ErrorCode::NotStandardLevi, "character is not of standard Levi form");
  const Field& F = A.field();
  LeviScanReport rep;
  rep.levi_set = cls.levi_set;

  const VermaFactory fac(A, chi);
  const ModuleRep Z = fac.build(lambda);
  const Vec v = *Z.highest_vector;
  const auto head = simple_head(Z, s);
  rep.probabilistic = head.probabilistic;
  rep.head_dim = head.head.dim;
  rep.head_fingerprint = fingerprint(head.head);
  const auto head_verdict = is_simple(head.head, s);
  rep.head_simple = head_verdict.simple;
  rep.probabilistic |= head_verdict.probabilistic;

  for (Root alpha : cls.levi_set) {
    LeviScanEntry e;
    e.alpha = alpha;
    e.dim = Z.dim;
    e.a = F.to_prime(R.on_coroot(lambda, alpha));
    const int f = A.index(alpha.j, alpha.i);
    Vec u = v;
    for (std::uint32_t k = 0; k <= e.a; ++k) u = mul_vec(Z.act(f), u);
    e.mu = dot_action(R, {alpha}, lambda);
    e.maximal = is_maximal_vector(Z, u, e.mu);
    if (e.maximal) {
      const ModuleRep source = fac.build(e.mu);
      e.hom_rank = induced_hom(fac, source, e.mu, Z, u).rank;
      const auto h2 = simple_head(source, s);
      rep.probabilistic |= h2.probabilistic;
      e.heads_match = h2.head.dim == head.head.dim && fingerprint(h2.head) == rep.head_fingerprint;
    }
    rep.entries.push_back(std::move(e));
  }

  // unique maximal submodule: non-generating maximal vectors spin into R
  const Subspace& Rad = head.radical.space;
  rep.radical_absorbs = true;
  std::uint64_t state = derive_seed(s.seed, 0x17);
  for (const auto& sp : maximal_vectors(Z)) {
    const auto walk = walk_lines(sp.space, s, state, [&](const Vec& w) {
      const auto sub = spin(Z, w);
      if (sub.dim() < Z.dim && !Rad.contains(sub.space)) {
        rep.radical_absorbs = false;
        return true;
      }
      return false;
    });
    rep.probabilistic |= walk.probabilistic;
  }
  rep.outside_generate = true;
  for (std::size_t t = 0; t < outside_samples; ++t) {
    Vec w = random_vector(F, Z.dim, state);
    for (int tries = 0; Rad.contains(w) && tries < 64; ++tries) w = random_vector(F, Z.dim, state);
    if (Rad.contains(w)) break;
    ++rep.outside_samples;
    if (spin(Z, w).dim() != Z.dim) rep.outside_generate = false;
  }
  if (rep.outside_samples < outside_samples && Rad.dim() < Z.dim) rep.outside_generate = false;
  return rep;
}

Character conjugate_character(const SuperAlgebra& A, const Matrix& g, const Character& chi) {
  if (g.rows() != static_cast<std::size_t>(A.size()) || g.cols() != g.rows())
    throw Error(ErrorCode::SingularG, "conjugating matrix has the wrong shape");
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      if ((i < A.m()) != (j < A.m()) && g(i, j).code)
        throw Error(ErrorCode::SingularG, "conjugating matrix must be block diagonal");
  const auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorCode::SingularG, "conjugating matrix is singular");
  Character out(A);
  out = Character::zero(A).embed(FieldEmbedding::identity(chi.field()));
  for (int x : A.even_basis()) {
    const AlgElem y = A.from_matrix(*ginv * A.to_matrix(A.unit_vector(x)) * g);
    const auto [i, j] = A.unit(x);
    out.set(i, j, chi.eval(y));
  }
  return out;
}

Normalization normalize_character(const SuperAlgebra& A, const Character& chi) {
  const Field& F = A.field();
  Normalization out{std::nullopt, chi, ""};
  if (F.order() > (1u << 16)) {
    out.reason = "field too large for the eigenvalue search";
    return out;
  }
  Matrix g(F, A.size(), A.size());
  for (int block = 0; block < 2; ++block) {
    const int lo = block ? A.m() : 0, hi = block ? A.size() : A.m();
    const std::size_t k = static_cast<std::size_t>(hi - lo);
    Matrix Ct(F, k, k);  // transpose of the avatar block
    for (int i = lo; i < hi; ++i)
      for (int j = lo; j < hi; ++j) Ct(j - lo, i - lo) = chi.at(i, j);
    std::vector<Vec> eigvecs;
    for (std::uint64_t code = 0; code < F.order(); ++code) {
      const Elem c = F.from_code(code);
      const Matrix shifted = Ct - scale(Matrix::identity(F, k), c);
      const Subspace ker = kernel_basis(shifted);
      for (const auto& v : ker.vectors()) eigvecs.push_back(v);
    }
    if (eigvecs.size() != k) {
      out.reason = "character avatar is not diagonalizable over the current field";
      return out;
    }
    Matrix P(F, k, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) P(r, c) = eigvecs[c][r];
    const auto Pinv = inverse(P);
    if (!Pinv) {
      out.reason = "eigenvectors are dependent";
      return out;
    }
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) g(lo + r, lo + c) = (*Pinv)(r, c);
  }
  out.chi = conjugate_character(A, g, chi);
  out.g = g;
  return out;
}

}  // namespace glmn
