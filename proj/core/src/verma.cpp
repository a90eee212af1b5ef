#include "glmn/verma.hpp"

#include <algorithm>

#include "glmn/error.hpp"

namespace glmn {

namespace {

std::vector<int> all_indices(const SuperAlgebra& A) {
  std::vector<int> out(A.dim());
  for (int a = 0; a < A.dim(); ++a) out[a] = a;
  return out;
}

std::vector<int> ascending_root_vectors(const RootSystem& R, bool negative, int parity_filter) {
  const SuperAlgebra& A = R.algebra();
  std::vector<int> out;
  for (Root a : R.positive()) {
    if (parity_filter >= 0 && R.parity(a) != parity_filter) continue;
    out.push_back(negative ? A.index(a.j, a.i) : A.index(a.i, a.j));
  }
  return out;
}

std::vector<int> pbar_word(const RootSystem& R, bool negative, int parity_filter) {
  const unsigned p = R.algebra().field().characteristic();
  std::vector<int> out;
  for (int g : ascending_root_vectors(R, negative, parity_filter)) {
    const unsigned reps = R.algebra().parity(g) ? 1 : p - 1;
    for (unsigned k = 0; k < reps; ++k) out.push_back(g);
  }
  return out;
}

}  // namespace

VermaFactory::VermaFactory(const SuperAlgebra& algebra, const Character& chi, std::optional<std::vector<int>> acting)
    : algebra_(algebra), chi_(chi), acting_(acting ? *acting : all_indices(algebra)) {
  std::sort(acting_.begin(), acting_.end());
  acting_.erase(std::unique(acting_.begin(), acting_.end()), acting_.end());
  std::vector<int> lower, upper;
  for (int i = 0; i < algebra.size(); ++i)
    if (!std::binary_search(acting_.begin(), acting_.end(), algebra.index(i, i)))
      throw Error(ErrorCode::BadDims, "Verma subalgebra must contain the Cartan subalgebra");
  for (int g : acting_) {
    const auto [i, j] = algebra.unit(g);
    if (i != j && !std::binary_search(acting_.begin(), acting_.end(), algebra.index(j, i)))
      throw Error(ErrorCode::NotClosed, "root vectors of the Verma subalgebra must come in +- pairs");
    if (i > j)
      lower.push_back(g);
    else
      upper.push_back(g);
    if (i < j && chi.at(g).code)
      throw Error(ErrorCode::ChiNotBorelCompatible, "chi(" + algebra.label(g) + ") != 0 on a positive root vector");
  }
  require_subalgebra(algebra, acting_);
  ctx_ = std::make_shared<ReductionContext>(algebra, chi);
  tmpl_ = std::make_shared<InductionTemplate>(ctx_, lower, upper, acting_);
}

ModuleRep VermaFactory::build(const Weight& lambda) const {
  if (!in_weight_variety(algebra_, chi_, lambda))
    throw Error(ErrorCode::LambdaNotInX, format_weight(algebra_.field(), lambda) + " is not in the weight variety");
  const Field& F = algebra_.field();
  ModuleRep v(algebra_, chi_);
  v.dim = 1;
  v.parity = {0};
  v.labels = {"v"};
  for (int g : tmpl_->upper()) {
    const auto [i, j] = algebra_.unit(g);
    Matrix X(F, 1, 1);
    if (i == j) X(0, 0) = lambda.values[i];
    v.gens.push_back(g);
    v.action.push_back(std::move(X));
  }
  ModuleRep Z = tmpl_->induce(v);
  Z.highest_vector = Z.basis_vector(0);
  Z.highest_weight = lambda;
  return Z;
}

ModuleRep build_baby_verma(const SuperAlgebra& algebra, const Character& chi, const Weight& lambda) {
  return VermaFactory(algebra, chi).build(lambda);
}

Vec apply_word(const ModuleRep& M, const std::vector<int>& word, const Vec& v) {
  Vec out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = mul_vec(M.act(*it), out);
  return out;
}

Vec apply_monomial(const ModuleRep& M, const ReductionContext& ctx, const Monomial& m, const Vec& v) {
  return apply_word(M, ctx.word(m), v);
}

Elem scalar_multiple(const Field& F, const Vec& w, const Vec& v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].code == 0) ++lead;
  if (lead == v.size()) throw Error(ErrorCode::ZeroVector, "reference vector is zero");
  const Elem c = F.div(w[lead], v[lead]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != F.mul(c, v[i]))
      throw Error(ErrorCode::NonScalarResult, "result is not proportional to the highest vector (coordinate " +
                                                   std::to_string(i) + ")");
  return c;
}

Elem f_direct(const ModuleRep& Z) {
  if (!Z.highest_vector) throw Error(ErrorCode::NoMaximalVector, "module has no recorded highest vector");
  const RootSystem R(Z.algebra);
  std::vector<int> word = pbar_word(R, false, -1);
  const auto f = pbar_word(R, true, -1);
  word.insert(word.end(), f.begin(), f.end());
  return scalar_multiple(Z.field(), apply_word(Z, word, *Z.highest_vector), *Z.highest_vector);
}

SimplicityPolynomials f_formula(const RootSystem& R, const Weight& lambda) {
  const Field& F = R.algebra().field();
  SimplicityPolynomials out{F.one(), F.one(), F.one()};
  for (Root a : R.positive()) {
    const Elem x = F.add(R.on_coroot(lambda, a), R.on_coroot(R.rho(), a));
    if (R.parity(a))
      out.f1 = F.mul(out.f1, F.sub(x, F.one()));
    else
      out.f0 = F.mul(out.f0, F.sub(F.pow(x, F.characteristic() - 1), F.one()));
  }
  out.f_formula = F.mul(out.f0, out.f1);
  return out;
}

PBWElement pbar_product(const ReductionContext& ctx) {
  const RootSystem& R = ctx.roots();
  std::vector<int> word = pbar_word(R, false, -1);
  const auto f = pbar_word(R, true, -1);
  word.insert(word.end(), f.begin(), f.end());
  return ctx.normalize(word, ctx.field().one());
}

Elem f_via_gamma(const ReductionContext& ctx, const Weight& lambda) {
  return ctx.evaluate_cartan(ctx.hc_gamma(pbar_product(ctx)), lambda);
}

ModuleRep build_simple_g0_module(const SuperAlgebra& A, const Character& chi, const Weight& lambda, const Sampling& s) {
  const VermaFactory even(A, chi, A.even_basis());
  const ModuleRep Z0 = even.build(lambda);
  auto head = simple_head(Z0, s);
  ModuleRep M = std::move(head.head);
  M.highest_vector = head.radical.dim() == 0 ? Z0.basis_vector(0) : project_to_quotient(head.radical.space, Z0.basis_vector(0));
  M.highest_weight = lambda;
  if (is_zero(*M.highest_vector)) throw Error(ErrorCode::NoMaximalVector, "highest vector lies in the radical");
  return M;
}

GradedVermaFactory::GradedVermaFactory(const SuperAlgebra& algebra, const Character& chi)
    : algebra_(algebra), chi_(chi) {
  const RootSystem R(algebra);
  std::vector<int> lower, upper;
  for (int a = 0; a < algebra.dim(); ++a) (algebra.z_degree(a) < 0 ? lower : upper).push_back(a);
  for (Root a : R.positive_even())
    if (chi.at(a.i, a.j).code)
      throw Error(ErrorCode::ChiNotBorelCompatible, "chi must vanish on even positive root vectors");
  ctx_ = std::make_shared<ReductionContext>(algebra, chi, order_with_first(R, lower));
  tmpl_ = std::make_shared<InductionTemplate>(ctx_, lower, upper, all_indices(algebra));
}

ModuleRep GradedVermaFactory::build(const ModuleRep& M) const {
  for (int a : algebra_.even_basis())
    if (!M.acts(a)) throw Error(ErrorCode::NotG0Module, algebra_.label(a) + " does not act on M");
  const auto check = verify_module(M);
  if (!check.ok()) throw Error(ErrorCode::NotG0Module, check.failures.front());
  ModuleRep ext = M;
  for (int a = 0; a < algebra_.dim(); ++a)
    if (algebra_.z_degree(a) > 0) {
      ext.gens.push_back(a);
      ext.action.emplace_back(algebra_.field(), M.dim, M.dim);
    }
  ModuleRep Z = tmpl_->induce(ext);
  if (M.highest_vector) {
    Vec v(Z.dim);
    std::copy(M.highest_vector->begin(), M.highest_vector->end(), v.begin());
    Z.highest_vector = v;
  }
  Z.highest_weight = M.highest_weight;
  return Z;
}

ModuleRep build_graded_verma(const SuperAlgebra& algebra, const Character& chi, const ModuleRep& M) {
  return GradedVermaFactory(algebra, chi).build(M);
}

Elem f1_direct(const ModuleRep& Z, const Vec& v) {
  const RootSystem R(Z.algebra);
  std::vector<int> word = ascending_root_vectors(R, false, 1);
  const auto f = ascending_root_vectors(R, true, 1);
  word.insert(word.end(), f.begin(), f.end());
  return scalar_multiple(Z.field(), apply_word(Z, word, v), v);
}

Elem f1_direct(const ModuleRep& Z) {
  if (!Z.highest_vector) throw Error(ErrorCode::NoMaximalVector, "module has no recorded highest vector");
  return f1_direct(Z, *Z.highest_vector);
}

bool is_maximal_vector(const ModuleRep& M, const Vec& u, const Weight& mu) {
  const Field& F = M.field();
  if (is_zero(u) || M.parity_of(u) < 0) return false;
  for (std::size_t r = 0; r < M.raising.size(); ++r) {
    Vec img = mul_vec(M.act(M.raising[r]), u);
    axpy(F, img, F.neg(M.raising_shift[r]), u);
    if (!is_zero(img)) return false;
  }
  for (std::size_t c = 0; c < M.cartan.size(); ++c) {
    Vec img = mul_vec(M.act(M.cartan[c]), u);
    axpy(F, img, F.neg(mu.values.at(c)), u);
    if (!is_zero(img)) return false;
  }
  return true;
}

InducedHom induced_hom(const VermaFactory& source, const ModuleRep& S, const Weight& mu, const ModuleRep& target,
                       const Vec& u) {
  if (!is_maximal_vector(target, u, mu))
    throw Error(ErrorCode::NotMaximal, "vector is not a homogeneous maximal vector of weight " +
                                           format_weight(target.field(), mu));
  const auto& T = source.tmpl();
  InducedHom out{Matrix(target.field(), target.dim, S.dim), 0};
  for (std::size_t j = 0; j < T.lower_count(); ++j) {
    const Vec col = apply_monomial(target, T.context(), T.lower_monomials()[j], u);
    for (std::size_t i = 0; i < target.dim; ++i) out.map(i, j) = col[i];
  }
  for (std::size_t a = 0; a < S.gens.size(); ++a)
    if (out.map * S.action[a] != target.act(S.gens[a]) * out.map)
      throw Error(ErrorCode::IntertwinerCheckFailed, "map does not commute with " + S.algebra.label(S.gens[a]));
  out.rank = rank(out.map);
  return out;
}

}  // namespace glmn
