#include "glmn/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "glmn/error.hpp"

namespace glmn {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (stream * 0xd1b54a32d192ed03ull);
  return splitmix64(s);
}

Vec random_vector(const Field& F, std::size_t n, std::uint64_t& state) {
  Vec v(n);
  for (auto& x : v) x = F.from_code(splitmix64(state) % F.order());
  return v;
}

namespace {

// Columns of `basis` span K; returns vectors of K killed by X - shift.
std::vector<Vec> restrict_kernel(const Field& F, const std::vector<Vec>& basis, const Matrix& X, Elem shift) {
  if (basis.empty()) return {};
  const std::size_t d = X.rows(), k = basis.size();
  Matrix Y(F, d, k);
  for (std::size_t c = 0; c < k; ++c) {
    Vec img = mul_vec(X, basis[c]);
    if (shift.code) axpy(F, img, F.neg(shift), basis[c]);
    for (std::size_t r = 0; r < d; ++r) Y(r, c) = img[r];
  }
  const Subspace ker = kernel_basis(Y);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec v(d);
    for (std::size_t c = 0; c < k; ++c) {
      const Elem coef = ker.basis()(i, c);
      if (coef.code) axpy(F, v, coef, basis[c]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Vec combine(const Field& F, const Subspace& s, const Vec& coeffs) {
  Vec v(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (coeffs[i].code) axpy(F, v, coeffs[i], s.basis().row(i));
  return v;
}

}  // namespace

LineWalk walk_lines(const Subspace& s, const Sampling& cfg, std::uint64_t& state,
                    const std::function<bool(const Vec&)>& visit) {
  const Field& F = s.field();
  const std::size_t d = s.dim();
  LineWalk out;
  if (d == 0) return out;
  const std::uint64_t q = F.order();
  // (q^d - 1)/(q - 1) = 1 + q + ... + q^{d-1}, saturating at the budget
  std::uint64_t lines = 0, pw = 1;
  bool over = false;
  for (std::size_t i = 0; i < d; ++i) {
    lines += pw;
    if (lines > cfg.line_budget) {
      over = true;
      break;
    }
    if (i + 1 < d && pw > cfg.line_budget / q + 1) {
      over = true;
      break;
    }
    pw *= q;
  }
  if (over) {
    out.probabilistic = true;
    for (std::uint64_t t = 0; t < cfg.samples; ++t) {
      Vec c = random_vector(F, d, state);
      if (is_zero(c)) c[0] = F.one();
      ++out.checked;
      if (visit(combine(F, s, c))) return out;
    }
    return out;
  }
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t free = d - 1 - lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec c(d);
      c[lead] = F.one();
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < free; ++i) {
        c[lead + 1 + i] = F.from_code(t % q);
        t /= q;
      }
      ++out.checked;
      if (visit(combine(F, s, c))) return out;
    }
  }
  return out;
}

std::vector<MaximalSpace> maximal_vectors(const ModuleRep& M) {
  const Field& F = M.field();
  std::vector<MaximalSpace> out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Vec> basis;
    for (auto c : M.coords_of_parity(parity)) basis.push_back(M.basis_vector(c));
    for (std::size_t r = 0; r < M.raising.size() && !basis.empty(); ++r)
      basis = restrict_kernel(F, basis, M.act(M.raising[r]), M.raising_shift[r]);
    if (basis.empty()) continue;

    struct Piece {
      Vec weight;
      std::vector<Vec> basis;
    };
    std::vector<Piece> pieces{{Vec{}, basis}};
    for (int h : M.cartan) {
      const auto candidates = artin_schreier_roots(F, F.pow(M.chi.at(h), F.characteristic()));
      std::vector<Piece> next;
      for (auto& piece : pieces) {
        std::size_t covered = 0;
        for (Elem c : candidates) {
          auto sub = restrict_kernel(F, piece.basis, M.act(h), c);
          if (sub.empty()) continue;
          covered += sub.size();
          Vec w = piece.weight;
          w.push_back(c);
          next.push_back({std::move(w), std::move(sub)});
        }
        if (covered != piece.basis.size())
          throw Error(ErrorCode::EigenvaluesOutsideField,
                      M.algebra.label(h) + " has eigenvalues outside " + std::to_string(F.order()) + "-element field");
      }
      pieces = std::move(next);
    }
    for (auto& piece : pieces)
      out.push_back({Weight{piece.weight}, Subspace::span(F, M.dim, piece.basis), parity});
  }
  return out;
}

GradedSubmodule spin(const ModuleRep& M, const Vec& w) {
  if (is_zero(w)) throw Error(ErrorCode::ZeroVector, "cannot spin the zero vector");
  const auto [even, odd] = M.split(w);
  EchelonBuilder B(M.field(), M.dim);
  std::deque<Vec> queue;
  for (const Vec* part : {&even, &odd})
    if (!is_zero(*part) && B.insert(*part)) queue.push_back(*part);
  while (!queue.empty() && B.dim() < M.dim) {
    const Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& X : M.action) {
      Vec y = mul_vec(X, v);
      if (B.insert(y)) queue.push_back(std::move(y));
      if (B.dim() == M.dim) break;
    }
  }
  if (B.dim() == M.dim) {
    GradedSubmodule full{Subspace::full(M.field(), M.dim), 0, 0};
    for (auto p : M.parity) (p ? full.odd_dim : full.even_dim)++;
    return full;
  }
  return make_graded(M, B.subspace());
}

SimplicityVerdict is_simple(const ModuleRep& M, const Sampling& cfg) {
  SimplicityVerdict v;
  if (M.dim == 0) return v;
  std::uint64_t state = derive_seed(cfg.seed, 0x51);
  for (const auto& sp : maximal_vectors(M)) {
    const auto walk = walk_lines(sp.space, cfg, state, [&](const Vec& w) {
      if (spin(M, w).dim() == M.dim) return false;
      v.witness = w;
      v.witness_weight = sp.weight;
      v.witness_parity = sp.parity;
      return true;
    });
    v.lines_checked += walk.checked;
    v.probabilistic |= walk.probabilistic;
    if (v.witness) return v;
  }
  v.simple = true;
  return v;
}

SimpleHead simple_head(const ModuleRep& M, const Sampling& cfg) {
  const Field& F = M.field();
  Subspace R(F, M.dim);
  std::uint64_t state = derive_seed(cfg.seed, 0x4ead);
  SimpleHead out{make_graded(M, R), M, false, {}};
  for (;;) {
    ModuleRep Q = R.dim() == 0 ? M : quotient(M, R);
    if (Q.dim == 0) throw Error(ErrorCode::NoMaximalVector, "zero module has no simple head");
    const auto spaces = maximal_vectors(Q);
    if (spaces.empty()) throw Error(ErrorCode::NoMaximalVector, "module without maximal vectors");
    std::optional<GradedSubmodule> proper;
    for (const auto& sp : spaces) {
      const auto walk = walk_lines(sp.space, cfg, state, [&](const Vec& w) {
        auto s = spin(Q, w);
        if (s.dim() == Q.dim) return false;
        proper = std::move(s);
        return true;
      });
      out.probabilistic |= walk.probabilistic;
      if (proper) break;
    }
    if (!proper) {
      out.radical = make_graded(M, R);
      out.head = std::move(Q);
      return out;
    }
    auto vecs = R.vectors();
    for (const auto& s : proper->space.vectors()) vecs.push_back(lift_from_quotient(R, M.dim, s));
    R = Subspace::span(F, M.dim, vecs);
    out.absorbed.push_back(R);
  }
}

std::vector<std::string> fingerprint(const ModuleRep& M) {
  std::vector<std::string> out;
  for (const auto& sp : maximal_vectors(M))
    out.push_back(format_weight(M.field(), sp.weight) + " dim " + std::to_string(sp.space.dim()) + " parity " +
                  std::to_string(sp.parity));
  std::sort(out.begin(), out.end());
  return out;
}

CompositionSeries composition_series(const ModuleRep& M, const Sampling& cfg) {
  const Field& F = M.field();
  CompositionSeries out;
  Subspace current = Subspace::full(F, M.dim);
  for (;;) {
    out.chain.push_back(current);
    if (current.dim() == 0) break;
    const ModuleRep sub = current.dim() == M.dim ? M : submodule(M, current);
    Sampling step = cfg;
    step.seed = derive_seed(cfg.seed, out.chain.size());
    auto head = simple_head(sub, step);
    out.probabilistic |= head.probabilistic;
    out.factors.push_back({head.head.dim, fingerprint(head.head)});
    // radical back in M coordinates
    std::vector<Vec> vecs;
    const auto basis = current.vectors();
    for (const auto& r : head.radical.space.vectors()) {
      Vec v(M.dim);
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].code) axpy(F, v, r[i], basis[i]);
      vecs.push_back(std::move(v));
    }
    current = vecs.empty() ? Subspace(F, M.dim) : Subspace::span(F, M.dim, vecs);
  }
  return out;
}

void require_subalgebra(const SuperAlgebra& A, const std::vector<int>& sub) {
  for (int a : sub)
    for (int b : sub)
      for (const auto& t : A.bracket(a, b))
        if (std::find(sub.begin(), sub.end(), t.index) == sub.end())
          throw Error(ErrorCode::NotClosed, "[" + A.label(a) + "," + A.label(b) + "] leaves the span");
}

ModuleRep regular_module(const ReductionContext& ctx, const std::vector<int>& sub_in, Side side) {
  std::vector<int> sub = sub_in;
  std::sort(sub.begin(), sub.end());
  const SuperAlgebra& A = ctx.algebra();
  require_subalgebra(A, sub);
  const Field& F = ctx.field();
  const auto basis = ctx.admissible_monomials(sub);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  ModuleRep M(A, ctx.chi());
  M.dim = basis.size();
  M.gens = sub;
  for (const auto& b : basis) {
    M.parity.push_back(static_cast<std::uint8_t>(ctx.parity(b)));
    M.labels.push_back(ctx.format(b));
  }
  for (int x : sub) {
    Matrix X(F, M.dim, M.dim);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const PBWElement img = side == Side::Left ? ctx.left_mul_gen(x, basis[j]) : ctx.mul_gen(basis[j], x);
      for (const auto& [m, c] : img.terms) {
        auto it = index.find(m);
        if (it == index.end()) throw Error(ErrorCode::NotClosed, "product leaves u(sub): " + ctx.format(m));
        X(it->second, j) = c;
      }
    }
    M.action.push_back(std::move(X));
    M.raising.push_back(x);
    M.raising_shift.push_back(A.is_even(x) ? ctx.chi().at(x) : F.zero());
  }
  return M;
}

Subspace trivial_submodules(const ModuleRep& M) {
  const Field& F = M.field();
  if (M.raising.empty()) return Subspace::full(F, M.dim);
  std::vector<Matrix> ms;
  for (std::size_t r = 0; r < M.raising.size(); ++r) {
    const auto& s = M.raising_shift[r];
    ms.push_back(s.code ? M.act(M.raising[r]) - scale(Matrix::identity(F, M.dim), s) : M.act(M.raising[r]));
  }
  return joint_kernel(ms);
}

PBWElement element_from_coords(const ReductionContext& ctx, const std::vector<Monomial>& basis, const Vec& v) {
  PBWElement out;
  for (std::size_t i = 0; i < basis.size(); ++i) ctx.add_into(out, basis[i], v[i]);
  return out;
}

GramResult frobenius_gram(const ReductionContext& ctx, const std::vector<int>& sub_in, std::uint64_t dim_budget,
                          FrobeniusForm form) {
  std::vector<int> sub = sub_in;
  std::sort(sub.begin(), sub.end());
  require_subalgebra(ctx.algebra(), sub);
  const std::uint64_t n = ctx.admissible_count(sub);
  if (n > dim_budget)
    throw Error(ErrorCode::DimensionBudgetExceeded,
                "u(sub) has dimension " + std::to_string(n) + " > budget " + std::to_string(dim_budget));
  const auto basis = ctx.admissible_monomials(sub);
  const Field& F = ctx.field();
  Monomial target = ctx.one_monomial();
  if (form == FrobeniusForm::TopCoefficient)
    for (int g : sub)
      target.exps[ctx.position(g)] = static_cast<std::uint16_t>(ctx.algebra().parity(g) ? 1 : F.characteristic() - 1);
  GramResult out{Matrix(F, basis.size(), basis.size()), false};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const PBWElement a = ctx.monomial(basis[i], F.one());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const PBWElement ab = ctx.multiply(a, ctx.monomial(basis[j], F.one()));
      auto it = ab.terms.find(target);
      if (it != ab.terms.end()) out.gram(i, j) = it->second;
    }
  }
  out.nondegenerate = rank(out.gram) == basis.size();
  return out;
}

}  // namespace glmn
