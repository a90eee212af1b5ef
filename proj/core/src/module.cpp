#include "glmn/module.hpp"

#include <algorithm>

#include "glmn/error.hpp"

namespace glmn {

bool ModuleRep::acts(int basis_index) const {
  return std::find(gens.begin(), gens.end(), basis_index) != gens.end();
}

const Matrix& ModuleRep::act(int basis_index) const {
  auto it = std::find(gens.begin(), gens.end(), basis_index);
  if (it == gens.end()) throw Error(ErrorCode::BadDims, algebra.label(basis_index) + " does not act on this module");
  return action[static_cast<std::size_t>(it - gens.begin())];
}

void ModuleRep::default_frame() {
  raising.clear();
  raising_shift.clear();
  cartan.clear();
  for (int g : gens) {
    const auto [i, j] = algebra.unit(g);
    if (i < j) {
      raising.push_back(g);
      raising_shift.push_back(field().zero());
    } else if (i == j) {
      cartan.push_back(g);
    }
  }
}

std::vector<std::size_t> ModuleRep::coords_of_parity(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (parity[i] == p) out.push_back(i);
  return out;
}

Vec ModuleRep::basis_vector(std::size_t i) const {
  Vec v(dim);
  v[i] = field().one();
  return v;
}

int ModuleRep::parity_of(const Vec& v) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < dim; ++i)
    if (v[i].code) (parity[i] ? odd : even) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

std::pair<Vec, Vec> ModuleRep::split(const Vec& v) const {
  Vec e(dim), o(dim);
  for (std::size_t i = 0; i < dim; ++i) (parity[i] ? o : e)[i] = v[i];
  return {e, o};
}

ModuleCheck verify_module(const ModuleRep& M) {
  ModuleCheck out;
  const Field& F = M.field();
  const SuperAlgebra& A = M.algebra;
  auto action_of = [&](const std::vector<Term>& terms) -> std::optional<Matrix> {
    Matrix acc(F, M.dim, M.dim);
    for (const auto& t : terms) {
      if (!M.acts(t.index)) return std::nullopt;
      acc = acc + scale(M.act(t.index), t.coeff);
    }
    return acc;
  };

  for (std::size_t a = 0; a < M.gens.size(); ++a) {
    const int x = M.gens[a];
    const Matrix& X = M.action[a];
    // parity blocks
    ++out.parity_checks;
    for (std::size_t i = 0; i < M.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j)
        if (X(i, j).code && (M.parity[i] ^ M.parity[j]) != A.parity(x)) {
          out.failures.push_back(A.label(x) + " does not respect the grading");
          i = M.dim;
          break;
        }
    for (std::size_t b = 0; b < M.gens.size(); ++b) {
      const int y = M.gens[b];
      const auto rhs = action_of(A.bracket(x, y));
      if (!rhs) continue;
      ++out.bracket_pairs;
      const bool anti = A.parity(x) && A.parity(y);
      if (commutator(X, M.action[b], anti) != *rhs)
        out.failures.push_back("bracket relation fails for [" + A.label(x) + "," + A.label(y) + "]");
    }
    if (!A.parity(x)) {
      const auto xp = action_of(A.pmap(x));
      if (!xp) continue;
      ++out.p_relations;
      const Elem c = F.pow(M.chi.at(x), F.characteristic());
      if (power(X, F.characteristic()) - *xp != scale(Matrix::identity(F, M.dim), c))
        out.failures.push_back("p-relation fails for " + A.label(x));
    }
  }
  return out;
}

GradedSubmodule make_graded(const ModuleRep& M, Subspace s) {
  GradedSubmodule g{std::move(s), 0, 0};
  for (std::size_t i = 0; i < g.space.dim(); ++i) {
    const int p = M.parity_of(g.space.vector(i));
    if (p < 0) throw Error(ErrorCode::MixedParity, "subspace is not graded");
    (p ? g.odd_dim : g.even_dim)++;
  }
  return g;
}

ModuleRep submodule(const ModuleRep& M, const Subspace& s) {
  ModuleRep out(M.algebra, M.chi);
  out.dim = s.dim();
  out.gens = M.gens;
  const auto basis = s.vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const int p = M.parity_of(basis[i]);
    if (p < 0) throw Error(ErrorCode::MixedParity, "submodule basis is not homogeneous");
    out.parity.push_back(static_cast<std::uint8_t>(p));
    out.labels.push_back("w" + std::to_string(i));
  }
  for (const auto& X : M.action) {
    Matrix Y(M.field(), out.dim, out.dim);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Vec img = mul_vec(X, basis[j]);
      if (!s.contains(img)) throw Error(ErrorCode::NotClosed, "subspace is not a submodule");
      const Vec c = s.coordinates(img);
      for (std::size_t i = 0; i < out.dim; ++i) Y(i, j) = c[i];
    }
    out.action.push_back(std::move(Y));
  }
  out.raising = M.raising;
  out.raising_shift = M.raising_shift;
  out.cartan = M.cartan;
  return out;
}

namespace {
std::vector<std::size_t> free_coords(const Subspace& r, std::size_t ambient) {
  std::vector<bool> piv(ambient, false);
  for (auto c : r.pivots()) piv[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient; ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}
}  // namespace

Vec project_to_quotient(const Subspace& r, const Vec& v) {
  const Vec red = r.reduce(v);
  const auto fc = free_coords(r, v.size());
  Vec out(fc.size());
  for (std::size_t i = 0; i < fc.size(); ++i) out[i] = red[fc[i]];
  return out;
}

Vec lift_from_quotient(const Subspace& r, std::size_t ambient, const Vec& q) {
  const auto fc = free_coords(r, ambient);
  Vec out(ambient);
  for (std::size_t i = 0; i < fc.size(); ++i) out[fc[i]] = q[i];
  return out;
}

ModuleRep quotient(const ModuleRep& M, const Subspace& r) {
  ModuleRep out(M.algebra, M.chi);
  const auto fc = free_coords(r, M.dim);
  out.dim = fc.size();
  out.gens = M.gens;
  for (auto c : fc) {
    out.parity.push_back(M.parity[c]);
    out.labels.push_back(c < M.labels.size() ? M.labels[c] : "b" + std::to_string(c));
  }
  for (const auto& X : M.action) {
    Matrix Y(M.field(), out.dim, out.dim);
    for (std::size_t j = 0; j < fc.size(); ++j) {
      const Vec img = r.reduce(X.column(fc[j]));
      for (std::size_t i = 0; i < fc.size(); ++i) Y(i, j) = img[fc[i]];
    }
    out.action.push_back(std::move(Y));
  }
  out.raising = M.raising;
  out.raising_shift = M.raising_shift;
  out.cartan = M.cartan;
  return out;
}

ModuleRep twist_module(const ModuleRep& M, const Matrix& g) {
  const SuperAlgebra& A = M.algebra;
  const auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorCode::SingularG, "twisting matrix is singular");
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      if ((i < A.m()) != (j < A.m()) && g(i, j).code)
        throw Error(ErrorCode::SingularG, "twisting matrix must be block diagonal");
  ModuleRep out(A, M.chi);
  Character chi(A);
  const Field& F = A.field();
  out.dim = M.dim;
  out.parity = M.parity;
  out.labels = M.labels;
  out.gens = M.gens;
  for (int x : M.gens) {
    const AlgElem y = A.from_matrix(*ginv * A.to_matrix(A.unit_vector(x)) * g);
    Matrix acc(F, M.dim, M.dim);
    for (int b = 0; b < A.dim(); ++b)
      if (y[b].code) acc = acc + scale(M.act(b), y[b]);
    out.action.push_back(std::move(acc));
    if (A.is_even(x)) {
      const auto [i, j] = A.unit(x);
      chi.set(i, j, M.chi.eval(y));
    }
  }
  out.chi = chi;
  out.default_frame();
  return out;
}

// ---- induction

std::vector<int> order_with_first(const RootSystem& roots, const std::vector<int>& first) {
  const auto def = ReductionContext::default_order(roots);
  std::vector<int> out;
  for (int g : def)
    if (std::find(first.begin(), first.end(), g) != first.end()) out.push_back(g);
  for (int g : def)
    if (std::find(first.begin(), first.end(), g) == first.end()) out.push_back(g);
  return out;
}

InductionTemplate::InductionTemplate(std::shared_ptr<const ReductionContext> ctx, std::vector<int> lower,
                                     std::vector<int> upper, std::vector<int> acting)
    : ctx_(std::move(ctx)), lower_(std::move(lower)), upper_(std::move(upper)), acting_(std::move(acting)) {
  const ReductionContext& C = *ctx_;
  int max_lower = -1, min_upper = C.size();
  for (int g : lower_) max_lower = std::max(max_lower, C.position(g));
  for (int g : upper_) min_upper = std::min(min_upper, C.position(g));
  if (max_lower > min_upper) throw Error(ErrorCode::BadDims, "ordering must place lower generators first");
  std::vector<int> role(C.size(), 0);  // 1 lower, 2 upper
  for (int g : lower_) role[C.position(g)] = 1;
  for (int g : upper_) role[C.position(g)] = 2;

  lower_monomials_ = C.admissible_monomials(lower_);
  for (std::size_t i = 0; i < lower_monomials_.size(); ++i) lower_index_[lower_monomials_[i]] = i;

  std::map<Monomial, std::size_t> tail_index;
  entries_.resize(acting_.size());
  for (std::size_t a = 0; a < acting_.size(); ++a) {
    entries_[a].resize(lower_monomials_.size());
    for (std::size_t j = 0; j < lower_monomials_.size(); ++j) {
      const PBWElement prod = C.left_mul_gen(acting_[a], lower_monomials_[j]);
      for (const auto& [mono, c] : prod.terms) {
        Monomial head = C.one_monomial(), tail = C.one_monomial();
        for (int pos = 0; pos < C.size(); ++pos) {
          if (!mono.exps[pos]) continue;
          if (role[pos] == 1)
            head.exps[pos] = mono.exps[pos];
          else if (role[pos] == 2)
            tail.exps[pos] = mono.exps[pos];
          else
            throw Error(ErrorCode::NotClosed, "product leaves the induced subalgebra at " +
                                                  C.algebra().label(C.generator(pos)));
        }
        auto [it, fresh] = tail_index.try_emplace(tail, tails_.size());
        if (fresh) tails_.push_back(tail);
        entries_[a][j].push_back({lower_index_.at(head), c, it->second});
      }
    }
  }
}

ModuleRep InductionTemplate::induce(const ModuleRep& M) const {
  const ReductionContext& C = *ctx_;
  const Field& F = M.field();
  if (!(F == C.field())) throw Error(ErrorCode::FieldMismatch, "module and template fields differ");
  const std::size_t dm = M.dim;

  // tails act on M right to left: t = p1^a1 ... pk^ak
  std::vector<Matrix> tail_mats;
  tail_mats.reserve(tails_.size());
  for (const auto& t : tails_) {
    Matrix acc = Matrix::identity(F, dm);
    for (int pos = 0; pos < C.size(); ++pos)
      for (unsigned k = 0; k < t.exps[pos]; ++k) acc = acc * M.act(C.generator(pos));
    tail_mats.push_back(std::move(acc));
  }

  ModuleRep out(C.algebra(), C.chi());
  out.dim = lower_monomials_.size() * dm;
  out.gens = acting_;
  for (std::size_t j = 0; j < lower_monomials_.size(); ++j)
    for (std::size_t s = 0; s < dm; ++s) {
      out.parity.push_back(static_cast<std::uint8_t>(C.parity(lower_monomials_[j]) ^ M.parity[s]));
      const std::string tag = dm == 1 ? "v" : (s < M.labels.size() ? M.labels[s] : "m" + std::to_string(s));
      out.labels.push_back(C.format(lower_monomials_[j]) + " " + tag);
    }
  for (std::size_t a = 0; a < acting_.size(); ++a) {
    Matrix X(F, out.dim, out.dim);
    for (std::size_t j = 0; j < lower_monomials_.size(); ++j)
      for (const auto& e : entries_[a][j]) {
        const Matrix& T = tail_mats[e.tail];
        for (std::size_t r = 0; r < dm; ++r)
          for (std::size_t s = 0; s < dm; ++s) {
            const Elem t = T(r, s);
            if (!t.code) continue;
            Elem& dst = X(e.row * dm + r, j * dm + s);
            dst = F.add(dst, F.mul(e.coeff, t));
          }
      }
    out.action.push_back(std::move(X));
  }
  out.default_frame();
  return out;
}

}  // namespace glmn
