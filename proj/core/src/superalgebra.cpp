#include "glmn/superalgebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "glmn/error.hpp"

namespace glmn {

struct SuperAlgebra::Impl {
  int m = 0, n = 0;
  Field field = detail::placeholder_field();
  std::vector<int> parity;
  std::vector<std::vector<Term>> bracket;  // dim*dim
  std::vector<std::vector<Term>> pmap;
};

SuperAlgebra SuperAlgebra::build(int m, int n, const Field& field) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadDims, "gl(m|n) needs m, n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->n = n;
  impl->field = field;
  const int N = m + n, d = N * N;
  impl->parity.resize(d);
  for (int a = 0; a < d; ++a) impl->parity[a] = ((a / N) < m) != ((a % N) < m) ? 1 : 0;

  impl->bracket.resize(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int i = a / N, j = a % N, k = b / N, l = b % N;
      const bool both_odd = impl->parity[a] && impl->parity[b];
      std::map<int, Elem> acc;
      if (j == k) acc[i * N + l] = field.add(acc[i * N + l], field.one());
      if (l == i) {
        const Elem s = both_odd ? field.one() : field.from_int(-1);
        acc[k * N + j] = field.add(acc[k * N + j], s);
      }
      auto& out = impl->bracket[static_cast<std::size_t>(a) * d + b];
      for (auto [idx, c] : acc)
        if (!field.is_zero(c)) out.push_back({idx, c});
    }

  impl->pmap.resize(d);
  for (int a = 0; a < d; ++a)
    if (a / N == a % N) impl->pmap[a].push_back({a, field.one()});
  return SuperAlgebra(std::move(impl));
}

int SuperAlgebra::m() const { return impl_->m; }
int SuperAlgebra::n() const { return impl_->n; }
const Field& SuperAlgebra::field() const { return impl_->field; }
int SuperAlgebra::parity(int idx) const { return impl_->parity[idx]; }

int SuperAlgebra::z_degree(int idx) const {
  const auto [i, j] = unit(idx);
  if (!parity(idx)) return 0;
  return i < m() ? 1 : -1;
}

std::string SuperAlgebra::label(int idx) const {
  const auto [i, j] = unit(idx);
  return "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

const std::vector<Term>& SuperAlgebra::bracket(int a, int b) const {
  return impl_->bracket[static_cast<std::size_t>(a) * dim() + b];
}

AlgElem SuperAlgebra::bracket(const AlgElem& x, const AlgElem& y) const {
  const Field& F = field();
  AlgElem out = zero();
  for (int a = 0; a < dim(); ++a) {
    if (F.is_zero(x[a])) continue;
    for (int b = 0; b < dim(); ++b) {
      if (F.is_zero(y[b])) continue;
      const Elem c = F.mul(x[a], y[b]);
      for (const auto& t : bracket(a, b)) out[t.index] = F.add(out[t.index], F.mul(c, t.coeff));
    }
  }
  return out;
}

const std::vector<Term>& SuperAlgebra::pmap(int a) const {
  if (parity(a)) throw Error(ErrorCode::OddInput, "p-map of odd element " + label(a));
  return impl_->pmap[a];
}

AlgElem SuperAlgebra::unit_vector(int idx) const {
  AlgElem v = zero();
  v[idx] = field().one();
  return v;
}

Matrix SuperAlgebra::to_matrix(const AlgElem& x) const {
  Matrix out(field(), size(), size());
  for (int a = 0; a < dim(); ++a) out(a / size(), a % size()) = x[a];
  return out;
}

AlgElem SuperAlgebra::from_matrix(const Matrix& a) const {
  AlgElem out = zero();
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) out[index(i, j)] = a(i, j);
  return out;
}

int SuperAlgebra::parity_of(const AlgElem& x) const {
  bool even = false, odd = false;
  for (int a = 0; a < dim(); ++a)
    if (!field().is_zero(x[a])) (parity(a) ? odd : even) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

Elem SuperAlgebra::supertrace(const AlgElem& x) const {
  const Field& F = field();
  Elem s = F.zero();
  for (int i = 0; i < size(); ++i) {
    const Elem d = x[index(i, i)];
    s = i < m() ? F.add(s, d) : F.sub(s, d);
  }
  return s;
}

AlgElem SuperAlgebra::p_power(const AlgElem& x) const {
  if (parity_of(x) != 0) throw Error(ErrorCode::OddInput, "p-th power of a non-even element");
  return from_matrix(power(to_matrix(x), field().characteristic()));
}

Matrix SuperAlgebra::ad(const AlgElem& x) const {
  Matrix out(field(), dim(), dim());
  for (int b = 0; b < dim(); ++b) {
    const AlgElem col = bracket(x, unit_vector(b));
    for (int a = 0; a < dim(); ++a) out(a, b) = col[a];
  }
  return out;
}

SuperAlgebra SuperAlgebra::with_field(const Field& target) const {
  if (target == field()) return *this;
  return build(m(), n(), target);
}

std::vector<int> SuperAlgebra::even_basis() const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a)
    if (!parity(a)) out.push_back(a);
  return out;
}

std::vector<int> SuperAlgebra::odd_basis() const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a)
    if (parity(a)) out.push_back(a);
  return out;
}

// ---- Character

Character::Character(const SuperAlgebra& algebra)
    : field_(algebra.field()), size_(algebra.size()), m_(algebra.m()), values_(static_cast<std::size_t>(algebra.dim())) {}

void Character::set(int i, int j, Elem value) {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw Error(ErrorCode::BadDims, "matrix unit out of range");
  const bool odd = (i < m_) != (j < m_);
  if (odd && value.code != 0)
    throw Error(ErrorCode::InvalidSupport, "character value on odd unit E(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ")");
  values_[static_cast<std::size_t>(i * size_ + j)] = value;
}

Elem Character::eval(const AlgElem& x) const {
  Elem s = field_.zero();
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a].code && values_[a].code) s = field_.add(s, field_.mul(x[a], values_[a]));
  return s;
}

Character Character::embed(const FieldEmbedding& e) const {
  Character out = *this;
  for (auto& v : out.values_) v = e(v);
  out.field_ = e.target();
  return out;
}

std::string Character::format() const {
  std::string out;
  for (int a = 0; a < size_ * size_; ++a) {
    if (values_[a].code == 0) continue;
    if (!out.empty()) out += ' ';
    out += "E(" + std::to_string(a / size_ + 1) + "," + std::to_string(a % size_ + 1) + ")=" + field_.format(values_[a]);
  }
  return out.empty() ? "0" : out;
}

// ---- RootSystem

RootSystem::RootSystem(const SuperAlgebra& algebra) : algebra_(algebra) {
  const int N = algebra.size();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) positive_.push_back({i, j});
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](Root a, Root b) { return a.height() != b.height() ? a.height() < b.height() : a < b; });
  for (int i = 0; i + 1 < N; ++i) simple_.push_back({i, i + 1});

  // rho on E(i,i): rho_N = 0, then each simple coroot pins the next coordinate.
  const Field& F = algebra.field();
  rho_.values.assign(N, F.zero());
  for (int i = N - 2; i >= 0; --i) {
    const Elem next = rho_.values[i + 1];
    rho_.values[i] = parity({i, i + 1}) ? F.sub(F.one(), next) : F.add(F.one(), next);
  }
}

std::vector<Root> RootSystem::all() const {
  std::vector<Root> out = positive_;
  for (Root a : positive_) out.push_back(a.negated());
  return out;
}

std::vector<Root> RootSystem::positive_even() const {
  std::vector<Root> out;
  for (Root a : positive_)
    if (!parity(a)) out.push_back(a);
  return out;
}

std::vector<Root> RootSystem::positive_odd() const {
  std::vector<Root> out;
  for (Root a : positive_)
    if (parity(a)) out.push_back(a);
  return out;
}

std::vector<Root> RootSystem::simple_even() const {
  std::vector<Root> out;
  for (Root a : simple_)
    if (!parity(a)) out.push_back(a);
  return out;
}

AlgElem RootSystem::coroot(Root a) const {
  const Field& F = algebra_.field();
  AlgElem h = algebra_.zero();
  // [E(i,j), E(j,i)] = E(i,i) -+ E(j,j)
  h[algebra_.index(a.i, a.i)] = F.one();
  h[algebra_.index(a.j, a.j)] = parity(a) ? F.one() : F.from_int(-1);
  return h;
}

Elem RootSystem::on_coroot(const Weight& w, Root a) const {
  const Field& F = algebra_.field();
  return parity(a) ? F.add(w.values[a.i], w.values[a.j]) : F.sub(w.values[a.i], w.values[a.j]);
}

Elem RootSystem::on_coroot(const Character& chi, Root a) const {
  const Field& F = algebra_.field();
  const Elem x = chi.at(a.i, a.i), y = chi.at(a.j, a.j);
  return parity(a) ? F.add(x, y) : F.sub(x, y);
}

Vec RootSystem::as_functional(Root a) const {
  const Field& F = algebra_.field();
  Vec out(algebra_.size(), F.zero());
  out[a.i] = F.one();
  out[a.j] = F.from_int(-1);
  return out;
}

Root RootSystem::reflect(Root a, Root b) const {
  auto swap = [&](int x) { return x == a.i ? a.j : x == a.j ? a.i : x; };
  return {swap(b.i), swap(b.j)};
}

Weight RootSystem::reflect(Root a, const Weight& w) const {
  if (parity(a)) throw Error(ErrorCode::OddReflectionOnWeight, "odd reflection " + label(a) + " applied to a weight");
  // lambda - lambda(h_a) a, which swaps the two coordinates
  const Field& F = algebra_.field();
  const Elem c = on_coroot(w, a);
  Weight out = w;
  out.values[a.i] = F.sub(w.values[a.i], c);
  out.values[a.j] = F.add(w.values[a.j], c);
  return out;
}

Root RootSystem::apply_word(const std::vector<Root>& word, Root b) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) b = reflect(*it, b);
  return b;
}

std::pair<std::vector<Root>, Root> RootSystem::move_to_simple(Root beta) const {
  if (!parity(beta)) throw Error(ErrorCode::OddInput, "expected an odd root, got " + label(beta));
  const auto gens = simple_even();
  auto is_simple_odd = [&](Root r) { return parity(r) && std::find(simple_.begin(), simple_.end(), r) != simple_.end(); };
  std::map<Root, std::vector<Root>> seen{{beta, {}}};
  std::deque<Root> queue{beta};
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    if (is_simple_odd(r)) return {seen[r], r};
    for (Root s : gens) {
      const Root next = reflect(s, r);
      if (seen.count(next)) continue;
      auto word = seen[r];
      word.insert(word.begin(), s);
      seen[next] = std::move(word);
      queue.push_back(next);
    }
  }
  throw Error(ErrorCode::OrderingStuck, "no even Weyl group element moves " + label(beta) + " to a simple root");
}

std::string RootSystem::label(Root a) const {
  const int m = algebra_.m();
  auto sym = [&](int x) { return x < m ? "e" + std::to_string(x + 1) : "d" + std::to_string(x - m + 1); };
  return sym(a.i) + "-" + sym(a.j);
}

CharacterClass classify_character(const RootSystem& roots, const Character& chi) {
  const SuperAlgebra& A = roots.algebra();
  CharacterClass c;
  bool on_h = false, on_nplus = false, on_nminus = false;
  for (int i = 0; i < A.size(); ++i) on_h |= chi.at(i, i).code != 0;
  for (Root a : roots.positive()) {
    on_nplus |= chi.at(a.i, a.j).code != 0;
    on_nminus |= chi.at(a.j, a.i).code != 0;
  }
  c.semisimple = !on_nplus && !on_nminus;
  c.nplus_vanishing = !on_nplus;
  c.borel_vanishing = !on_nplus && !on_h;
  if (c.borel_vanishing) {
    bool ok = true;
    const auto& simple = roots.simple();
    for (Root a : roots.positive()) {
      if (chi.at(a.j, a.i).code == 0) continue;
      const bool simple_even = !roots.parity(a) && std::find(simple.begin(), simple.end(), a) != simple.end();
      if (simple_even)
        c.levi_set.push_back(a);
      else
        ok = false;
    }
    c.standard_levi = ok;
    if (!ok) c.levi_set.clear();
  }
  return c;
}

bool in_weight_variety(const SuperAlgebra& A, const Character& chi, const Weight& w) {
  const Field& F = A.field();
  if (static_cast<int>(w.values.size()) != A.size()) return false;
  const auto p = F.characteristic();
  for (int i = 0; i < A.size(); ++i) {
    const Elem lhs = F.sub(F.pow(w.values[i], p), w.values[i]);
    if (lhs != F.pow(chi.at(i, i), p)) return false;
  }
  return true;
}

WeightVariety weight_variety(const SuperAlgebra& algebra, const Character& chi) {
  SuperAlgebra A = algebra;
  Character c = chi;
  FieldEmbedding emb = FieldEmbedding::identity(algebra.field());
  for (;;) {
    const Field& F = A.field();
    std::vector<std::vector<Elem>> roots;
    bool missing = false;
    for (int i = 0; i < A.size() && !missing; ++i) {
      roots.push_back(artin_schreier_roots(F, F.pow(c.at(i, i), F.characteristic())));
      missing = roots.back().empty();
    }
    if (missing) {
      const Field bigger = Field::make(F.characteristic(), F.degree() * F.characteristic());
      const FieldEmbedding step = FieldEmbedding::find(F, bigger);
      // compose the embeddings through the generator image
      emb = FieldEmbedding(algebra.field(), bigger, step(emb(algebra.field().generator())));
      c = c.embed(step);
      A = A.with_field(bigger);
      continue;
    }
    WeightVariety out{A, c, emb, roots, {}};
    std::vector<std::size_t> idx(A.size(), 0);
    for (;;) {
      Weight w;
      for (int i = 0; i < A.size(); ++i) w.values.push_back(roots[i][idx[i]]);
      out.weights.push_back(std::move(w));
      int pos = A.size() - 1;
      while (pos >= 0 && ++idx[pos] == roots[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
    return out;
  }
}

Weight make_weight(const Field& field, const std::vector<std::int64_t>& coords) {
  Weight w;
  for (auto c : coords) w.values.push_back(field.from_int(c));
  return w;
}

std::string format_weight(const Field& field, const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (i) out += ",";
    out += field.format(w.values[i]);
  }
  return out + ")";
}

}  // namespace glmn
