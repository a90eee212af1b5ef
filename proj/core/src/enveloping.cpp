#include "glmn/enveloping.hpp"

#include <mutex>
#include <unordered_map>

#include "glmn/error.hpp"

namespace glmn {

bool Monomial::is_one() const {
  for (auto e : exps)
    if (e) return false;
  return true;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

namespace {

struct MemoKey {
  std::vector<std::uint16_t> exps;
  int pos;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.pos) * 0x9e3779b97f4a7c15ull;
    for (auto e : k.exps) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

struct ReductionContext::Memo {
  mutable std::mutex mu;
  std::unordered_map<MemoKey, PBWElement, MemoHash> table;
};

std::vector<int> ReductionContext::default_order(const RootSystem& roots) {
  const SuperAlgebra& A = roots.algebra();
  std::vector<int> order;
  for (Root a : roots.positive()) order.push_back(A.index(a.j, a.i));
  for (int i = 0; i < A.size(); ++i) order.push_back(A.index(i, i));
  for (Root a : roots.positive()) order.push_back(A.index(a.i, a.j));
  return order;
}

ReductionContext::ReductionContext(const SuperAlgebra& algebra, const Character& chi, std::optional<std::vector<int>> order)
    : algebra_(algebra), roots_(algebra), chi_(chi), memo_(std::make_unique<Memo>()) {
  const Field& F = algebra.field();
  if (F.characteristic() >= 65536) throw Error(ErrorCode::FieldTooLarge, "PBW exponents need p < 65536");
  if (!(chi.field() == F)) throw Error(ErrorCode::FieldMismatch, "character and algebra live over different fields");
  order_ = order ? *order : default_order(roots_);
  if (static_cast<int>(order_.size()) != algebra.dim()) throw Error(ErrorCode::BadDims, "generator order must list every basis element");
  position_.assign(algebra.dim(), -1);
  for (int pos = 0; pos < size(); ++pos) {
    const int g = order_[pos];
    if (g < 0 || g >= algebra.dim() || position_[g] != -1) throw Error(ErrorCode::BadDims, "generator order is not a permutation");
    position_[g] = pos;
  }
  chi_p_.resize(algebra.dim());
  for (int a = 0; a < algebra.dim(); ++a) chi_p_[a] = F.pow(chi.at(a), F.characteristic());
  half_ = F.inv(F.from_int(2));
}

ReductionContext::~ReductionContext() = default;

PBWElement ReductionContext::one() const { return scalar(field().one()); }

PBWElement ReductionContext::scalar(Elem c) const { return monomial(one_monomial(), c); }

PBWElement ReductionContext::monomial(const Monomial& m, Elem c) const {
  PBWElement out;
  if (!field().is_zero(c)) out.terms.emplace(m, c);
  return out;
}

PBWElement ReductionContext::generator_element(int basis_index) const {
  Monomial m = one_monomial();
  m.exps[position_[basis_index]] = 1;
  return monomial(m, field().one());
}

PBWElement ReductionContext::embed(const AlgElem& x) const {
  PBWElement out;
  for (int a = 0; a < algebra_.dim(); ++a)
    if (!field().is_zero(x[a])) add_into(out, generator_element(a), x[a]);
  return out;
}

void ReductionContext::add_into(PBWElement& acc, const Monomial& m, Elem c) const {
  if (field().is_zero(c)) return;
  auto [it, inserted] = acc.terms.try_emplace(m, c);
  if (inserted) return;
  it->second = field().add(it->second, c);
  if (field().is_zero(it->second)) acc.terms.erase(it);
}

void ReductionContext::add_into(PBWElement& acc, const PBWElement& x, Elem c) const {
  if (field().is_zero(c)) return;
  for (const auto& [m, v] : x.terms) add_into(acc, m, field().mul(v, c));
}

PBWElement ReductionContext::add(const PBWElement& a, const PBWElement& b) const {
  PBWElement out = a;
  add_into(out, b, field().one());
  return out;
}

PBWElement ReductionContext::sub(const PBWElement& a, const PBWElement& b) const {
  PBWElement out = a;
  add_into(out, b, field().from_int(-1));
  return out;
}

PBWElement ReductionContext::scale(const PBWElement& a, Elem c) const {
  PBWElement out;
  add_into(out, a, c);
  return out;
}

std::vector<int> ReductionContext::word(const Monomial& m) const {
  std::vector<int> out;
  for (int pos = 0; pos < size(); ++pos)
    for (unsigned k = 0; k < m.exps[pos]; ++k) out.push_back(order_[pos]);
  return out;
}

PBWElement ReductionContext::mul_gen(const Monomial& m, int basis_index) const {
  const int pos = position_[basis_index];
  MemoKey key{m.exps, pos};
  {
    std::lock_guard lock(memo_->mu);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;
  }
  PBWElement result = compute_mul_gen(m, pos);
  std::lock_guard lock(memo_->mu);
  memo_->table.emplace(std::move(key), result);
  return result;
}

PBWElement ReductionContext::mul_gen(const PBWElement& a, int basis_index) const {
  PBWElement out;
  for (const auto& [m, c] : a.terms) add_into(out, mul_gen(m, basis_index), c);
  return out;
}

PBWElement ReductionContext::compute_mul_gen(const Monomial& m, int px) const {
  const Field& F = field();
  const int x = order_[px];
  int py = size() - 1;
  while (py >= 0 && m.exps[py] == 0) --py;

  if (py < px) {
    Monomial out = m;
    out.exps[px] = 1;
    return monomial(out, F.one());
  }

  if (py == px) {
    const unsigned a = m.exps[px];
    Monomial rest = m;
    rest.exps[px] = 0;
    if (algebra_.parity(x)) {
      // x^2 = [x,x]/2
      PBWElement out;
      for (const auto& t : algebra_.bracket(x, x)) add_into(out, mul_gen(rest, t.index), F.mul(half_, t.coeff));
      return out;
    }
    if (a + 1 < F.characteristic()) {
      Monomial out = m;
      out.exps[px] = static_cast<std::uint16_t>(a + 1);
      return monomial(out, F.one());
    }
    // x^p = x^[p] + chi(x)^p
    PBWElement out = monomial(rest, chi_p_[x]);
    for (const auto& t : algebra_.pmap(x)) add_into(out, mul_gen(rest, t.index), t.coeff);
    return out;
  }

  // m = m0 y^a with y > x:  y^a x = s^a x y^a + sum_k s^k y^(a-1-k) [y,x] y^k
  const int y = order_[py];
  const unsigned a = m.exps[py];
  const bool negative_sign = algebra_.parity(x) && algebra_.parity(y);
  const Elem s = negative_sign ? F.from_int(-1) : F.one();
  Monomial m0 = m;
  m0.exps[py] = 0;

  PBWElement out;
  {
    PBWElement t = mul_gen(m0, x);
    for (unsigned k = 0; k < a; ++k) t = mul_gen(t, y);
    add_into(out, t, F.pow(s, a));
  }
  const auto& br = algebra_.bracket(y, x);
  if (!br.empty()) {
    for (unsigned k = 0; k < a; ++k) {
      Monomial head = m0;
      head.exps[py] = static_cast<std::uint16_t>(a - 1 - k);
      PBWElement t;
      for (const auto& term : br) add_into(t, mul_gen(head, term.index), term.coeff);
      for (unsigned r = 0; r < k; ++r) t = mul_gen(t, y);
      add_into(out, t, F.pow(s, k));
    }
  }
  return out;
}

PBWElement ReductionContext::left_mul_gen(int basis_index, const Monomial& m) const {
  PBWElement acc = generator_element(basis_index);
  for (int g : word(m)) acc = mul_gen(acc, g);
  return acc;
}

PBWElement ReductionContext::normalize(const std::vector<int>& w, Elem c) const {
  PBWElement acc = scalar(c);
  for (int g : w) acc = mul_gen(acc, g);
  return acc;
}

PBWElement ReductionContext::multiply(const PBWElement& a, const PBWElement& b) const {
  PBWElement out;
  for (const auto& [mb, cb] : b.terms) {
    const auto w = word(mb);
    PBWElement t = a;
    for (int g : w) t = mul_gen(t, g);
    add_into(out, t, cb);
  }
  return out;
}

int ReductionContext::parity(const Monomial& m) const {
  unsigned s = 0;
  for (int pos = 0; pos < size(); ++pos)
    if (algebra_.parity(order_[pos])) s += m.exps[pos];
  return static_cast<int>(s & 1u);
}

int ReductionContext::parity(const PBWElement& u) const {
  bool even = false, odd = false;
  for (const auto& [m, c] : u.terms) (parity(m) ? odd : even) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

Vec ReductionContext::weight(const Monomial& m) const {
  const Field& F = field();
  Vec w(algebra_.size(), F.zero());
  for (int pos = 0; pos < size(); ++pos) {
    if (!m.exps[pos]) continue;
    const auto [i, j] = algebra_.unit(order_[pos]);
    if (i == j) continue;
    const Elem e = F.from_int(m.exps[pos]);
    w[i] = F.add(w[i], e);
    w[j] = F.sub(w[j], e);
  }
  return w;
}

PBWElement ReductionContext::ad_action(const AlgElem& a, const PBWElement& u) const {
  const int pa = algebra_.parity_of(a);
  const int pu = parity(u);
  if (pa < 0 || pu < 0) throw Error(ErrorCode::MixedParity, "ad action needs homogeneous arguments");
  const PBWElement x = embed(a);
  PBWElement out = multiply(x, u);
  add_into(out, multiply(u, x), (pa && pu) ? field().one() : field().from_int(-1));
  return out;
}

PBWElement ReductionContext::ad_action_leibniz(const AlgElem& a, const PBWElement& u) const {
  const int pa = algebra_.parity_of(a);
  if (pa < 0 || parity(u) < 0) throw Error(ErrorCode::MixedParity, "ad action needs homogeneous arguments");
  const Field& F = field();
  PBWElement out;
  for (const auto& [m, c] : u.terms) {
    const auto w = word(m);
    int prefix_parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const AlgElem br = algebra_.bracket(a, algebra_.unit_vector(w[i]));
      if (!is_zero(br)) {
        PBWElement t = scalar((pa && prefix_parity) ? F.from_int(-1) : F.one());
        for (std::size_t j = 0; j < i; ++j) t = mul_gen(t, w[j]);
        t = multiply(t, embed(br));
        for (std::size_t j = i + 1; j < w.size(); ++j) t = mul_gen(t, w[j]);
        add_into(out, t, c);
      }
      prefix_parity ^= algebra_.parity(w[i]);
    }
  }
  return out;
}

PBWElement ReductionContext::hc_gamma(const PBWElement& u) const {
  PBWElement out;
  for (const auto& [m, c] : u.terms) {
    if (!is_zero(weight(m))) throw Error(ErrorCode::NotWeightZero, "term " + format(m) + " has nonzero weight");
    bool cartan = true;
    for (int pos = 0; pos < size() && cartan; ++pos)
      if (m.exps[pos] && !algebra_.is_diagonal(order_[pos])) cartan = false;
    if (cartan) out.terms.emplace(m, c);
  }
  return out;
}

Elem ReductionContext::evaluate_cartan(const PBWElement& u, const Weight& w) const {
  const Field& F = field();
  Elem acc = F.zero();
  for (const auto& [m, c] : u.terms) {
    Elem t = c;
    for (int pos = 0; pos < size(); ++pos) {
      if (!m.exps[pos]) continue;
      const int g = order_[pos];
      if (!algebra_.is_diagonal(g)) throw Error(ErrorCode::NotWeightZero, "non-Cartan term " + format(m));
      t = F.mul(t, F.pow(w.values[g / algebra_.size()], m.exps[pos]));
    }
    acc = F.add(acc, t);
  }
  return acc;
}

std::vector<Monomial> ReductionContext::admissible_monomials(const std::vector<int>& basis_indices) const {
  std::vector<int> positions;
  for (int g : basis_indices) positions.push_back(position_[g]);
  std::sort(positions.begin(), positions.end());
  std::vector<Monomial> out;
  Monomial cur = one_monomial();
  const unsigned p = field().characteristic();
  // odometer, last position fastest
  for (;;) {
    out.push_back(cur);
    int k = static_cast<int>(positions.size()) - 1;
    for (; k >= 0; --k) {
      const int pos = positions[k];
      const unsigned cap = algebra_.parity(order_[pos]) ? 2 : p;
      if (++cur.exps[pos] < cap) break;
      cur.exps[pos] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::uint64_t ReductionContext::admissible_count(const std::vector<int>& basis_indices) const {
  std::uint64_t n = 1;
  for (int g : basis_indices) n *= algebra_.parity(g) ? 2 : field().characteristic();
  return n;
}

std::string ReductionContext::format(const Monomial& m) const {
  std::string f, h, e;
  for (int pos = 0; pos < size(); ++pos) {
    if (!m.exps[pos]) continue;
    const int g = order_[pos];
    const auto [i, j] = algebra_.unit(g);
    std::string& dst = i == j ? h : (i > j ? f : e);
    if (!dst.empty()) dst += ' ';
    dst += algebra_.label(g);
    if (m.exps[pos] > 1) dst += "^" + std::to_string(m.exps[pos]);
  }
  return "f(" + f + ")h(" + h + ")e(" + e + ")";
}

std::string ReductionContext::format(const PBWElement& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : u.terms) {
    if (!out.empty()) out += " + ";
    out += field().format(c) + " * " + format(m);
  }
  return out;
}

std::size_t ReductionContext::memo_size() const {
  std::lock_guard lock(memo_->mu);
  return memo_->table.size();
}

}  // namespace glmn
