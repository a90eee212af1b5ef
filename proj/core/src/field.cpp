#include "glmn/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <sstream>

#include "glmn/error.hpp"
#include "glmn/matrix.hpp"
#include "glmn/poly.hpp"

namespace glmn {

namespace {

constexpr unsigned kMaxDegree = 63;
constexpr std::uint64_t kTableLimit = 1u << 17;

using Digits = std::array<std::uint32_t, kMaxDegree + 1>;

}  // namespace

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::vector<Coeff> modulus;
  std::vector<std::uint64_t> pw;  // p^i

  // Discrete log tables for small extension fields.
  bool tables = false;
  std::vector<std::uint32_t> log;
  std::vector<std::uint64_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> zech;  // log(1 + g^i), kNoLog when 1 + g^i = 0
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  std::uint32_t log_minus_one = 0;

  void decode(std::uint64_t code, Digits& d) const {
    for (unsigned i = 0; i < k; ++i) {
      d[i] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
  }
  std::uint64_t encode(const Digits& d) const {
    std::uint64_t code = 0;
    for (unsigned i = k; i-- > 0;) code = code * p + d[i];
    return code;
  }

  std::uint64_t add_digits(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      out += s * pw[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (k == 1) {
      const std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    std::uint64_t out = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      out += s * pw[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    if (tables && a != 0) return exp[log[a] + log_minus_one];
    std::uint64_t out = 0;
    for (unsigned i = 0; i < k; ++i) {
      const std::uint64_t c = a % p;
      out += (c == 0 ? 0 : p - c) * pw[i];
      a /= p;
    }
    return out;
  }

  std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const {
    Digits da{}, db{};
    decode(a, da);
    decode(b, db);
    std::array<std::uint64_t, 2 * kMaxDegree + 2> prod{};
    for (unsigned i = 0; i < k; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    for (unsigned d = 2 * k - 1; d-- > k;) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
      prod[d] = 0;
    }
    Digits out{};
    for (unsigned i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (k == 1) return a * b % p;
    if (a == 0 || b == 0) return 0;
    if (tables) return exp[log[a] + log[b]];
    return mul_poly(a, b);
  }

  void build_tables() {
    for (std::uint64_t g = 2; g < q; ++g) {
      std::vector<std::uint64_t> powers;
      powers.reserve(q - 1);
      std::uint64_t x = 1;
      do {
        powers.push_back(x);
        x = mul_poly(x, g);
      } while (x != 1 && powers.size() < q);
      if (powers.size() != q - 1) continue;
      log.assign(q, 0);
      exp.assign(2 * (q - 1), 0);
      for (std::uint64_t i = 0; i < q - 1; ++i) {
        log[powers[i]] = static_cast<std::uint32_t>(i);
        exp[i] = exp[i + q - 1] = powers[i];
      }
      log_minus_one = static_cast<std::uint32_t>((q - 1) / 2);
      zech.assign(q - 1, kNoLog);
      for (std::uint64_t i = 0; i < q - 1; ++i) {
        // 1 + g^i computed digitwise; the table is not live yet
        const std::uint64_t s = add_digits(1, powers[i]);
        if (s != 0) zech[i] = log[s];
      }
      tables = true;
      return;
    }
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<Coeff>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(ErrorCode::PTooSmall, "characteristic must be at least 5, got " + std::to_string(p));
  if (k < 1) throw Error(ErrorCode::BadDims, "extension degree must be at least 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->pw.assign(k + 1, 1);
  for (unsigned i = 1; i <= k; ++i) {
    if (impl->pw[i - 1] > (std::numeric_limits<std::uint64_t>::max() >> 2) / p)
      throw Error(ErrorCode::FieldTooLarge, "p^k does not fit in 62 bits");
    impl->pw[i] = impl->pw[i - 1] * p;
  }
  impl->q = impl->pw[k];

  auto prime_field = [p]() {
    auto pi = std::make_shared<Impl>();
    pi->p = p;
    pi->k = 1;
    pi->q = p;
    pi->pw = {1, p};
    pi->modulus = {0, 1};
    return Field(std::move(pi));
  }();

  auto to_poly = [&](const std::vector<Coeff>& c) {
    poly::Poly f;
    for (Coeff x : c) f.push_back(prime_field.from_int(x));
    poly::trim(f);
    return f;
  };

  if (modulus) {
    auto& mod = *modulus;
    if (mod.size() != k + 1 || mod.back() % p != 1)
      throw Error(ErrorCode::NonIrreducibleModulus, "modulus must be monic of degree " + std::to_string(k));
    for (auto& c : mod) c %= p;
    if (!poly::is_irreducible(prime_field, to_poly(mod)))
      throw Error(ErrorCode::NonIrreducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    impl->modulus = mod;
  } else {
    // Enumerate [c0, ..., c_{k-1}] lexicographically: c0 is the most significant digit.
    std::vector<Coeff> mod(k + 1, 0);
    mod[k] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < impl->q && !found; ++idx) {
      std::uint64_t t = idx;
      for (unsigned i = k; i-- > 0;) {
        mod[i] = static_cast<Coeff>(t % p);
        t /= p;
      }
      if (poly::is_irreducible(prime_field, to_poly(mod))) found = true;
    }
    if (!found) throw Error(ErrorCode::NonIrreducibleModulus, "no irreducible polynomial found");
    impl->modulus = mod;
  }

  if (k > 1 && impl->q <= kTableLimit) impl->build_tables();
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<Coeff>& Field::modulus() const { return impl_->modulus; }

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint64_t>(r)};
}

Elem Field::from_coeffs(std::span<const Coeff> coeffs) const {
  if (coeffs.size() > impl_->k)
    throw Error(ErrorCode::ParseError, "too many coefficients for a degree " + std::to_string(impl_->k) + " field");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * impl_->p + coeffs[i] % impl_->p;
  return Elem{code};
}

Elem Field::generator() const {
  if (impl_->k == 1) return from_int(-static_cast<std::int64_t>(impl_->modulus[0]));
  return Elem{impl_->p};
}

Elem Field::from_code(std::uint64_t code) const {
  if (code >= impl_->q) throw Error(ErrorCode::ParseError, "element code out of range");
  return Elem{code};
}

std::vector<Coeff> Field::coeffs(Elem a) const {
  std::vector<Coeff> out(impl_->k);
  for (unsigned i = 0; i < impl_->k; ++i) {
    out[i] = static_cast<Coeff>(a.code % impl_->p);
    a.code /= impl_->p;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const { return Elem{impl_->add(a.code, b.code)}; }
Elem Field::neg(Elem a) const { return Elem{impl_->neg(a.code)}; }
Elem Field::sub(Elem a, Elem b) const { return Elem{impl_->add(a.code, impl_->neg(b.code))}; }
Elem Field::mul(Elem a, Elem b) const { return Elem{impl_->mul(a.code, b.code)}; }

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (impl_->tables && a.code != 0) {
    const std::uint64_t n = impl_->q - 1;
    const std::uint64_t l = (static_cast<unsigned __int128>(impl_->log[a.code]) * (e % n)) % n;
    return Elem{impl_->exp[l]};
  }
  std::uint64_t r = 1, x = a.code;
  while (e) {
    if (e & 1) r = impl_->mul(r, x);
    x = impl_->mul(x, x);
    e >>= 1;
  }
  return Elem{r};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  if (impl_->tables) {
    const std::uint64_t n = impl_->q - 1;
    return Elem{impl_->exp[(n - impl_->log[a.code]) % n]};
  }
  return pow(a, impl_->q - 2);
}

std::uint32_t Field::to_prime(Elem a) const {
  if (!in_prime_field(a)) throw Error(ErrorCode::FieldMismatch, format(a) + " is not in the prime field");
  return static_cast<std::uint32_t>(a.code);
}

std::string Field::format(Elem a) const {
  std::string out = "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ']';
  return out;
}

Elem Field::parse(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = strip(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    return v;
  };
  text = strip(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty field element");
  if (text.front() != '[') return from_int(parse_int(text));
  if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coefficient list");
  text = text.substr(1, text.size() - 2);
  std::vector<Coeff> coeffs;
  while (!strip(text).empty()) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    coeffs.push_back(static_cast<Coeff>(from_int(parse_int(piece)).code));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_coeffs(coeffs);
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k && a.impl_->modulus == b.impl_->modulus;
}

std::vector<Elem> artin_schreier_roots(const Field& field, Elem c) {
  // x -> x^p - x is F_p-linear; solve it in coordinates over the prime field.
  const unsigned k = field.degree();
  const Field fp = Field::make(field.characteristic());
  Matrix system(fp, k, k + 1);
  Elem basis = field.one();
  for (unsigned j = 0; j < k; ++j) {
    const Elem image = field.sub(field.frobenius(basis), basis);
    const auto col = field.coeffs(image);
    for (unsigned i = 0; i < k; ++i) system(i, j) = Elem{col[i]};
    basis = field.mul(basis, field.generator());
  }
  const auto rhs = field.coeffs(c);
  for (unsigned i = 0; i < k; ++i) system(i, k) = Elem{rhs[i]};

  const auto echelon = row_reduce(system);
  std::vector<Coeff> sol(k, 0);
  for (std::size_t r = 0; r < echelon.rank; ++r) {
    const std::size_t col = echelon.pivots[r];
    if (col == k) return {};  // inconsistent
    sol[col] = static_cast<Coeff>(echelon.form(r, k).code);
  }
  const Elem root = field.from_coeffs(sol);
  std::vector<Elem> roots;
  roots.reserve(field.characteristic());
  for (std::uint32_t t = 0; t < field.characteristic(); ++t) roots.push_back(field.add(root, field.from_int(t)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

FieldEmbedding::FieldEmbedding(Field source, Field target, Elem generator_image)
    : source_(std::move(source)), target_(std::move(target)) {
  Elem x = target_.one();
  for (unsigned i = 0; i < source_.degree(); ++i) {
    powers_.push_back(x);
    x = target_.mul(x, generator_image);
  }
}

FieldEmbedding FieldEmbedding::identity(const Field& field) { return FieldEmbedding(field, field, field.generator()); }

FieldEmbedding FieldEmbedding::find(const Field& source, const Field& target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0)
    throw Error(ErrorCode::FieldMismatch, "no embedding between fields of these degrees");
  if (source == target) return identity(source);
  poly::Poly g;
  for (Coeff c : source.modulus()) g.push_back(target.from_int(c));
  const auto r = poly::roots(target, g);
  if (r.empty()) throw Error(ErrorCode::FieldMismatch, "modulus has no root in target field");
  return FieldEmbedding(source, target, r.front());
}

Elem FieldEmbedding::operator()(Elem a) const {
  const auto c = source_.coeffs(a);
  Elem out = target_.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) out = target_.add(out, target_.mul(target_.from_int(c[i]), powers_[i]));
  return out;
}

std::vector<Elem> FieldEmbedding::operator()(std::span<const Elem> v) const {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (Elem a : v) out.push_back((*this)(a));
  return out;
}

}  // namespace glmn
