#include "glmn/poly.hpp"

#include <algorithm>

namespace glmn::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
  trim(out);
  return out;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
  trim(out);
  return out;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly scale(const Field& F, const Poly& a, Elem c) {
  Poly out;
  out.reserve(a.size());
  for (Elem x : a) out.push_back(F.mul(x, c));
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1, F.zero());
  const Elem lead_inv = F.inv(b.back());
  for (std::size_t d = r.size(); d-- >= b.size();) {
    const Elem c = F.mul(r[d], lead_inv);
    const std::size_t shift = d - (b.size() - 1);
    q[shift] = c;
    if (!F.is_zero(c))
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    if (d == 0) break;
  }
  trim(q);
  r.resize(b.size() - 1);
  trim(r);
  return {q, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result{F.one()};
  result = mod(F, result, modulus);
  Poly x = mod(F, base, modulus);
  while (e) {
    if (e & 1) result = mod(F, mul(F, result, x), modulus);
    e >>= 1;
    if (e) x = mod(F, mul(F, x, x), modulus);
  }
  return result;
}

Elem eval(const Field& F, const Poly& f, Elem x) {
  Elem acc = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

namespace {

// x^(q^times) mod f by repeated Frobenius powering, q = |F|.
Poly frobenius_power_of_x(const Field& F, const Poly& f, unsigned times) {
  Poly x{F.zero(), F.one()};
  Poly cur = mod(F, x, f);
  for (unsigned i = 0; i < times; ++i)
    for (unsigned j = 0; j < F.degree(); ++j) cur = powmod(F, cur, F.characteristic(), f);
  return cur;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

void split(const Field& F, const Poly& g, std::vector<Elem>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(F.div(g[0], g[1])));
    return;
  }
  const std::uint64_t half = (F.order() - 1) / 2;
  for (std::uint64_t code = 0; code < F.order(); ++code) {
    Poly shifted{F.from_code(code), F.one()};
    Poly t = powmod(F, shifted, half, g);
    t = sub(F, t, Poly{F.one()});
    Poly h = gcd(F, g, t);
    if (degree(h) > 0 && degree(h) < d) {
      split(F, h, out);
      split(F, divmod(F, g, h).first, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Field& prime_field, const Poly& f_in) {
  Poly f = monic(prime_field, f_in);
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x{prime_field.zero(), prime_field.one()};
  if (frobenius_power_of_x(prime_field, f, static_cast<unsigned>(n)) != mod(prime_field, x, f)) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
    const Poly t = sub(prime_field, frobenius_power_of_x(prime_field, f, static_cast<unsigned>(n) / r), x);
    if (degree(gcd(prime_field, f, t)) != 0) return false;
  }
  return true;
}

std::vector<Elem> roots(const Field& F, const Poly& f_in) {
  Poly f = monic(F, f_in);
  if (degree(f) <= 0) return {};
  const Poly x{F.zero(), F.one()};
  const Poly xq = frobenius_power_of_x(F, f, 1);
  Poly g = gcd(F, f, sub(F, xq, mod(F, x, f)));
  std::vector<Elem> out;
  split(F, g, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glmn::poly
