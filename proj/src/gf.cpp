#include "racov/gf.hpp"

#include <stdexcept>
#include <string>

#include "racov/errors.hpp"

namespace racov::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the monic-or-not polynomial d over GF(p).
Poly poly_mod(Poly a, const Poly& d, std::uint32_t p) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(d.back(), p);
  while (a.size() > dd) {
    const std::size_t shift = a.size() - 1 - dd;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::uint64_t t = c * d[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_value(std::uint64_t v, std::uint32_t p) {
  Poly r;
  while (v) {
    r.push_back(static_cast<std::uint32_t>(v % p));
    v /= p;
  }
  return r;
}

std::uint64_t value_from_poly(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t j = a.size(); j-- > 0;) v = v * p + a[j];
  return v;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), mod, p);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < d; ++j) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = poly_from_value(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
  Poly result{1};
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) return {};
  auto factors = prime_factors(q);
  if (factors.size() != 1) return {};
  std::uint32_t m = 0;
  for (std::uint64_t v = q; v > 1; v /= factors[0]) ++m;
  return {static_cast<std::uint32_t>(factors[0]), m};
}

Field Field::build(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("field extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t j = 0; j < m; ++j) {
    q *= p;
    if (q > kMaxOrder) throw GuardError("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^24");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);

  // Monic degree-m polynomials in increasing value order: q + low.
  Poly modulus;
  for (std::uint64_t low = 0; low < q; ++low) {
    Poly f = poly_from_value(low, p);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  impl->modulus = modulus;

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  Element beta = 0;
  for (std::uint64_t g = 1; g < q && beta == 0; ++g) {
    const Poly gp = poly_from_value(g, p);
    bool primitive = true;
    for (auto r : factors) {
      if (poly_powmod(gp, order / r, modulus, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) beta = static_cast<Element>(g);
  }
  impl->beta = beta;

  impl->log.assign(q, 0);
  impl->exp.assign(2 * order, 0);
  const Poly bp = poly_from_value(beta, p);
  Poly cur{1};
  for (std::uint64_t e = 0; e < order; ++e) {
    const auto v = static_cast<Element>(value_from_poly(cur, p));
    impl->exp[e] = v;
    impl->exp[e + order] = v;
    impl->log[v] = static_cast<std::uint32_t>(e);
    cur = poly_mulmod(cur, bp, modulus, p);
  }
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q) {
  const auto pp = factor_prime_power(q);
  if (pp.p == 0) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return build(pp.p, pp.m);
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = impl_->q - 1;
  return impl_->exp[(order - impl_->log[a]) % order];
}

Element Field::beta_pow(std::int64_t e) const {
  const std::int64_t order = impl_->q - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  return impl_->exp[static_cast<std::size_t>(r)];
}

std::uint32_t Field::discrete_log(Element a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  return impl_->log[a];
}

Element Field::digitwise(Element a, Element b, bool subtract) const {
  const std::uint32_t p = impl_->p;
  Element out = 0, scale = 1;
  for (std::uint32_t j = 0; j < impl_->m; ++j) {
    const std::uint32_t da = a % p, db = b % p;
    const std::uint32_t d = subtract ? (da + p - db) % p : (da + db) % p;
    out += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

}  // namespace racov::gf
