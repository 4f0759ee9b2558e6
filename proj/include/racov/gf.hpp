#pragma once
// Arithmetic in GF(p^m) through log/antilog tables.
//
// An element is an integer in [0, q) whose base-p digits are its coefficients
// in the polynomial basis, digit j being the coefficient of x^j. In
// characteristic 2 addition is XOR.
#include <cstdint>
#include <memory>
#include <vector>

namespace racov::gf {

using Element = std::uint32_t;

inline constexpr std::uint64_t kMaxOrder = 1ULL << 24;

bool is_prime(std::uint64_t n);

// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};
PrimePower factor_prime_power(std::uint64_t q);

// Immutable handle to a field. Copies share the tables.
class Field {
 public:
  // Lowest-value monic irreducible modulus and lowest-value primitive element.
  // Throws std::invalid_argument for non-prime p or m == 0, GuardError if
  // p^m exceeds kMaxOrder.
  static Field build(std::uint32_t p, std::uint32_t m);
  static Field of_order(std::uint64_t q);

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t m() const { return impl_->m; }
  std::uint32_t q() const { return impl_->q; }
  bool characteristic_two() const { return impl_->p == 2; }
  // Coefficients of the modulus, constant term first, leading 1 last.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  Element beta() const { return impl_->beta; }

  Element add(Element a, Element b) const {
    if (impl_->p == 2) return a ^ b;
    if (impl_->m == 1) return (a + b) % impl_->p;
    return digitwise(a, b, false);
  }
  Element sub(Element a, Element b) const {
    if (impl_->p == 2) return a ^ b;
    if (impl_->m == 1) return (a + impl_->p - b) % impl_->p;
    return digitwise(a, b, true);
  }
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }
  // Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  // beta^(e mod (q-1)); never zero.
  Element beta_pow(std::int64_t e) const;
  // Exponent in [0, q-2] with beta^e == a. Throws std::domain_error for 0.
  std::uint32_t discrete_log(Element a) const;

  bool operator==(const Field& o) const { return impl_ == o.impl_ || (q() == o.q() && modulus() == o.modulus()); }

 private:
  struct Impl {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    Element beta = 0;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Element> exp;        // length 2(q-1) so log sums need no reduction
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Element digitwise(Element a, Element b, bool subtract) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace racov::gf
