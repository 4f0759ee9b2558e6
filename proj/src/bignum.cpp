#include "racov/bignum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace racov {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

Rational harmonic(unsigned long long n) {
  // Common denominator n! would be huge; accumulate with reduction instead.
  Rational h = 0;
  for (unsigned long long j = 1; j <= n; ++j) h += Rational(1, j);
  return h;
}

double to_double(const Rational& r) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(Float(numerator(r)) / Float(denominator(r)));
}

}  // namespace racov
