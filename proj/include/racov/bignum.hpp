#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace racov {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) exactly; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(unsigned long long n);

double to_double(const Rational& r);

}  // namespace racov
