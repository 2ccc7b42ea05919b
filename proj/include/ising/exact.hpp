#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ising::exact {

// Arbitrary-precision integers and rationals for the combinatorial side of
// the toolkit (factorial coefficients, Bernoulli polynomials, moment sums,
// q-series coefficients).  cpp_rational keeps values in canonical reduced
// form with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// Binomial coefficient; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

BigInt pow_int(const BigInt& base, unsigned e);
Rational pow_rat(const Rational& base, unsigned e);

/// Bernoulli number B_m with B_1 = -1/2, from the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.  Cached; safe for concurrent callers.
Rational bernoulli_number(unsigned m);

/// Bernoulli polynomial B_m(z) = sum_k C(m,k) B_k z^{m-k}, exact.
Rational bernoulli_polynomial(unsigned m, const Rational& z);

double to_double(const Rational& r);

/// "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace ising::exact
