#include "ising/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ising::exact {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt pow_int(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  for (unsigned m = e; m != 0; m >>= 1) {
    if (m & 1U) r *= b;
    if (m > 1) b *= b;
  }
  return r;
}

Rational pow_rat(const Rational& base, unsigned e) {
  Rational r = 1, b = base;
  for (unsigned m = e; m != 0; m >>= 1) {
    if (m & 1U) r *= b;
    if (m > 1) b *= b;
  }
  return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // grows monotonically under the lock

}  // namespace

Rational bernoulli_number(unsigned m) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) {
    g_bernoulli.push_back(Rational(1));
    g_bernoulli.push_back(Rational(-1, 2));
  }
  while (g_bernoulli.size() <= m) {
    const unsigned n = static_cast<unsigned>(g_bernoulli.size());
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-acc / Rational(binomial(n + 1, n)));
  }
  return g_bernoulli[m];
}

Rational bernoulli_polynomial(unsigned m, const Rational& z) {
  Rational acc = 0;
  for (unsigned k = 0; k <= m; ++k) {
    acc += Rational(binomial(m, k)) * bernoulli_number(k) * pow_rat(z, m - k);
  }
  return acc;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ising::exact
