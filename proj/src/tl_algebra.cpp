#include "ising/tl_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ising::tl {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int normalize_index(int sites, int index) {
  const int period = 2 * sites;
  int idx = (index - 1) % period;
  if (idx < 0) idx += period;
  return idx + 1;
}

void require_sites(int sites) {
  if (sites < 2) throw std::invalid_argument("tl: sites must be >= 2");
}

}  // namespace

Generator::Generator(int sites_, int index_) : sites(sites_) {
  require_sites(sites_);
  index = normalize_index(sites_, index_);
}

Operator Generator::dense() const {
  const std::size_t dim = std::size_t{1} << sites;
  Operator m = Operator::zeros(sites);
  if (is_diagonal()) {
    // (e_{2i})_{ss} = sqrt(2) when sigma_i = -sigma_{i+1}
    const int a = index / 2;               // 1-based site
    const int b = a % sites + 1;           // periodic neighbour
    const unsigned ba = 1U << (a - 1), bb = 1U << (b - 1);
    for (std::size_t s = 0; s < dim; ++s) {
      const bool flip = ((s & ba) != 0) != ((s & bb) != 0);
      if (flip) m.at(s, s) = kSqrt2;
    }
  } else {
    // (e_{2i-1})_{sr} = 1/sqrt(2) whenever s and r agree off site i
    const int site = (index + 1) / 2;
    const unsigned bit = 1U << (site - 1);
    for (std::size_t s = 0; s < dim; ++s) {
      m.at(s, s) = 1.0 / kSqrt2;
      m.at(s, s ^ bit) = 1.0 / kSqrt2;
    }
  }
  return m;
}

Operator Generator::times(const Operator& x) const {
  if (x.sites() != sites) throw std::invalid_argument("Generator::times: dimension mismatch");
  const std::size_t dim = x.dim();
  Operator out = Operator::zeros(sites);
  if (is_diagonal()) {
    const int a = index / 2;
    const int b = a % sites + 1;
    const unsigned ba = 1U << (a - 1), bb = 1U << (b - 1);
    for (std::size_t s = 0; s < dim; ++s) {
      const bool flip = ((s & ba) != 0) != ((s & bb) != 0);
      if (!flip) continue;
      const double* row = x.data() + s * dim;
      double* dst = out.data() + s * dim;
      for (std::size_t j = 0; j < dim; ++j) dst[j] = kSqrt2 * row[j];
    }
  } else {
    const int site = (index + 1) / 2;
    const std::size_t bit = std::size_t{1} << (site - 1);
    const double c = 1.0 / kSqrt2;
    for (std::size_t s = 0; s < dim; ++s) {
      const double* row = x.data() + s * dim;
      const double* row2 = x.data() + (s ^ bit) * dim;
      double* dst = out.data() + s * dim;
      for (std::size_t j = 0; j < dim; ++j) dst[j] = c * (row[j] + row2[j]);
    }
  }
  return out;
}

Operator Generator::rtimes(const Operator& x) const {
  if (x.sites() != sites) throw std::invalid_argument("Generator::rtimes: dimension mismatch");
  const std::size_t dim = x.dim();
  Operator out = Operator::zeros(sites);
  if (is_diagonal()) {
    const int a = index / 2;
    const int b = a % sites + 1;
    const unsigned ba = 1U << (a - 1), bb = 1U << (b - 1);
    for (std::size_t j = 0; j < dim; ++j) {
      const bool flip = ((j & ba) != 0) != ((j & bb) != 0);
      if (!flip) continue;
      for (std::size_t s = 0; s < dim; ++s) out.at(s, j) = kSqrt2 * x.at(s, j);
    }
  } else {
    const int site = (index + 1) / 2;
    const std::size_t bit = std::size_t{1} << (site - 1);
    const double c = 1.0 / kSqrt2;
    for (std::size_t s = 0; s < dim; ++s) {
      const double* row = x.data() + s * dim;
      double* dst = out.data() + s * dim;
      for (std::size_t j = 0; j < dim; ++j) dst[j] = c * (row[j] + row[j ^ bit]);
    }
  }
  return out;
}

Operator generator(int sites, int index) { return Generator(sites, index).dense(); }

Operator generator_commutator(const Generator& e, const Operator& x) {
  Operator out = e.times(x);
  out -= e.rtimes(x);
  return out;
}

Operator hamiltonian_tower(int sites, int order_k) {
  require_sites(sites);
  if (order_k < 1) throw std::invalid_argument("hamiltonian_tower: order must be >= 1");
  const int period = 2 * sites;
  Operator h = Operator::zeros(sites);
  for (int n = 1; n <= period; ++n) {
    Operator nest = Generator(sites, n + 2 * order_k - 2).dense();
    for (int j = 2 * order_k - 3; j >= 0; --j) {
      nest = generator_commutator(Generator(sites, n + j), nest);
    }
    h += nest;
  }
  h *= kSqrt2;
  return h;
}

OddRecursion odd_recursion_coefficients(int k) {
  if (k < 1) throw std::invalid_argument("odd_recursion_coefficients: k >= 1 required");
  OddRecursion rec;
  {
    const exact::BigInt num = exact::factorial(static_cast<unsigned>(2 * k - 2));
    const exact::BigInt den = exact::pow_int(2, static_cast<unsigned>(k - 1));
    if (num % den != 0) throw std::logic_error("odd recursion lead not integral");
    rec.lead = num / den;
  }
  for (int m = 1; m <= k - 1; ++m) {
    exact::Rational c = exact::Rational(exact::binomial(static_cast<unsigned>(2 * k - m - 2),
                                                        static_cast<unsigned>(m - 1))) *
                        exact::Rational(exact::factorial(static_cast<unsigned>(2 * k - 1))) /
                        exact::Rational(exact::BigInt(m) *
                                        exact::factorial(static_cast<unsigned>(2 * k - 2 * m - 2)));
    if (m % 2 == 0) c = -c;
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::logic_error("odd recursion coefficient not integral");
    }
    rec.coeff.push_back(boost::multiprecision::numerator(c));
  }
  return rec;
}

Operator iom_odd(int sites, int order_k) {
  require_sites(sites);
  if (order_k < 1) throw std::invalid_argument("iom_odd: order must be >= 1");
  if (sites <= order_k - 1) {
    throw std::domain_error("iom_odd: A_" + std::to_string(2 * order_k - 1) +
                            " needs L > " + std::to_string(order_k - 1) +
                            ", got L = " + std::to_string(sites) +
                            " (degenerate forms are out of scope)");
  }
  std::vector<Operator> a;  // A_1, A_3, ...
  a.reserve(static_cast<std::size_t>(order_k));
  {
    Operator a1 = hamiltonian_tower(sites, 1);
    a1.add_scaled(-2.0 * sites, Operator::identity(sites));
    a.push_back(std::move(a1));
  }
  for (int k = 2; k <= order_k; ++k) {
    const OddRecursion rec = odd_recursion_coefficients(k);
    Operator ak = hamiltonian_tower(sites, k);
    ak *= rec.lead.convert_to<double>();
    for (int m = 1; m <= k - 1; ++m) {
      // coefficient m multiplies A_{2(k-m)-1}
      ak.add_scaled(rec.coeff[static_cast<std::size_t>(m - 1)].convert_to<double>(),
                    a[static_cast<std::size_t>(k - m - 1)]);
    }
    a.push_back(std::move(ak));
  }
  return std::move(a.back());
}

double iom_even(int sites, int order_n) {
  if (order_n < 1) throw std::invalid_argument("iom_even: order must be >= 1");
  if (sites <= order_n) {
    throw std::domain_error("iom_even: A_" + std::to_string(2 * order_n) + " needs L > " +
                            std::to_string(order_n) + ", got L = " + std::to_string(sites));
  }
  const exact::BigInt ratio =
      exact::factorial(static_cast<unsigned>(2 * order_n - 1)) /
      exact::factorial(static_cast<unsigned>(order_n));
  const exact::BigInt value = exact::BigInt(2 * order_n) * ratio * ratio * sites;
  return -value.convert_to<double>();
}

IomTower IomTower::build(int sites, int max_order) {
  require_sites(sites);
  if (max_order < 1 || max_order > 2 * sites) {
    throw std::invalid_argument("IomTower: max_order must be in [1, 2L]");
  }
  IomTower t;
  t.sites = sites;
  t.max_order = max_order;

  const int k_max = (max_order + 1) / 2;  // highest k with 2k-1 <= max_order
  if (sites <= k_max - 1) {
    throw std::domain_error("IomTower: A_" + std::to_string(2 * k_max - 1) + " needs L > " +
                            std::to_string(k_max - 1));
  }
  t.odd.reserve(static_cast<std::size_t>(k_max));
  {
    Operator a1 = hamiltonian_tower(sites, 1);
    a1.add_scaled(-2.0 * sites, Operator::identity(sites));
    t.odd.push_back(std::move(a1));
  }
  for (int k = 2; k <= k_max; ++k) {
    const OddRecursion rec = odd_recursion_coefficients(k);
    Operator ak = hamiltonian_tower(sites, k);
    ak *= rec.lead.convert_to<double>();
    for (int m = 1; m <= k - 1; ++m) {
      ak.add_scaled(rec.coeff[static_cast<std::size_t>(m - 1)].convert_to<double>(),
                    t.odd[static_cast<std::size_t>(k - m - 1)]);
    }
    t.odd.push_back(std::move(ak));
  }
  const int n_max = max_order / 2;
  for (int n = 1; n <= n_max; ++n) t.even.push_back(iom_even(sites, n));
  return t;
}

const Operator& IomTower::odd_op(int order) const {
  if (order < 1 || order > max_order || order % 2 == 0) {
    throw std::invalid_argument("IomTower::odd_op: bad order " + std::to_string(order));
  }
  return odd[static_cast<std::size_t>((order - 1) / 2)];
}

double IomTower::even_scalar(int order) const {
  if (order < 2 || order > max_order || order % 2 != 0) {
    throw std::invalid_argument("IomTower::even_scalar: bad order " + std::to_string(order));
  }
  return even[static_cast<std::size_t>(order / 2 - 1)];
}

Operator IomTower::as_operator(int order) const {
  if (order % 2 == 1) return odd_op(order);
  return Operator::scaled_identity(sites, even_scalar(order));
}

namespace {

void check_commuting(std::span<const Operator> args, int count, double rtol) {
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double r = commutator_residual(args[static_cast<std::size_t>(i)],
                                           args[static_cast<std::size_t>(j)]);
      if (!(r <= rtol)) {
        throw std::invalid_argument("bell_polynomial: arguments " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) +
                                    " do not commute (residual " + std::to_string(r) + ")");
      }
    }
  }
}

}  // namespace

std::vector<Operator> bell_sequence(std::span<const Operator> args, int max_n,
                                    double commute_rtol) {
  if (max_n < 0) throw std::invalid_argument("bell_sequence: order must be >= 0");
  if (static_cast<std::size_t>(max_n) > args.size()) {
    throw std::invalid_argument("bell_sequence: order exceeds argument count");
  }
  if (args.empty() && max_n > 0) throw std::invalid_argument("bell_sequence: no arguments");
  const int sites = args.empty() ? 1 : args[0].sites();
  check_commuting(args, max_n, commute_rtol);

  std::vector<Operator> b;
  b.reserve(static_cast<std::size_t>(max_n) + 1);
  b.push_back(Operator::identity(sites));
  for (int r = 0; r < max_n; ++r) {
    Operator next = Operator::zeros(sites);
    for (int j = 0; j <= r; ++j) {
      const double binom =
          exact::binomial(static_cast<unsigned>(r), static_cast<unsigned>(j)).convert_to<double>();
      Operator term = b[static_cast<std::size_t>(r - j)] * args[static_cast<std::size_t>(j)];
      next.add_scaled(binom, term);
    }
    b.push_back(std::move(next));
  }
  return b;
}

Operator bell_polynomial(std::span<const Operator> args, int n, double commute_rtol) {
  auto seq = bell_sequence(args, n, commute_rtol);
  return std::move(seq.back());
}

namespace {

std::vector<Operator> tower_arguments(const IomTower& tower, int n) {
  std::vector<Operator> args;
  args.reserve(static_cast<std::size_t>(n));
  for (int order = 1; order <= n; ++order) args.push_back(tower.as_operator(order));
  return args;
}

double bell_scale(int n) {
  const exact::BigInt den =
      exact::pow_int(2, static_cast<unsigned>(n)) * exact::factorial(static_cast<unsigned>(n));
  return 1.0 / den.convert_to<double>();
}

}  // namespace

Operator build_D(const IomTower& tower, int n) {
  if (n < 0 || n > tower.sites) throw std::invalid_argument("build_D: need 0 <= n <= L");
  if (n > tower.max_order) throw std::invalid_argument("build_D: tower too short");
  if (n == 0) return Operator::identity(tower.sites);
  const auto args = tower_arguments(tower, n);
  Operator b = bell_polynomial(args, n);
  b *= bell_scale(n);
  return b;
}

Operator build_D(int sites, int n) {
  if (n < 0 || n > sites) throw std::invalid_argument("build_D: need 0 <= n <= L");
  if (n == 0) return Operator::identity(sites);
  return build_D(IomTower::build(sites, n), n);
}

std::vector<Operator> build_D_all(const IomTower& tower) {
  const int sites = tower.sites;
  if (tower.max_order < sites) throw std::invalid_argument("build_D_all: tower too short");
  const auto args = tower_arguments(tower, sites);
  auto bell = bell_sequence(args, sites);
  std::vector<Operator> d;
  d.reserve(bell.size());
  for (int n = 0; n <= sites; ++n) {
    Operator dn = std::move(bell[static_cast<std::size_t>(n)]);
    if (n > 0) dn *= bell_scale(n);
    d.push_back(std::move(dn));
  }
  return d;
}

std::pair<Operator, Operator> make_projectors(const Operator& involution, double rtol) {
  const Operator id = Operator::identity(involution.sites());
  const double resid = relative_residual(involution * involution, id);
  if (!(resid <= rtol)) {
    throw std::invalid_argument("make_projectors: R is not an involution (residual " +
                                std::to_string(resid) + ")");
  }
  Operator plus = id;
  plus += involution;
  plus *= 0.5;
  Operator minus = id;
  minus -= involution;
  minus *= 0.5;
  return {std::move(plus), std::move(minus)};
}

double projector_bell_residual(const IomTower& tower, const Operator& involution) {
  const int sites = tower.sites;
  Operator lhs = build_D(tower, sites);
  lhs *= std::pow(2.0, sites - 1);  // B_L/(2 L!) = 2^{L-1} D_L
  const double sign = (sites % 2 == 0) ? 1.0 : -1.0;
  Operator rhs = Operator::scaled_identity(sites, sign * 0.5);
  rhs.add_scaled(0.5, involution);
  return relative_residual(lhs, rhs);
}

std::pair<Operator, Operator> projectors(const IomTower& tower, const Operator& involution,
                                         double rtol) {
  auto [plus, minus] = make_projectors(involution, rtol);
  const int sites = tower.sites;
  const Operator id = Operator::identity(sites);

  const double idem_p = relative_residual(plus * plus, plus);
  const double idem_m = relative_residual(minus * minus, minus);
  const double completeness = relative_residual(plus + minus, id);
  const double ortho = (plus * minus).frobenius_norm() / static_cast<double>(id.dim());
  if (!(idem_p <= rtol && idem_m <= rtol && completeness <= rtol && ortho <= rtol)) {
    throw std::runtime_error("projectors: projector identities violated");
  }

  // Bell form: even L pairs B_L/(2 L!) with Pi+, odd L with -Pi-.
  Operator bell = build_D(tower, sites);
  bell *= std::pow(2.0, sites - 1);
  const double bell_resid = (sites % 2 == 0) ? relative_residual(bell, plus)
                                             : relative_residual(bell * -1.0, minus);
  if (!(bell_resid <= rtol)) {
    throw std::runtime_error("projectors: Bell-polynomial form residual " +
                             std::to_string(bell_resid) + " exceeds rtol");
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace ising::tl
