#include "ising/transfer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ising/kernels.hpp"

namespace ising::transfer {

namespace {

constexpr double kPi = std::numbers::pi;

void require_spin(int s, const char* name) {
  if (s != 1 && s != -1) {
    throw std::invalid_argument(std::string("weight: spin ") + name + " must be +1 or -1");
  }
}

void require_u(double u) {
  if (!(u > 0.0 && u < kPi / 4.0)) {
    throw std::domain_error("weight: u must lie in the open interval (0, pi/4), got " +
                            std::to_string(u));
  }
}

inline double wr_raw(int rho, int tau, int sigma, double tan_c, double cot_c) {
  const double bracket_same = (sigma == rho ? tan_c : 0.0) + (sigma == -rho ? 1.0 : 0.0);
  const double bracket_flip = (sigma == rho ? cot_c : 0.0) + (sigma == -rho ? 1.0 : 0.0);
  return (sigma == tau ? bracket_same : 0.0) + (sigma == -tau ? bracket_flip : 0.0);
}

inline double wl_raw(int rho, int tau, int sigma, double tan_u, double cot_u) {
  const double bracket_same = (sigma == rho ? cot_u : 0.0) + (sigma == -rho ? 1.0 : 0.0);
  const double bracket_flip = (sigma == rho ? tan_u : 0.0) + (sigma == -rho ? 1.0 : 0.0);
  return (sigma == tau ? bracket_same : 0.0) + (sigma == -tau ? bracket_flip : 0.0);
}

struct WeightTables {
  // [rho][tau][sigma] with bit 0 -> +1, bit 1 -> -1
  double wl[2][2][2];
  double wr[2][2][2];
};

WeightTables make_tables(double u) {
  const double tan_u = std::tan(u);
  const double cot_u = 1.0 / tan_u;
  const double tan_c = std::tan(kPi / 4.0 - u);
  const double cot_c = 1.0 / tan_c;
  WeightTables t{};
  for (int r = 0; r < 2; ++r) {
    for (int g = 0; g < 2; ++g) {
      for (int s = 0; s < 2; ++s) {
        const int rho = r ? -1 : 1, tau = g ? -1 : 1, sigma = s ? -1 : 1;
        t.wl[r][g][s] = wl_raw(rho, tau, sigma, tan_u, cot_u);
        t.wr[r][g][s] = wr_raw(rho, tau, sigma, tan_c, cot_c);
      }
    }
  }
  return t;
}

inline int bit_at(unsigned cfg, int site0, int sites) {
  return static_cast<int>((cfg >> (site0 % sites)) & 1U);
}

}  // namespace

double weight_right(int rho, int tau, int sigma, double u) {
  require_spin(rho, "rho");
  require_spin(tau, "tau");
  require_spin(sigma, "sigma");
  require_u(u);
  return wr_raw(rho, tau, sigma, std::tan(kPi / 4.0 - u), 1.0 / std::tan(kPi / 4.0 - u));
}

double weight_left(int rho, int tau, int sigma, double u) {
  require_spin(rho, "rho");
  require_spin(tau, "tau");
  require_spin(sigma, "sigma");
  require_u(u);
  return wl_raw(rho, tau, sigma, std::tan(u), 1.0 / std::tan(u));
}

double x_of_u(double u) { return std::sin(4.0 * u); }

double u_of_x(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw std::domain_error("u_of_x: x must lie in (0, 1], got " + std::to_string(x));
  }
  return std::asin(x) / 4.0;
}

Operator build_transfer(int sites, double u) {
  if (sites < 1 || sites > 12) {
    throw std::invalid_argument("build_transfer: sites must be in [1, 12]");
  }
  require_u(u);
  const WeightTables t = make_tables(u);
  const std::size_t dim = std::size_t{1} << sites;
  Operator out = Operator::zeros(sites);
  for (std::size_t s = 0; s < dim; ++s) {
    const unsigned scfg = static_cast<unsigned>(s);
    for (std::size_t r = 0; r < dim; ++r) {
      const unsigned rcfg = static_cast<unsigned>(r);
      // M_n[tau_n][tau_{n+1}] = W_L(rho_n; tau_n; sigma_n) W_R(rho_n; tau_{n+1}; sigma_n);
      // the entry is tr(M_1 M_2 ... M_L).
      double m00, m01, m10, m11;
      {
        const int rb = bit_at(rcfg, 0, sites), sb = bit_at(scfg, 0, sites);
        const double l0 = t.wl[rb][0][sb], l1 = t.wl[rb][1][sb];
        const double r0 = t.wr[rb][0][sb], r1 = t.wr[rb][1][sb];
        m00 = l0 * r0;
        m01 = l0 * r1;
        m10 = l1 * r0;
        m11 = l1 * r1;
      }
      for (int n = 1; n < sites; ++n) {
        const int rb = bit_at(rcfg, n, sites), sb = bit_at(scfg, n, sites);
        const double l0 = t.wl[rb][0][sb], l1 = t.wl[rb][1][sb];
        const double r0 = t.wr[rb][0][sb], r1 = t.wr[rb][1][sb];
        const double b00 = l0 * r0, b01 = l0 * r1, b10 = l1 * r0, b11 = l1 * r1;
        const double n00 = m00 * b00 + m01 * b10;
        const double n01 = m00 * b01 + m01 * b11;
        const double n10 = m10 * b00 + m11 * b10;
        const double n11 = m10 * b01 + m11 * b11;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
      }
      out.at(s, r) = m00 + m11;
    }
  }
  return out;
}

Operator build_transfer_x(int sites, double x) { return build_transfer(sites, u_of_x(x)); }

Operator build_transfer_bruteforce(int sites, double u) {
  if (sites < 1 || sites > 6) {
    throw std::invalid_argument("build_transfer_bruteforce: keep L <= 6");
  }
  require_u(u);
  const WeightTables t = make_tables(u);
  const std::size_t dim = std::size_t{1} << sites;
  Operator out = Operator::zeros(sites);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t r = 0; r < dim; ++r) {
      double acc = 0.0;
      for (std::size_t g = 0; g < dim; ++g) {
        double prod = 1.0;
        for (int n = 0; n < sites; ++n) {
          const int rb = bit_at(static_cast<unsigned>(r), n, sites);
          const int sb = bit_at(static_cast<unsigned>(s), n, sites);
          const int gb = bit_at(static_cast<unsigned>(g), n, sites);
          const int gb_next = bit_at(static_cast<unsigned>(g), n + 1, sites);
          prod *= t.wl[rb][gb][sb] * t.wr[rb][gb_next][sb];
        }
        acc += prod;
      }
      out.at(s, r) = acc;
    }
  }
  return out;
}

Operator TransferPolynomial::evaluate_hat(double x) const {
  // Horner in x over matrix coefficients.
  Operator acc = coeff.back();
  for (int n = sites - 1; n >= 0; --n) {
    acc *= x;
    acc += coeff[static_cast<std::size_t>(n)];
  }
  return acc;
}

Operator TransferPolynomial::evaluate(double x) const {
  if (x == 0.0) throw std::domain_error("TransferPolynomial::evaluate: x = 0 is a pole");
  Operator hat = evaluate_hat(x);
  const double scale = std::pow(2.0, 2 * sites) / std::pow(x, sites);
  hat *= scale;
  return hat;
}

namespace {

// Inverse of the Vandermonde system for the given nodes, in long double.
std::vector<std::vector<long double>> vandermonde_inverse(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    long double p = 1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= static_cast<long double>(nodes[i]);
    }
    a[i][n + i] = 1.0L;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::fabs(static_cast<double>(a[i][col])) >
          std::fabs(static_cast<double>(a[piv][col]))) {
        piv = i;
      }
    }
    if (a[piv][col] == 0.0L) throw std::runtime_error("transfer_polynomial: singular node set");
    std::swap(a[piv], a[col]);
    const long double inv = 1.0L / a[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const long double f = a[i][col];
      if (f == 0.0L) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<long double>> inv(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

Operator scaled_hat_at(int sites, double x) {
  Operator m = build_transfer_x(sites, x);
  m *= std::pow(x, sites) / std::pow(2.0, 2 * sites);
  return m;
}

}  // namespace

TransferPolynomial transfer_polynomial_at_nodes(int sites, std::vector<double> nodes,
                                                double rtol) {
  if (sites < 1 || sites > 10) {
    throw std::invalid_argument("transfer_polynomial: sites must be in [1, 10]");
  }
  if (nodes.size() != static_cast<std::size_t>(sites) + 1) {
    throw std::invalid_argument("transfer_polynomial: need L+1 nodes");
  }
  constexpr double kValidationNode = 0.617;
  for (double xn : nodes) {
    if (!(xn > 0.0 && xn <= 1.0)) {
      throw std::invalid_argument("transfer_polynomial: nodes must lie in (0, 1]");
    }
    if (std::fabs(xn - kValidationNode) < 1e-6) {
      throw std::invalid_argument("transfer_polynomial: node collides with validation point");
    }
  }

  std::vector<Operator> samples;
  samples.reserve(nodes.size());
  for (double xn : nodes) samples.push_back(scaled_hat_at(sites, xn));

  const auto weights = vandermonde_inverse(nodes);
  TransferPolynomial tp;
  tp.sites = sites;
  tp.coeff.reserve(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    Operator d = Operator::zeros(sites);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      kern::axpy(static_cast<double>(weights[n][i]), samples[i].data(), d.data(), d.size());
    }
    tp.coeff.push_back(std::move(d));
  }

  const Operator probe = scaled_hat_at(sites, kValidationNode);
  const double resid = relative_residual(tp.evaluate_hat(kValidationNode), probe);
  if (!(resid <= rtol)) {
    throw std::runtime_error(
        "transfer_polynomial: validation residual " + std::to_string(resid) +
        " at held-out node exceeds rtol; T is not a degree-L polynomial in x");
  }
  return tp;
}

TransferPolynomial transfer_polynomial(int sites, double rtol) {
  const int count = sites + 1;
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double theta = (2.0 * i + 1.0) * kPi / (2.0 * count);
    nodes[static_cast<std::size_t>(i)] = 0.55 + 0.35 * std::cos(theta);
  }
  return transfer_polynomial_at_nodes(sites, std::move(nodes), rtol);
}

double chebyshev_T(unsigned n, double z) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = z;
  for (unsigned k = 2; k <= n; ++k) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Operator extract_involution(const TransferPolynomial& tp, double rtol) {
  const int sites = tp.sites;
  Operator r = tp.coeff.back();
  r *= std::pow(2.0, sites);
  const double sign = (sites % 2 == 0) ? 1.0 : -1.0;
  r.add_scaled(-sign, Operator::identity(sites));
  const Operator id = Operator::identity(sites);
  const double resid = relative_residual(r * r, id);
  if (!(resid <= rtol)) {
    throw std::runtime_error("extract_involution: R^2 - 1 residual " + std::to_string(resid) +
                             " exceeds rtol " + std::to_string(rtol));
  }
  return r;
}

InversionReport verify_inversion(const TransferPolynomial& tp, const Operator& involution,
                                 double x) {
  const int sites = tp.sites;
  const Operator lhs = build_transfer_x(sites, x) * tp.evaluate(-x);
  const double sign = (sites % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = sign * std::pow(2.0, 2 * sites + 1);
  Operator rhs = Operator::scaled_identity(sites, prefactor * chebyshev_T(2 * static_cast<unsigned>(sites), 1.0 / x));
  rhs.add_scaled(prefactor, involution);
  InversionReport rep;
  rep.sites = sites;
  rep.x = x;
  rep.lhs_norm = lhs.frobenius_norm();
  rep.rhs_norm = rhs.frobenius_norm();
  rep.residual = frobenius_distance(lhs, rhs) / rep.rhs_norm;
  return rep;
}

InversionReport verify_inversion(const TransferPolynomial& tp, double x) {
  return verify_inversion(tp, extract_involution(tp), x);
}

}  // namespace ising::transfer
