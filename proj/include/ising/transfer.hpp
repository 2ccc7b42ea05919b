#pragma once

#include <vector>

#include "ising/operator_core.hpp"

namespace ising::transfer {

// Spin configuration of an L-site row.  Bit k of the index encodes the
// spin at site k+1: bit 0 -> +1, bit 1 -> -1.  Site numbers are read
// modulo L, so site L+1 is site 1.
struct SpinConfig {
  int sites = 0;
  unsigned bits = 0;

  static SpinConfig from_index(int sites, unsigned index) { return {sites, index}; }
  unsigned index() const { return bits; }

  /// Spin at 1-based site n, periodic in n.
  int spin(int n) const {
    const int k = ((n - 1) % sites + sites) % sites;
    return (bits >> k) & 1U ? -1 : +1;
  }
};

/// Right Boltzmann weight W_R(rho; tau; sigma | u), u in (0, pi/4).
double weight_right(int rho, int tau, int sigma, double u);

/// Left Boltzmann weight W_L(rho; tau; sigma | u), u in (0, pi/4).
double weight_left(int rho, int tau, int sigma, double u);

double x_of_u(double u);  // sin(4u)
double u_of_x(double x);  // asin(x)/4, the branch in (0, pi/8]

/// Periodic row transfer matrix at spectral parameter u; 1 <= L <= 12.
/// The gauge-spin sum is contracted as a trace of an ordered product of L
/// 2x2 site blocks (O(L 4^L) total), never as a configuration sum.
Operator build_transfer(int sites, double u);

/// Transfer matrix at x = sin(4u), x in (0, 1].
Operator build_transfer_x(int sites, double x);

/// Test oracle: the same matrix by direct summation over all 2^L gauge
/// configurations.  Exponential cost; keep L small.
Operator build_transfer_bruteforce(int sites, double u);

// Matrix coefficients of T(x) = 2^{2L} x^{-L} sum_{n=0}^{L} D_n x^n.
struct TransferPolynomial {
  int sites = 0;
  std::vector<Operator> coeff;  // D_0 .. D_L

  /// sum_n D_n x^n, valid for any x (including negative).
  Operator evaluate_hat(double x) const;

  /// Full T(x) = 2^{2L} x^{-L} * evaluate_hat(x); x must be nonzero.
  Operator evaluate(double x) const;
};

/// Recovers D_0..D_L from L+1 Chebyshev-spaced sample points in [0.2, 0.9]
/// and validates the reconstruction at a held-out node; 1 <= L <= 10.
/// A validation residual above rtol means T is not a degree-L polynomial
/// in x, i.e. a construction bug, and throws.
TransferPolynomial transfer_polynomial(int sites, double rtol = 1e-8);

/// As above with caller-chosen interpolation nodes (L+1 distinct values).
TransferPolynomial transfer_polynomial_at_nodes(int sites, std::vector<double> nodes,
                                                double rtol = 1e-8);

/// First-kind Chebyshev polynomial by the three-term recurrence; valid for
/// arguments outside [-1, 1] as well.
double chebyshev_T(unsigned n, double z);

/// R = 2^L D_L - (-1)^L I.  Throws unless R^2 = I within rtol.
Operator extract_involution(const TransferPolynomial& tp, double rtol = 1e-9);

struct InversionReport {
  int sites = 0;
  double x = 0.0;
  double residual = 0.0;  // ||T(x)T(-x) - RHS|| / ||RHS||
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
};

/// Functional-equation check T(x)T(-x) = (-1)^L 2^{2L+1} (T_{2L}(1/x) I + R).
/// T(x) is built directly from the weights; T(-x) comes from the polynomial
/// form, the only route to negative x.
InversionReport verify_inversion(const TransferPolynomial& tp, const Operator& involution,
                                 double x);
InversionReport verify_inversion(const TransferPolynomial& tp, double x);

}  // namespace ising::transfer
