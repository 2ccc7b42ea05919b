#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ising/exact.hpp"
#include "ising/operator_core.hpp"

namespace ising::tl {

// One periodic Temperley-Lieb generator e_i, i taken modulo 2L into
// {1..2L}.  Even-index generators are diagonal; odd-index generators act
// on a single site.  Both admit O(dim^2) left/right multiplication, which
// keeps the nested-commutator towers cheap.
struct Generator {
  int sites = 0;
  int index = 0;  // normalized to 1..2L

  Generator(int sites_, int index_);

  bool is_diagonal() const { return index % 2 == 0; }

  Operator dense() const;

  /// e * x
  Operator times(const Operator& x) const;
  /// x * e
  Operator rtimes(const Operator& x) const;
};

/// Dense matrix of e_i.
Operator generator(int sites, int index);

/// [e, x] using the sparse action of the generator.
Operator generator_commutator(const Generator& e, const Operator& x);

/// H_{2k-1} = sqrt(2) sum_{n=1}^{2L} [e_n, [e_{n+1}, ... [e_{n+2k-3}, e_{n+2k-2}]...]];
/// H_1 is sqrt(2) times the sum of the bare generators.
Operator hamiltonian_tower(int sites, int order_k);

// Exact integer coefficients of the odd-order recursion
//   A_{2k-1} = lead * H_{2k-1} + sum_{m=1}^{k-1} coeff[m-1] * A_{2(k-m)-1}
// with lead = (2k-2)!/2^{k-1} and
// coeff[m-1] = (-1)^{m+1}/m * C(2k-m-2, m-1) * (2k-1)!/(2k-2m-2)!.
struct OddRecursion {
  exact::BigInt lead;
  std::vector<exact::BigInt> coeff;
};
OddRecursion odd_recursion_coefficients(int k);

/// A_{2k-1}; requires L > k-1 (below the threshold the tower degenerates
/// and is out of scope), else throws std::domain_error.
Operator iom_odd(int sites, int order_k);

/// Scalar of A_{2n} = -2n ((2n-1)!/n!)^2 L (the operator is this times the
/// identity); requires L > n.
double iom_even(int sites, int order_n);

// Commuting family A_1..A_K at fixed L, built once and reused.  Odd orders
// are operators, even orders scalars times the identity.
struct IomTower {
  int sites = 0;
  int max_order = 0;
  std::vector<Operator> odd;  // A_1, A_3, ... in order
  std::vector<double> even;   // A_2, A_4, ... scalar parts

  static IomTower build(int sites, int max_order);

  const Operator& odd_op(int order) const;  // order = 2k-1
  double even_scalar(int order) const;      // order = 2n
  Operator as_operator(int order) const;    // any order <= max_order
};

/// Complete Bell polynomial B_n(args[0..n-1]) by the recurrence
/// B_{r+1} = sum_j C(r, j) B_{r-j} args[j].  The arguments must pairwise
/// commute within commute_rtol * ||a|| ||b|| or the call throws.
Operator bell_polynomial(std::span<const Operator> args, int n, double commute_rtol = 1e-8);

/// B_0..B_K in one pass (single commutation pre-check).
std::vector<Operator> bell_sequence(std::span<const Operator> args, int max_n,
                                    double commute_rtol = 1e-8);

/// D_n = B_n(A_1..A_n) / (2^n n!), n <= L.
Operator build_D(const IomTower& tower, int n);
Operator build_D(int sites, int n);

/// D_0..D_L assembled from one Bell sequence.
std::vector<Operator> build_D_all(const IomTower& tower);

/// (Pi+, Pi-) = ((1 +- R)/2).  Checks R^2 = I within rtol.
std::pair<Operator, Operator> make_projectors(const Operator& involution, double rtol = 1e-9);

/// ||B_L(A_1..A_L)/(2 L!) - ((-1)^L 1 + R)/2|| / ||rhs||.
double projector_bell_residual(const IomTower& tower, const Operator& involution);

/// Projectors with the full verification: idempotency, completeness,
/// orthogonality, and the Bell-polynomial form with the even/odd-L sign
/// (even L: Pi+ = B_L/(2 L!), odd L: Pi- = -B_L/(2 L!)).
std::pair<Operator, Operator> projectors(const IomTower& tower, const Operator& involution,
                                         double rtol = 1e-8);

}  // namespace ising::tl
