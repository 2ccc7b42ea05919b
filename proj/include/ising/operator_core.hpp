#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ising {

// Dense real operator on the 2^L-dimensional spin space of an L-site row.
// Row-major storage; all arithmetic goes through the kernels layer.
class Operator {
 public:
  Operator() = default;

  static Operator zeros(int sites);
  static Operator identity(int sites);
  static Operator diagonal(int sites, std::span<const double> d);
  static Operator scaled_identity(int sites, double value);

  int sites() const { return sites_; }
  std::size_t dim() const { return dim_; }

  double& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  std::size_t size() const { return a_.size(); }

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(double alpha);

  /// Adds alpha * rhs in place.
  Operator& add_scaled(double alpha, const Operator& rhs);

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;
  Operator transposed() const;

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Operator lhs, double alpha) { return lhs *= alpha; }
  friend Operator operator*(double alpha, Operator rhs) { return rhs *= alpha; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  Operator(int sites, std::size_t dim) : sites_(sites), dim_(dim), a_(dim * dim, 0.0) {}

  int sites_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

Operator commutator(const Operator& a, const Operator& b);

double frobenius_distance(const Operator& a, const Operator& b);

/// ||ab - ba||_F / (||a||_F ||b||_F); 0 when either factor vanishes.
double commutator_residual(const Operator& a, const Operator& b);

/// ||a - b||_F / max(||b||_F, floor); measures "a equals b" against b's scale.
double relative_residual(const Operator& a, const Operator& b);

/// All dim eigenvalues with multiplicity, sorted by (real, imaginary) part.
/// Throws std::runtime_error with iteration diagnostics when the QR
/// iteration fails to converge.
std::vector<std::complex<double>> eigenvalue_multiset(const Operator& m);

}  // namespace ising
