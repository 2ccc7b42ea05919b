#include "ising/operator_core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ising/kernels.hpp"

namespace ising {

namespace {

constexpr int kMaxSites = 12;  // 4096 x 4096, 128 MiB per operator

void require_sites(int sites) {
  if (sites < 1 || sites > kMaxSites) {
    throw std::invalid_argument("Operator: sites must be in [1, " +
                                std::to_string(kMaxSites) + "], got " +
                                std::to_string(sites));
  }
}

void require_same_shape(const Operator& a, const Operator& b) {
  if (a.sites() != b.sites()) {
    throw std::invalid_argument("Operator: dimension mismatch (L=" +
                                std::to_string(a.sites()) + " vs L=" +
                                std::to_string(b.sites()) + ")");
  }
}

}  // namespace

Operator Operator::zeros(int sites) {
  require_sites(sites);
  return Operator(sites, std::size_t{1} << sites);
}

Operator Operator::identity(int sites) {
  Operator m = zeros(sites);
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = 1.0;
  return m;
}

Operator Operator::scaled_identity(int sites, double value) {
  Operator m = zeros(sites);
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = value;
  return m;
}

Operator Operator::diagonal(int sites, std::span<const double> d) {
  Operator m = zeros(sites);
  if (d.size() != m.dim_) throw std::invalid_argument("Operator::diagonal: wrong length");
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = d[i];
  return m;
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_shape(*this, rhs);
  kern::axpy(1.0, rhs.data(), data(), size());
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_shape(*this, rhs);
  kern::axpy(-1.0, rhs.data(), data(), size());
  return *this;
}

Operator& Operator::operator*=(double alpha) {
  kern::scal(alpha, data(), size());
  return *this;
}

Operator& Operator::add_scaled(double alpha, const Operator& rhs) {
  require_same_shape(*this, rhs);
  kern::axpy(alpha, rhs.data(), data(), size());
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_shape(lhs, rhs);
  Operator out = Operator::zeros(lhs.sites());
  kern::gemm(lhs.data(), rhs.data(), out.data(), lhs.dim());
  return out;
}

double Operator::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double Operator::frobenius_norm() const { return std::sqrt(kern::sumsq(data(), size())); }

double Operator::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool Operator::is_finite() const {
  for (double v : a_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Operator Operator::transposed() const {
  Operator t = zeros(sites_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  Operator ab = a * b;
  ab -= b * a;
  return ab;
}

double frobenius_distance(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  return std::sqrt(kern::diffsq(a.data(), b.data(), a.size()));
}

double commutator_residual(const Operator& a, const Operator& b) {
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return commutator(a, b).frobenius_norm() / (na * nb);
}

double relative_residual(const Operator& a, const Operator& b) {
  const double scale = std::max(b.frobenius_norm(), 1e-300);
  return frobenius_distance(a, b) / scale;
}

std::vector<std::complex<double>> eigenvalue_multiset(const Operator& m) {
  if (!m.is_finite()) {
    throw std::invalid_argument("eigenvalue_multiset: operator has non-finite entries");
  }
  using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> map(m.data(), static_cast<Eigen::Index>(m.dim()),
                               static_cast<Eigen::Index>(m.dim()));
  Eigen::EigenSolver<Eigen::MatrixXd> solver;
  solver.compute(Eigen::MatrixXd(map), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(
        "eigenvalue_multiset: QR iteration did not converge for dim=" +
        std::to_string(m.dim()) + " after " +
        std::to_string(40 * static_cast<long>(m.dim())) + " iterations (Eigen info=" +
        std::to_string(static_cast<int>(solver.info())) + ")");
  }
  std::vector<std::complex<double>> ev(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) ev[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return ev;
}

}  // namespace ising
