#pragma once

#include <complex>

#include <Eigen/Dense>

#include "nlgate/errors.hpp"

namespace nlgate::qstate {

using Complex = std::complex<double>;

/// Numerical tolerances shared across the library. Double precision leaves
/// ample headroom for circuits of a few dozen gate applications.
namespace tol {
inline constexpr double norm = 1e-10;     // L2 norm deviation of states
inline constexpr double unitary = 1e-10;  // max entry deviation of U†U from 1
inline constexpr double state = 1e-9;     // entrywise / fidelity comparisons
inline constexpr double prune = 1e-12;    // measurement branches below this probability are dropped
inline constexpr double rank = 1e-9;      // eigenvalue magnitude counted as nonzero
}  // namespace tol

bool is_power_of_two(Eigen::Index n);

/// Dense unitary matrix of power-of-two dimension. The constructor rejects
/// matrices that are non-square, non-finite, or fail U†U = 1 within
/// tol::unitary (max absolute entry deviation).
class Unitary {
 public:
  explicit Unitary(Eigen::MatrixXcd entries);

  Eigen::Index dim() const { return m_.rows(); }
  int qubit_count() const;
  const Eigen::MatrixXcd& matrix() const { return m_; }

  Unitary dagger() const;
  static Unitary identity(Eigen::Index dim);

 private:
  Eigen::MatrixXcd m_;
};

Unitary operator*(const Unitary& a, const Unitary& b);

/// Dense Hermitian matrix of power-of-two dimension; H = H† is enforced
/// within tol::unitary at construction.
class HermitianGenerator {
 public:
  explicit HermitianGenerator(Eigen::MatrixXcd entries);

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Kronecker product, first factor on the most significant qubits.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace nlgate::qstate
