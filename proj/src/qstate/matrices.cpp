#include "nlgate/qstate/matrices.hpp"

namespace nlgate::qstate {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void require_square_pow2_finite(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows())) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix must be square with power-of-two dimension, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::NotFinite, "matrix has NaN or Inf entries");
  }
}

}  // namespace

Unitary::Unitary(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  require_square_pow2_finite(m_);
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  const double dev =
      (gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
  if (dev > tol::unitary) {
    throw Error(ErrorCode::NotUnitary,
                "U†U deviates from identity by " + std::to_string(dev));
  }
}

int Unitary::qubit_count() const {
  int n = 0;
  for (Eigen::Index d = dim(); d > 1; d >>= 1) ++n;
  return n;
}

Unitary Unitary::dagger() const { return Unitary(m_.adjoint()); }

Unitary Unitary::identity(Eigen::Index dim) {
  return Unitary(Eigen::MatrixXcd::Identity(dim, dim));
}

Unitary operator*(const Unitary& a, const Unitary& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "unitary product dimension mismatch");
  }
  return Unitary(a.matrix() * b.matrix());
}

HermitianGenerator::HermitianGenerator(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  require_square_pow2_finite(m_);
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol::unitary) {
    throw Error(ErrorCode::NotHermitian,
                "H deviates from H† by " + std::to_string(dev));
  }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

}  // namespace nlgate::qstate
