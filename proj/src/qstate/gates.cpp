#include "nlgate/qstate/gates.hpp"

#include <cmath>

namespace nlgate::qstate::gates {

Unitary identity(int qubits) {
  return Unitary::identity(Eigen::Index(1) << qubits);
}

Unitary x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return Unitary(m);
}

Unitary z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return Unitary(m);
}

Unitary h() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  m << s, s, s, -s;
  return Unitary(m);
}

Unitary cnot() { return control_u(x(), 1); }

Unitary toffoli() { return control_u(x(), 2); }

Unitary swap() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return Unitary(m);
}

Unitary control_u(const Unitary& u, int controls) {
  if (u.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "control_u expects a one-qubit unitary");
  }
  if (controls < 1) {
    throw Error(ErrorCode::BadArity, "control_u needs at least one control");
  }
  const Eigen::Index dim = Eigen::Index(1) << (controls + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  m.block(dim - 2, dim - 2, 2, 2) = u.matrix();
  return Unitary(m);
}

}  // namespace nlgate::qstate::gates
