#include "nlgate/qstate/random.hpp"

namespace nlgate::qstate {

namespace {

Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

Eigen::Vector2cd random_qubit(Rng& rng) {
  Eigen::Vector2cd v = gaussian_matrix(2, 1, rng);
  return v / v.norm();
}

Eigen::VectorXcd random_state_vector(Eigen::Index dim, Rng& rng) {
  Eigen::VectorXcd v = gaussian_matrix(dim, 1, rng);
  return v / v.norm();
}

Unitary random_unitary(Eigen::Index dim, Rng& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return Unitary(q);
}

}  // namespace nlgate::qstate
