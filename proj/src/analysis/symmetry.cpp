#include "nlgate/analysis/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nlgate::analysis {

using qstate::Complex;
namespace tol = qstate::tol;

namespace {

void require_dim(const Eigen::MatrixXcd& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be " +
                                                  std::to_string(dim) + "-dimensional");
  }
}

Eigen::MatrixXcd swap_matrix() { return qstate::gates::swap().matrix(); }

Eigen::MatrixXcd quad_conjugation(const Eigen::MatrixXcd& m, const SymmetrizerQuad& q) {
  for (const Unitary* u : {&q.u1, &q.u2, &q.u3, &q.u4}) {
    require_dim(u->matrix(), 2, "symmetrizer entry");
  }
  return qstate::kron(q.u1.matrix(), q.u2.matrix()) * m *
         qstate::kron(q.u3.matrix(), q.u4.matrix());
}

}  // namespace

bool SpectrumWitness::obstruction() const {
  return std::abs(spectrum_before[0] - spectrum_after[0]) > tol::state ||
         std::abs(spectrum_before[1] - spectrum_after[1]) > tol::state;
}

Unitary swap_conjugate(const Unitary& u) {
  require_dim(u.matrix(), 4, "gate");
  return Unitary(swap_matrix() * u.matrix() * swap_matrix());
}

HermitianGenerator swap_conjugate(const HermitianGenerator& h) {
  require_dim(h.matrix(), 4, "generator");
  return HermitianGenerator(swap_matrix() * h.matrix() * swap_matrix());
}

HermitianGenerator generator_of(const Unitary& v) {
  // a unitary is normal, so its Schur form is diagonal and Q is unitary
  const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(v.matrix());
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::VectorXd phases(v.dim());
  for (Eigen::Index i = 0; i < v.dim(); ++i) {
    double theta = std::arg(schur.matrixT()(i, i));
    if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;  // branch (-pi, pi]
    phases(i) = theta;
  }
  const Eigen::MatrixXcd h = q * phases.asDiagonal() * q.adjoint();
  return HermitianGenerator((h + h.adjoint()).eval() / 2.0);  // strip roundoff skew
}

Unitary exp_i(const HermitianGenerator& h) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix());
  Eigen::VectorXcd phases(h.dim());
  for (Eigen::Index i = 0; i < h.dim(); ++i) {
    phases(i) = std::polar(1.0, eig.eigenvalues()(i));
  }
  return Unitary(eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint());
}

bool check_condition(const Unitary& uab, const SymmetrizerQuad& quad) {
  require_dim(uab.matrix(), 4, "gate");
  const Eigen::MatrixXcd lhs = swap_matrix() * uab.matrix() * swap_matrix();
  const Eigen::MatrixXcd rhs = quad_conjugation(uab.matrix(), quad);
  // rhs = e^{i theta} lhs  iff  lhs† rhs is a phase times the identity
  const Eigen::MatrixXcd product = lhs.adjoint() * rhs;
  const Complex phase = product(0, 0);
  if (std::abs(std::abs(phase) - 1.0) > tol::state) return false;
  const Eigen::MatrixXcd deviation =
      product - phase / std::abs(phase) * Eigen::MatrixXcd::Identity(4, 4);
  return deviation.cwiseAbs().maxCoeff() <= tol::state;
}

bool check_generator_condition(const HermitianGenerator& h, const SymmetrizerQuad& quad) {
  require_dim(h.matrix(), 4, "generator");
  const Eigen::MatrixXcd lhs = swap_matrix() * h.matrix() * swap_matrix();
  const Eigen::MatrixXcd rhs = quad_conjugation(h.matrix(), quad);
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol::state;
}

SymmetrizerQuad rank1_symmetrizers(const HermitianGenerator& h) {
  require_dim(h.matrix(), 4, "generator");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix());
  int rank = 0;
  Eigen::Index principal = -1;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (std::abs(eig.eigenvalues()(i)) > tol::rank) {
      ++rank;
      principal = i;
    }
  }
  if (rank != 1) {
    throw Error(ErrorCode::RankMismatch,
                "generator has " + std::to_string(rank) + " non-vanishing eigenvalues");
  }

  // Schmidt-decompose the lone eigenvector and pair the two local bases.
  const Eigen::VectorXcd phi = eig.eigenvectors().col(principal);
  Eigen::Matrix2cd reshaped;
  reshaped << phi(0), phi(1), phi(2), phi(3);
  const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(reshaped,
                                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2cd basis_a = svd.matrixU();
  const Eigen::Matrix2cd basis_b = svd.matrixV().conjugate();

  // maps |k> to |k~>; its adjoint maps back
  const Unitary u(Eigen::MatrixXcd(basis_b * basis_a.adjoint()));
  const SymmetrizerQuad quad{u, u.dagger(), u.dagger(), u};
  if (!check_generator_condition(h, quad)) {
    // degenerate Schmidt coefficients admit the reverse pairing instead
    const SymmetrizerQuad reversed{u.dagger(), u, u, u.dagger()};
    if (check_generator_condition(h, reversed)) return reversed;
  }
  return quad;
}

Eigen::Matrix4cd bell_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd b;
  // columns: Phi+ = (|00>+|11>)/sqrt2, Phi-, Psi+ = (|01>+|10>)/sqrt2, Psi-
  b << s, s, 0, 0,  //
      0, 0, s, s,   //
      0, 0, s, -s,  //
      s, -s, 0, 0;
  return b;
}

SymmetrizerQuad bell_diagonal_symmetrizers(const HermitianGenerator& h) {
  require_dim(h.matrix(), 4, "generator");
  const Eigen::Matrix4cd b = bell_basis();
  const Eigen::Matrix4cd in_bell = b.adjoint() * h.matrix() * b;
  Eigen::Matrix4cd off = in_bell;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol::state) {
    throw Error(ErrorCode::NotBellDiagonal, "generator has off-diagonal Bell-basis entries");
  }
  const Unitary id = Unitary::identity(2);
  return {id, id, id, id};
}

Unitary lemma5_gate(double lambda3, double lambda4) {
  Eigen::Vector4cd d;
  d << 1.0, 1.0, std::polar(1.0, lambda3), std::polar(1.0, lambda4);
  return Unitary(Eigen::MatrixXcd(d.asDiagonal()));
}

SymmetrizerQuad lemma5_unitaries(double lambda3, double lambda4) {
  const auto diag = [](Complex a, Complex b) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = a;
    m(1, 1) = b;
    return Unitary(Eigen::MatrixXcd(m));
  };
  return {
      diag(std::polar(1.0, lambda3 - lambda4), std::polar(1.0, -lambda4)),
      diag(std::polar(1.0, -(lambda3 - lambda4)), 1.0),
      Unitary::identity(2),
      diag(1.0, std::polar(1.0, lambda4)),
  };
}

HermitianGenerator counterexample_generator(double lambda3, double lambda4) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(2, 2) = lambda3;  // |10><10|
  m(3, 3) = lambda4;  // |11><11|
  return HermitianGenerator(Eigen::MatrixXcd(m));
}

Eigen::Matrix2cd partial_trace_second(const Eigen::MatrixXcd& m) {
  require_dim(m, 4, "operator");
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    }
  }
  return out;
}

namespace {

std::array<double, 2> sorted_spectrum(const Eigen::Matrix2cd& m) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(m);
  std::array<double, 2> s{eig.eigenvalues()(0), eig.eigenvalues()(1)};
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

SpectrumWitness counterexample_witness(double lambda3, double lambda4) {
  const HermitianGenerator h = counterexample_generator(lambda3, lambda4);
  SpectrumWitness w;
  w.spectrum_before = sorted_spectrum(partial_trace_second(h.matrix()));
  w.spectrum_after = sorted_spectrum(partial_trace_second(swap_conjugate(h).matrix()));
  return w;
}

bool cnot_hadamard_identity() {
  const Eigen::MatrixXcd cnot = qstate::gates::cnot().matrix();
  const Eigen::MatrixXcd hh = qstate::kron(qstate::gates::h().matrix(), qstate::gates::h().matrix());
  const Eigen::MatrixXcd sandwiched = hh * cnot * hh;
  const Eigen::MatrixXcd swapped = swap_matrix() * cnot * swap_matrix();

  Eigen::Matrix4cd reversed = Eigen::Matrix4cd::Zero();  // control on the second qubit
  reversed(0, 0) = 1;
  reversed(3, 1) = 1;
  reversed(2, 2) = 1;
  reversed(1, 3) = 1;

  return (sandwiched - reversed).cwiseAbs().maxCoeff() <= tol::state &&
         (swapped - reversed).cwiseAbs().maxCoeff() <= tol::state;
}

}  // namespace nlgate::analysis
