#include "helpers.hpp"
#include "nlgate/analysis/symmetry.hpp"

using namespace nlgate;
using namespace nlgate::analysis;
namespace g = nlgate::qstate::gates;
using nlgate::qstate::Complex;
using nlgate::qstate::HermitianGenerator;
using nlgate::qstate::Rng;
using nlgate::qstate::Unitary;
using testutil::code_of;
using testutil::max_diff;
using Catch::Matchers::WithinAbs;

namespace {

SymmetrizerQuad identity_quad() {
  const Unitary id = Unitary::identity(2);
  return {id, id, id, id};
}

HermitianGenerator random_rank1(Rng& rng) {
  const Eigen::VectorXcd phi = qstate::random_state_vector(4, rng);
  std::uniform_real_distribution<double> strength(0.1, 3.0);
  return HermitianGenerator(Eigen::MatrixXcd(strength(rng) * phi * phi.adjoint()));
}

}  // namespace

TEST_CASE("swap conjugation reverses the CNOT and is an involution", "[analysis]") {
  const Unitary swapped = swap_conjugate(g::cnot());
  Eigen::Matrix4cd reversed = Eigen::Matrix4cd::Zero();
  reversed(0, 0) = reversed(3, 1) = reversed(2, 2) = reversed(1, 3) = 1;
  CHECK(max_diff(swapped.matrix(), reversed) < qstate::tol::state);

  CHECK(max_diff(swap_conjugate(Unitary::identity(4)).matrix(),
                 Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
  CHECK(max_diff(swap_conjugate(swapped).matrix(), g::cnot().matrix()) < qstate::tol::state);
  CHECK(code_of([] { (void)swap_conjugate(g::x()); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("generators of trivial gates", "[analysis]") {
  const HermitianGenerator zero = generator_of(Unitary::identity(4));
  CHECK(zero.matrix().cwiseAbs().maxCoeff() < qstate::tol::state);

  const double lambda = 2.2;
  Eigen::Vector4cd d;
  d << 1, 1, 1, std::polar(1.0, lambda);
  const HermitianGenerator h = generator_of(Unitary(Eigen::MatrixXcd(d.asDiagonal())));
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(3, 3) = lambda;
  CHECK(max_diff(h.matrix(), expected) < qstate::tol::state);
}

TEST_CASE("generator round-trip reproduces the gate", "[analysis]") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Unitary v = qstate::random_unitary(4, rng);
    const HermitianGenerator h = generator_of(v);
    CHECK(max_diff(exp_i(h).matrix(), v.matrix()) < qstate::tol::state);
    // eigenphases on the principal branch
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix());
    CHECK(eig.eigenvalues().minCoeff() > -3.1415926535897932 - 1e-12);
    CHECK(eig.eigenvalues().maxCoeff() <= 3.1415926535897932 + 1e-12);
  }
}

TEST_CASE("swap conjugation preserves generator spectra", "[analysis]") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianGenerator h = generator_of(qstate::random_unitary(4, rng));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> before(h.matrix());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> after(swap_conjugate(h).matrix());
    CHECK(max_diff(before.eigenvalues(), after.eigenvalues()) < qstate::tol::state);
  }
}

TEST_CASE("the swap condition holds for CNOT with the Hadamard quad", "[analysis]") {
  const SymmetrizerQuad hadamards{g::h(), g::h(), g::h(), g::h()};
  CHECK(check_condition(g::cnot(), hadamards));
  CHECK_FALSE(check_condition(g::cnot(), identity_quad()));
}

TEST_CASE("the condition check is global-phase invariant", "[analysis]") {
  const SymmetrizerQuad hadamards{g::h(), g::h(), g::h(), g::h()};
  for (const double theta : {0.4, 1.9, -2.6}) {
    const Unitary rotated(Eigen::MatrixXcd(std::polar(1.0, theta) * g::cnot().matrix()));
    CHECK(check_condition(rotated, hadamards));
    CHECK_FALSE(check_condition(rotated, identity_quad()));
  }
}

TEST_CASE("rank-1 symmetrizers handle the textbook generators", "[analysis]") {
  // swap-invariant eigenvector: the identity quad already works
  const Eigen::Vector4cd phi_plus = testutil::bell_phi_plus("a", "b").amplitudes();
  const HermitianGenerator symmetric(Eigen::MatrixXcd(1.3 * phi_plus * phi_plus.adjoint()));
  CHECK(check_generator_condition(symmetric, identity_quad()));
  CHECK(check_generator_condition(symmetric, rank1_symmetrizers(symmetric)));

  // |01><01|: the pairing map must exchange |0> and |1>
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(1, 1) = 0.9;
  const HermitianGenerator h01{Eigen::MatrixXcd(m)};
  const SymmetrizerQuad quad = rank1_symmetrizers(h01);
  CHECK(check_generator_condition(h01, quad));
  CHECK(std::abs(std::abs(quad.u1.matrix()(1, 0)) - 1.0) < qstate::tol::state);
  CHECK(std::abs(std::abs(quad.u1.matrix()(0, 1)) - 1.0) < qstate::tol::state);
}

TEST_CASE("rank-1 symmetrizers pass the condition for random generators", "[analysis]") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianGenerator h = random_rank1(rng);
    const SymmetrizerQuad quad = rank1_symmetrizers(h);
    CHECK(check_generator_condition(h, quad));
    CHECK(check_condition(exp_i(h), quad));
  }
}

TEST_CASE("rank discipline is enforced", "[analysis]") {
  Eigen::Matrix4cd two = Eigen::Matrix4cd::Zero();
  two(0, 0) = 1.0;
  two(1, 1) = 0.5;
  CHECK(code_of([&] { (void)rank1_symmetrizers(HermitianGenerator(two)); }) ==
        ErrorCode::RankMismatch);
  CHECK(code_of([&] {
          (void)rank1_symmetrizers(HermitianGenerator(Eigen::Matrix4cd::Zero()));
        }) == ErrorCode::RankMismatch);
}

TEST_CASE("every Bell projector is swap and sigma_z x sigma_z invariant", "[analysis]") {
  const Eigen::Matrix4cd basis = bell_basis();
  const Eigen::MatrixXcd zz = qstate::kron(g::z().matrix(), g::z().matrix());
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd psi = basis.col(k);
    const Eigen::Matrix4cd proj = psi * psi.adjoint();
    const HermitianGenerator h{Eigen::MatrixXcd(proj)};
    CHECK(max_diff(swap_conjugate(h).matrix(), proj) < qstate::tol::state);
    CHECK(max_diff(zz * proj * zz.adjoint(), proj) < qstate::tol::state);
  }
}

TEST_CASE("Bell-diagonal generators satisfy the condition with the identity quad",
          "[analysis]") {
  Rng rng(53);
  std::uniform_real_distribution<double> eigen(-3.0, 3.0);
  const Eigen::Matrix4cd basis = bell_basis();
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector4cd d;
    for (int i = 0; i < 4; ++i) d(i) = eigen(rng);
    const HermitianGenerator h(Eigen::MatrixXcd(basis * d.asDiagonal() * basis.adjoint()));
    const SymmetrizerQuad quad = bell_diagonal_symmetrizers(h);
    CHECK(check_generator_condition(h, quad));
    CHECK(check_condition(exp_i(h), quad));
  }
}

TEST_CASE("non-Bell-diagonal generators are rejected", "[analysis]") {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(1, 1) = 1.0;  // |01><01| mixes Psi+ and Psi-
  CHECK(code_of([&] { (void)bell_diagonal_symmetrizers(HermitianGenerator(m)); }) ==
        ErrorCode::NotBellDiagonal);
}

TEST_CASE("the explicit control-phase quad satisfies the condition", "[analysis]") {
  // degenerate phases give the identity gate; the quad collapses to phases
  const Unitary trivial = lemma5_gate(0.0, 0.0);
  CHECK(max_diff(trivial.matrix(), Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
  CHECK(check_condition(trivial, lemma5_unitaries(0.0, 0.0)));

  // controlled-Z: swap-symmetric on its own and with the explicit quad
  const double pi = 3.14159265358979323846;
  const Unitary cz = lemma5_gate(0.0, pi);
  CHECK(check_condition(cz, lemma5_unitaries(0.0, pi)));
  CHECK(check_condition(cz, identity_quad()));

  Rng rng(59);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 100; ++trial) {
    const double l3 = angle(rng), l4 = angle(rng);
    CHECK(check_condition(lemma5_gate(l3, l4), lemma5_unitaries(l3, l4)));
  }
}

TEST_CASE("the counterexample witness fires exactly when both phases are nonzero",
          "[analysis]") {
  const SpectrumWitness w = counterexample_witness(1.0, 2.0);
  CHECK_THAT(w.spectrum_before[0], WithinAbs(0.0, qstate::tol::state));
  CHECK_THAT(w.spectrum_before[1], WithinAbs(3.0, qstate::tol::state));
  CHECK_THAT(w.spectrum_after[0], WithinAbs(1.0, qstate::tol::state));
  CHECK_THAT(w.spectrum_after[1], WithinAbs(2.0, qstate::tol::state));
  CHECK(w.obstruction());

  const SpectrumWitness degenerate = counterexample_witness(1.0, 0.0);
  CHECK_FALSE(degenerate.obstruction());
}

TEST_CASE("local conjugation cannot move the reduced spectra", "[analysis]") {
  Rng rng(61);
  const HermitianGenerator h = counterexample_generator(1.0, 2.0);
  const Eigen::Matrix2cd reduced = partial_trace_second(h.matrix());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> reference(reduced);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXcd local = qstate::kron(qstate::random_unitary(2, rng).matrix(),
                                                qstate::random_unitary(2, rng).matrix());
    const Eigen::Matrix2cd conjugated =
        partial_trace_second(local * h.matrix() * local.adjoint());
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(conjugated);
    CHECK(max_diff(eig.eigenvalues(), reference.eigenvalues()) < qstate::tol::state);
  }
}

TEST_CASE("the counterexample gate admits the four-unitary fix", "[analysis]") {
  // Eq-(H)-style conjugation fails, but the general quad succeeds
  const double l3 = 1.0, l4 = 2.0;
  CHECK(check_condition(lemma5_gate(l3, l4), lemma5_unitaries(l3, l4)));
  CHECK_FALSE(check_condition(lemma5_gate(l3, l4), identity_quad()));
}

TEST_CASE("the Hadamard sandwich identity holds entrywise", "[analysis]") {
  CHECK(cnot_hadamard_identity());
}

TEST_CASE("both sides of the Hadamard identity act identically on states", "[analysis]") {
  const qstate::Unitary hh(qstate::kron(g::h().matrix(), g::h().matrix()));
  const auto both_sides = [&](const qstate::PureState& in) {
    const qstate::PureState lhs = qstate::apply_unitary(
        qstate::apply_unitary(qstate::apply_unitary(in, hh, {"A", "B"}), g::cnot(), {"A", "B"}),
        hh, {"A", "B"});
    const qstate::PureState rhs = qstate::apply_unitary(in, g::cnot(), {"B", "A"});
    return max_diff(lhs, rhs);
  };

  const qstate::PureState plus_minus =
      tensor(qstate::PureState::single("A", testutil::ket_plus()),
             qstate::PureState::single("B", testutil::ket_minus()));
  CHECK(both_sides(plus_minus) < qstate::tol::state);
  CHECK(both_sides(qstate::PureState::basis({"A", "B"}, 0b01)) < qstate::tol::state);
}
