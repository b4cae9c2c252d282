#include "nlgate/protocols/demos.hpp"

#include <cmath>

namespace nlgate::protocols {

namespace g = qstate::gates;

locc::Program dense_coding_program(int phase_bit, int flip_bit) {
  const NodeId alice{"Alice"}, bob{"Bob"};
  ProgramBuilder b("dense_coding[msg=" + std::to_string(phase_bit) +
                   std::to_string(flip_bit) + "]");

  auto [carrier, keeper] = b.bell_pair(alice, bob, "EA", "EB");
  // encoding {1, X, Z, XZ}: sigma_z for the first message bit, sigma_x for the second
  if (phase_bit) b.apply(alice, g::z(), {carrier}, "Z");
  if (flip_bit) b.apply(alice, g::x(), {carrier}, "X");

  const QubitRef filler = b.qubit(bob, "R", Eigen::Vector2cd(1, 0));
  const QubitRef delivered = emit_teleport(b, carrier, bob);
  emit_teleport(b, filler, alice);

  // Bell-basis measurement of the reunited pair
  b.apply(bob, g::cnot(), {delivered, keeper}, "CNOT");
  b.apply(bob, g::h(), {delivered}, "H");
  b.measure(delivered);  // decodes the sigma_z bit
  b.measure(keeper);     // decodes the sigma_x bit

  return b.take();
}

DenseCodingOutcome dense_coding_demo() {
  DenseCodingOutcome out;
  int message = 0;
  for (int phase_bit = 0; phase_bit <= 1; ++phase_bit) {
    for (int flip_bit = 0; flip_bit <= 1; ++flip_bit) {
      const locc::Program program = dense_coding_program(phase_bit, flip_bit);
      const locc::RunResult run = locc::run_protocol(program, {});
      bool decoded = !run.branches.empty();
      for (const locc::Branch& branch : run.branches) {
        const auto& outcomes = branch.outcomes;
        const int z = outcomes[outcomes.size() - 2].second;
        const int x = outcomes[outcomes.size() - 1].second;
        decoded = decoded && z == phase_bit && x == flip_bit;
      }
      out.decoded[message] = decoded;
      out.branch_counts[message] = int(run.branches.size());
      out.ledger = CostReport::from_ledger(run.ledger);
      ++message;
    }
  }
  return out;
}

locc::Program swap_entangling_program() {
  const NodeId alice{"Alice"}, bob{"Bob"};
  ProgramBuilder b("swap_entangling");

  // two node-local Bell pairs, built with local gates (no ebit is consumed here)
  const QubitRef a1 = b.qubit(alice, "A1", Eigen::Vector2cd(1, 0));
  const QubitRef a2 = b.qubit(alice, "A2", Eigen::Vector2cd(1, 0));
  b.apply(alice, g::h(), {a1}, "H");
  b.apply(alice, g::cnot(), {a1, a2}, "CNOT");
  const QubitRef b1 = b.qubit(bob, "B1", Eigen::Vector2cd(1, 0));
  const QubitRef b2 = b.qubit(bob, "B2", Eigen::Vector2cd(1, 0));
  b.apply(bob, g::h(), {b1}, "H");
  b.apply(bob, g::cnot(), {b1, b2}, "CNOT");

  emit_teleport(b, a2, bob);    // becomes A2' at Bob
  emit_teleport(b, b2, alice);  // becomes B2' at Alice

  return b.take();
}

bool SwapEntangleOutcome::established(double tolerance) const {
  const double s = 1.0 / std::sqrt(2.0);
  return std::abs(alice_pair_coefficients(0) - s) <= tolerance &&
         std::abs(alice_pair_coefficients(1) - s) <= tolerance &&
         std::abs(bob_pair_coefficients(0) - s) <= tolerance &&
         std::abs(bob_pair_coefficients(1) - s) <= tolerance;
}

SwapEntangleOutcome swap_entangling_demo() {
  const locc::Program program = swap_entangling_program();
  const locc::RunResult run = locc::run_protocol(program, {});

  SwapEntangleOutcome out;
  out.ledger = CostReport::from_ledger(run.ledger);
  const double s = 1.0 / std::sqrt(2.0);
  double worst_a = -1.0, worst_b = -1.0;
  for (const locc::Branch& branch : run.branches) {
    const auto pair_coefficients = [&](const std::string& stay, const std::string& moved) {
      const qstate::PureState pair = qstate::extract_pure_substate(branch.state, {stay, moved});
      return qstate::schmidt_decompose(pair, stay).coefficients;
    };
    const Eigen::Vector2d ca = pair_coefficients("A1", "A2'");
    const Eigen::Vector2d cb = pair_coefficients("B1", "B2'");
    const double da = std::abs(ca(0) - s) + std::abs(ca(1) - s);
    const double db = std::abs(cb(0) - s) + std::abs(cb(1) - s);
    if (da > worst_a) {
      worst_a = da;
      out.alice_pair_coefficients = ca;
    }
    if (db > worst_b) {
      worst_b = db;
      out.bob_pair_coefficients = cb;
    }
  }
  return out;
}

}  // namespace nlgate::protocols
