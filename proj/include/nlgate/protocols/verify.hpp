#pragma once

#include "nlgate/protocols/protocols.hpp"
#include "nlgate/qstate/random.hpp"

namespace nlgate::protocols {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 100;                      // random product-state inputs on top of the basis set
  double tolerance = qstate::tol::state;  // fidelity must reach 1 - tolerance
  bool exhaustive = true;                 // false: one sampled trajectory per input
  bool exact_equality = false;            // entrywise match, no per-branch phase freedom
};

struct VerifyOutcome {
  bool verified = false;       // fidelity bar met on every branch AND ledger exact
  bool ledger_matches = false;
  double worst_fidelity = 1.0;
  int branch_count = 0;  // branches of one exhaustive run
  int runs = 0;
  CostReport ledger;  // observed cost of the last run
};

/// Ideal-gate output for the given product input, labelled by the protocol's
/// output qubits in slot order.
qstate::PureState ideal_output(const Protocol& p, const std::vector<Eigen::Vector2cd>& inputs);

/// Runs the protocol on every computational-basis input plus `samples` seeded
/// random product inputs and checks each branch against the ideal gate.
VerifyOutcome verify_protocol(const Protocol& p, const VerifyOptions& options = {});

/// Single-input variant; worst fidelity over the run's branches.
double worst_branch_fidelity(const Protocol& p, const std::vector<Eigen::Vector2cd>& inputs);

}  // namespace nlgate::protocols
