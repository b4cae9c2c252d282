#include "nlgate/protocols/verify.hpp"

#include <algorithm>

namespace nlgate::protocols {

qstate::PureState ideal_output(const Protocol& p, const std::vector<Eigen::Vector2cd>& inputs) {
  Eigen::VectorXcd joint = Eigen::VectorXcd::Ones(1);
  for (const auto& in : inputs) {
    joint = qstate::kron(joint, Eigen::VectorXcd(in));
  }
  std::vector<std::string> labels;
  for (const auto& q : p.outputs) labels.push_back(q.label);
  return qstate::PureState(labels, p.gate.ideal.matrix() * joint);
}

namespace {

double branch_agreement(const qstate::PureState& expected, const qstate::PureState& actual,
                        bool exact) {
  if (!exact) return qstate::fidelity_up_to_phase(expected, actual);
  const qstate::PureState aligned = qstate::reorder(actual, expected.labels());
  const double deviation =
      (aligned.amplitudes() - expected.amplitudes()).cwiseAbs().maxCoeff();
  return 1.0 - deviation;  // same pass criterion as the fidelity path
}

}  // namespace

VerifyOutcome verify_protocol(const Protocol& p, const VerifyOptions& options) {
  const std::size_t slots = p.gate.placement.size();
  qstate::Rng rng(options.seed);

  std::vector<std::vector<Eigen::Vector2cd>> input_sets;
  for (std::size_t idx = 0; idx < (std::size_t(1) << slots); ++idx) {
    std::vector<Eigen::Vector2cd> inputs(slots);
    for (std::size_t s = 0; s < slots; ++s) {
      const int bit = (idx >> (slots - 1 - s)) & 1;
      inputs[s] = bit ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0);
    }
    input_sets.push_back(std::move(inputs));
  }
  for (int i = 0; i < options.samples; ++i) {
    std::vector<Eigen::Vector2cd> inputs(slots);
    for (std::size_t s = 0; s < slots; ++s) inputs[s] = qstate::random_qubit(rng);
    input_sets.push_back(std::move(inputs));
  }

  VerifyOutcome out;
  out.ledger_matches = true;
  std::uint64_t trajectory_seed = options.seed;
  for (const auto& inputs : input_sets) {
    const qstate::PureState expected = ideal_output(p, inputs);
    locc::ResourceLedger ledger;
    if (options.exhaustive) {
      const locc::RunResult run = locc::run_protocol(p.program, inputs);
      out.branch_count = int(run.branches.size());
      for (const locc::Branch& b : run.branches) {
        out.worst_fidelity = std::min(
            out.worst_fidelity, branch_agreement(expected, b.state, options.exact_equality));
      }
      ledger = run.ledger;
    } else {
      const locc::SampledRun run = locc::run_sampled(p.program, inputs, trajectory_seed++);
      out.branch_count = 1;
      out.worst_fidelity = std::min(
          out.worst_fidelity, branch_agreement(expected, run.branch.state, options.exact_equality));
      ledger = run.ledger;
    }
    out.ledger = CostReport::from_ledger(ledger);
    out.ledger_matches = out.ledger_matches && (out.ledger == p.expected_cost);
    out.runs += 1;
  }
  out.verified = out.ledger_matches && out.worst_fidelity >= 1.0 - options.tolerance;
  return out;
}

double worst_branch_fidelity(const Protocol& p, const std::vector<Eigen::Vector2cd>& inputs) {
  const qstate::PureState expected = ideal_output(p, inputs);
  const locc::RunResult run = locc::run_protocol(p.program, inputs);
  double worst = 1.0;
  for (const locc::Branch& b : run.branches) {
    worst = std::min(worst, qstate::fidelity_up_to_phase(expected, b.state));
  }
  return worst;
}

}  // namespace nlgate::protocols
