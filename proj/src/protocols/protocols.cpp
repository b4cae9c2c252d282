#include "nlgate/protocols/protocols.hpp"

#include <set>

namespace nlgate::protocols {

namespace g = qstate::gates;

int CostReport::bits_total() const {
  int total = 0;
  for (const auto& [_, count] : bits_by_direction) total += count;
  return total;
}

CostReport CostReport::from_ledger(const locc::ResourceLedger& ledger) {
  return {ledger.ebits_consumed, ledger.bits_sent};
}

namespace {

void require_distinct_nodes(const std::vector<QubitRef>& qubits) {
  std::set<std::string> nodes;
  for (const auto& q : qubits) {
    if (!nodes.insert(q.owner.name).second) {
      throw Error(ErrorCode::NotNonlocal,
                  "operands share node '" + q.owner.name + "'; nothing to implement non-locally");
    }
  }
}

void require_one_qubit_gate(const qstate::Unitary& u) {
  if (u.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "expected a one-qubit unitary");
  }
}

/// Shared shape of the CNOT, Toffoli and n-party control-U constructions:
/// copy every control onto a target-side ancilla through one ebit, run the
/// whole gate locally at the target node, then dissolve the ancillas.
Protocol control_u_family(std::string name, const std::vector<QubitRef>& controls,
                          const QubitRef& target, const qstate::Unitary& u,
                          const std::string& gate_tag,
                          const std::vector<std::string>& control_ancillas,
                          const std::vector<std::string>& target_ancillas) {
  require_one_qubit_gate(u);
  std::vector<QubitRef> operands = controls;
  operands.push_back(target);
  require_distinct_nodes(operands);

  const int nc = int(controls.size());
  ProgramBuilder b(name);
  std::vector<QubitRef> control_in, anc_near, anc_far;
  for (int k = 0; k < nc; ++k) {
    control_in.push_back(b.input(controls[k].owner, controls[k].label));
  }
  const QubitRef target_in = b.input(target.owner, target.label);
  for (int k = 0; k < nc; ++k) {
    auto [near, far] =
        b.bell_pair(controls[k].owner, target.owner, control_ancillas[k], target_ancillas[k]);
    anc_near.push_back(near);
    anc_far.push_back(far);
  }

  for (int k = 0; k < nc; ++k) {
    emit_entangled_copy(b, control_in[k], anc_near[k], anc_far[k]);
  }

  std::vector<QubitRef> local_gate_qubits = anc_far;
  local_gate_qubits.push_back(target_in);
  b.apply(target.owner, g::control_u(u, nc), local_gate_qubits, gate_tag);

  for (int k = 0; k < nc; ++k) {
    emit_disentangle(b, anc_far[k], control_in[k]);
  }

  Protocol p;
  p.name = std::move(name);
  p.program = b.take();
  p.gate = {g::control_u(u, nc), operands};
  p.outputs = operands;
  p.expected_cost.ebits = nc;
  for (int k = 0; k < nc; ++k) {
    p.expected_cost.bits_by_direction[{controls[k].owner, target.owner}] += 1;
    p.expected_cost.bits_by_direction[{target.owner, controls[k].owner}] += 1;
  }
  return p;
}

}  // namespace

void emit_entangled_copy(ProgramBuilder& b, const QubitRef& control, const QubitRef& near_half,
                         const QubitRef& far_half) {
  b.apply(control.owner, g::cnot(), {control, near_half}, "CNOT");
  const locc::BitRef m = b.measure(near_half);
  b.send(control.owner, far_half.owner, m);
  b.apply_if(far_half.owner, m, g::x(), {far_half}, "X");
}

void emit_disentangle(ProgramBuilder& b, const QubitRef& ancilla, const QubitRef& origin) {
  b.apply(ancilla.owner, g::h(), {ancilla}, "H");
  const locc::BitRef m = b.measure(ancilla);
  b.send(ancilla.owner, origin.owner, m);
  b.apply_if(origin.owner, m, g::z(), {origin}, "Z");
}

QubitRef emit_teleport(ProgramBuilder& b, const QubitRef& q, const NodeId& to) {
  auto [near, far] = b.bell_pair(q.owner, to, q.label + "_e", q.label + "'");
  b.apply(q.owner, g::cnot(), {q, near}, "CNOT");
  b.apply(q.owner, g::h(), {q}, "H");
  const locc::BitRef phase_bit = b.measure(q);
  const locc::BitRef flip_bit = b.measure(near);
  b.send(q.owner, to, flip_bit);
  b.apply_if(to, flip_bit, g::x(), {far}, "X");
  b.send(q.owner, to, phase_bit);
  b.apply_if(to, phase_bit, g::z(), {far}, "Z");
  return far;
}

Protocol nonlocal_cnot(const QubitRef& control, const QubitRef& target) {
  return control_u_family("nonlocal_cnot", {control}, target, g::x(), "CNOT",
                          {control.label + "1"}, {target.label + "1"});
}

Protocol nonlocal_control_u(const qstate::Unitary& u, const QubitRef& control,
                            const QubitRef& target) {
  return control_u_family("nonlocal_control_u", {control}, target, u, "CU",
                          {control.label + "1"}, {target.label + "1"});
}

Protocol nonlocal_toffoli(const QubitRef& c1, const QubitRef& c2, const QubitRef& target) {
  return control_u_family("nonlocal_toffoli", {c1, c2}, target, g::x(), "Toffoli",
                          {c1.label + "1", c2.label + "1"},
                          {target.label + "1", target.label + "2"});
}

Protocol nonlocal_three_party_control_u(const qstate::Unitary& u, const QubitRef& c1,
                                        const QubitRef& c2, const QubitRef& target) {
  return control_u_family("nonlocal_three_party_control_u", {c1, c2}, target, u, "CCU",
                          {c1.label + "1", c2.label + "1"},
                          {target.label + "1", target.label + "2"});
}

Protocol nonlocal_n_party_control_u(int parties, const qstate::Unitary& u) {
  if (parties < 2) {
    throw Error(ErrorCode::BadArity,
                "need at least a control party and a target party, got " +
                    std::to_string(parties));
  }
  std::vector<QubitRef> controls;
  std::vector<std::string> control_ancillas, target_ancillas;
  for (int k = 1; k < parties; ++k) {
    const std::string idx = std::to_string(k);
    controls.push_back({{"P" + idx}, "P" + idx});
    control_ancillas.push_back("P" + idx + "'");
    target_ancillas.push_back("T" + idx);
  }
  return control_u_family("nonlocal_n_party_control_u[n=" + std::to_string(parties) + "]",
                          controls, {{"T"}, "T"}, u, "CU", control_ancillas, target_ancillas);
}

Protocol teleport(const QubitRef& q, const NodeId& to) {
  if (q.owner == to) {
    throw Error(ErrorCode::NotNonlocal, "teleportation within node '" + to.name + "'");
  }
  ProgramBuilder b("teleport");
  const QubitRef in = b.input(q.owner, q.label);
  const QubitRef out = emit_teleport(b, in, to);

  Protocol p;
  p.name = "teleport";
  p.program = b.take();
  p.gate = {g::identity(1), {q}};
  p.outputs = {out};
  p.expected_cost.ebits = 1;
  p.expected_cost.bits_by_direction[{q.owner, to}] = 2;
  return p;
}

Protocol nonlocal_generic_two_qubit(const qstate::Unitary& u, const QubitRef& a,
                                    const QubitRef& b_ref) {
  if (u.dim() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "expected a two-qubit unitary");
  }
  require_distinct_nodes({a, b_ref});

  ProgramBuilder b("nonlocal_generic_two_qubit");
  const QubitRef in_a = b.input(a.owner, a.label);
  const QubitRef in_b = b.input(b_ref.owner, b_ref.label);
  const QubitRef moved = emit_teleport(b, in_a, b_ref.owner);
  b.apply(b_ref.owner, u, {moved, in_b}, "U");
  const QubitRef back = emit_teleport(b, moved, a.owner);

  Protocol p;
  p.name = "nonlocal_generic_two_qubit";
  p.program = b.take();
  p.gate = {u, {a, b_ref}};
  p.outputs = {back, in_b};
  p.expected_cost.ebits = 2;
  p.expected_cost.bits_by_direction[{a.owner, b_ref.owner}] = 2;
  p.expected_cost.bits_by_direction[{b_ref.owner, a.owner}] = 2;
  return p;
}

Protocol nonlocal_swap(const QubitRef& a, const QubitRef& b_ref) {
  require_distinct_nodes({a, b_ref});

  ProgramBuilder b("nonlocal_swap");
  const QubitRef in_a = b.input(a.owner, a.label);
  const QubitRef in_b = b.input(b_ref.owner, b_ref.label);
  const QubitRef a_at_b = emit_teleport(b, in_a, b_ref.owner);
  const QubitRef b_at_a = emit_teleport(b, in_b, a.owner);

  Protocol p;
  p.name = "nonlocal_swap";
  p.program = b.take();
  p.gate = {g::swap(), {a, b_ref}};
  p.outputs = {b_at_a, a_at_b};  // slot 0 stays at Alice, now carrying b's state
  p.expected_cost.ebits = 2;
  p.expected_cost.bits_by_direction[{a.owner, b_ref.owner}] = 2;
  p.expected_cost.bits_by_direction[{b_ref.owner, a.owner}] = 2;
  return p;
}

Protocol nonlocal_swap_via_cnots(const QubitRef& a, const QubitRef& b_ref) {
  require_distinct_nodes({a, b_ref});

  ProgramBuilder b("nonlocal_swap_via_cnots");
  const QubitRef in_a = b.input(a.owner, a.label);
  const QubitRef in_b = b.input(b_ref.owner, b_ref.label);

  const auto chained_cnot = [&](const QubitRef& control, const QubitRef& target, int stage) {
    const std::string suffix = std::to_string(stage);
    auto [near, far] = b.bell_pair(control.owner, target.owner, control.label + suffix,
                                   target.label + suffix);
    emit_entangled_copy(b, control, near, far);
    b.apply(target.owner, g::cnot(), {far, target}, "CNOT");
    emit_disentangle(b, far, control);
  };

  chained_cnot(in_a, in_b, 1);
  chained_cnot(in_b, in_a, 2);
  chained_cnot(in_a, in_b, 3);

  Protocol p;
  p.name = "nonlocal_swap_via_cnots";
  p.program = b.take();
  p.gate = {g::swap(), {a, b_ref}};
  p.outputs = {in_a, in_b};
  p.expected_cost.ebits = 3;
  p.expected_cost.bits_by_direction[{a.owner, b_ref.owner}] = 3;
  p.expected_cost.bits_by_direction[{b_ref.owner, a.owner}] = 3;
  return p;
}

BaselineCosts baseline_costs(int parties) {
  if (parties < 2) {
    throw Error(ErrorCode::BadArity, "baselines need at least two parties");
  }
  return {3LL * (1LL << (parties - 1)) - 4, 2 * (parties - 1), 4 * (parties - 1)};
}

}  // namespace nlgate::protocols
