#pragma once

#include "nlgate/locc/runtime.hpp"

namespace nlgate::protocols {

using locc::NodeId;
using locc::ProgramBuilder;
using locc::QubitRef;

/// Resource cost of one protocol run: ebits consumed plus directed classical
/// bit counts. Costs declared by a protocol are exact, not bounds.
struct CostReport {
  int ebits = 0;
  std::map<std::pair<NodeId, NodeId>, int> bits_by_direction;

  int bits_total() const;
  static CostReport from_ledger(const locc::ResourceLedger& ledger);
  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// The ideal gate a protocol implements, with the qubit each tensor slot is
/// placed on. Slots of a non-local gate span at least two distinct nodes.
struct GateSpec {
  qstate::Unitary ideal = qstate::Unitary::identity(2);
  std::vector<QubitRef> placement;
};

/// A runnable local implementation of a non-local gate: the program, the gate
/// it must reproduce, where each slot ends up after the run, and the exact
/// resource cost it is required to have.
struct Protocol {
  std::string name;
  locc::Program program;
  GateSpec gate;
  std::vector<QubitRef> outputs;  // slot order; may differ from placement after teleports
  CostReport expected_cost;
};

// --- circuit fragments -------------------------------------------------------

/// Copies the computational value of `control` onto `far_half` through a
/// shared Bell pair: local CNOT onto `near_half`, measurement, one classical
/// bit to the far node, conditional NOT there. `near_half` is consumed.
void emit_entangled_copy(ProgramBuilder& b, const QubitRef& control, const QubitRef& near_half,
                         const QubitRef& far_half);

/// Removes an ancilla that carries a copy of `origin`'s computational value:
/// Hadamard, measurement, one classical bit back, conditional sigma_z on
/// `origin`. The ancilla is consumed.
void emit_disentangle(ProgramBuilder& b, const QubitRef& ancilla, const QubitRef& origin);

/// Standard teleportation of `q` to node `to` through a fresh Bell pair:
/// local CNOT and Hadamard, two measurements, two classical bits, conditional
/// X then Z. Returns the new qubit (label q.label + "'").
QubitRef emit_teleport(ProgramBuilder& b, const QubitRef& q, const NodeId& to);

// --- protocols ---------------------------------------------------------------

/// CNOT between remote control and target using one ebit and one classical
/// bit in each direction.
Protocol nonlocal_cnot(const QubitRef& control = {{"Alice"}, "A"},
                       const QubitRef& target = {{"Bob"}, "B"});

/// Same circuit with the target-side CNOT replaced by a control-U; identical
/// cost.
Protocol nonlocal_control_u(const qstate::Unitary& u,
                            const QubitRef& control = {{"Alice"}, "A"},
                            const QubitRef& target = {{"Bob"}, "B"});

/// Teleportation as a protocol of its own: one ebit, two bits source->dest.
Protocol teleport(const QubitRef& q = {{"Alice"}, "A"}, const NodeId& to = {"Bob"});

/// Any two-qubit gate: teleport over, apply locally, teleport back.
/// Two ebits, two bits each direction.
Protocol nonlocal_generic_two_qubit(const qstate::Unitary& u,
                                    const QubitRef& a = {{"Alice"}, "A"},
                                    const QubitRef& b = {{"Bob"}, "B"});

/// State swap by two independent teleportations, meeting the two-ebit,
/// two-bits-each-way lower bound exactly.
Protocol nonlocal_swap(const QubitRef& a = {{"Alice"}, "A"},
                       const QubitRef& b = {{"Bob"}, "B"});

/// Deliberately suboptimal swap built from three chained non-local CNOTs
/// (three ebits, three bits each way), kept for cost comparison.
Protocol nonlocal_swap_via_cnots(const QubitRef& a = {{"Alice"}, "A"},
                                 const QubitRef& b = {{"Bob"}, "B"});

/// Toffoli across three nodes: two ebits and four classical bits, one per
/// control-target direction.
Protocol nonlocal_toffoli(const QubitRef& c1 = {{"Alice"}, "A"},
                          const QubitRef& c2 = {{"Bob"}, "B"},
                          const QubitRef& target = {{"Clare"}, "C"});

/// Toffoli construction with the local Toffoli replaced by a local
/// three-party control-U; same cost.
Protocol nonlocal_three_party_control_u(const qstate::Unitary& u,
                                        const QubitRef& c1 = {{"Alice"}, "A"},
                                        const QubitRef& c2 = {{"Bob"}, "B"},
                                        const QubitRef& target = {{"Clare"}, "C"});

/// Control-U with parties P1..P(n-1) holding one control each and party T the
/// target: n-1 ebits and 2(n-1) classical bits.
Protocol nonlocal_n_party_control_u(int parties, const qstate::Unitary& u);

/// Reference costs for an n-party control-U done without the dedicated
/// protocol: gate-array simulation (3*2^(n-1) - 4 ebits) and double
/// teleportation of every remote qubit (2(n-1) ebits, 4(n-1) bits).
struct BaselineCosts {
  long long gate_sim_ebits;
  int teleport_ebits;
  int teleport_bits;
  friend bool operator==(const BaselineCosts&, const BaselineCosts&) = default;
};

BaselineCosts baseline_costs(int parties);

}  // namespace nlgate::protocols
