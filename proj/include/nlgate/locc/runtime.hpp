#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nlgate/qstate/gates.hpp"
#include "nlgate/qstate/state.hpp"

namespace nlgate::locc {

struct NodeId {
  std::string name;
  auto operator<=>(const NodeId&) const = default;
};

/// Ownership-tagged qubit identity. Ownership never changes over a qubit's
/// lifetime; moving a state to another node means creating a new qubit there.
struct QubitRef {
  NodeId owner;
  std::string label;
  auto operator<=>(const QubitRef&) const = default;
};

/// Handle for one classical bit produced by a measurement. The value is
/// branch-dependent; which nodes know it is tracked by the executor.
struct BitRef {
  int slot = -1;
};

struct ClassicalRecord {
  NodeId from;
  NodeId to;
  int bit;
  int step;  // strictly increasing within a branch
};

struct ResourceLedger {
  int ebits_consumed = 0;
  std::map<std::pair<NodeId, NodeId>, int> bits_sent;

  int bits_total() const;
  friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

/// One measurement-outcome path through a protocol run.
struct Branch {
  double probability = 1.0;
  qstate::PureState state = qstate::PureState::vacuum();
  std::vector<ClassicalRecord> transcript;
  std::vector<std::pair<QubitRef, int>> outcomes;
};

// --- instruction set -------------------------------------------------------

struct AllocInput {
  NodeId node;
  std::string label;
  int input_index;
};
struct AllocQubit {
  NodeId node;
  std::string label;
  Eigen::Vector2cd init;
};
struct AllocBellPair {
  NodeId node_a, node_b;
  std::string label_a, label_b;
};
struct LocalApply {
  NodeId node;
  qstate::Unitary u;
  std::vector<std::string> targets;
  std::string tag;  // gate name for traces
};
struct MeasureQubit {
  NodeId node;
  std::string label;
  int slot;
};
struct SendBit {
  NodeId from, to;
  int slot;
};
struct ConditionalApply {
  NodeId node;
  int slot;
  qstate::Unitary u;
  std::vector<std::string> targets;
  std::string tag;
};
/// Sends only in branches where the condition bit is 1. Any program whose
/// branches end up disagreeing on channel use is rejected by the executor
/// with NonUniformCommunication.
struct SendBitIf {
  int condition_slot;
  NodeId from, to;
  int slot;
};

using Instruction = std::variant<AllocInput, AllocQubit, AllocBellPair, LocalApply,
                                 MeasureQubit, SendBit, ConditionalApply, SendBitIf>;

struct InputSlot {
  NodeId node;
  std::string label;
};

/// Immutable protocol program: a straight-line instruction list whose input
/// qubits are bound at run time.
struct Program {
  std::string name;
  std::vector<InputSlot> inputs;
  std::vector<Instruction> instructions;
  int slot_count = 0;
};

/// Convenience layer for assembling programs. Deliberately unvalidated:
/// every rule (locality, knowledge, label uniqueness) is enforced by the
/// executor, so tests can assemble malformed programs too.
class ProgramBuilder {
 public:
  explicit ProgramBuilder(std::string name) { program_.name = std::move(name); }

  QubitRef input(const NodeId& node, const std::string& label);
  QubitRef qubit(const NodeId& node, const std::string& label, const Eigen::Vector2cd& init);
  std::pair<QubitRef, QubitRef> bell_pair(const NodeId& a, const NodeId& b,
                                          const std::string& label_a,
                                          const std::string& label_b);
  void apply(const NodeId& node, const qstate::Unitary& u, const std::vector<QubitRef>& qubits,
             std::string tag = "");
  BitRef measure(const QubitRef& q);
  void send(const NodeId& from, const NodeId& to, BitRef bit);
  void apply_if(const NodeId& node, BitRef bit, const qstate::Unitary& u,
                const std::vector<QubitRef>& qubits, std::string tag = "");
  void send_if(BitRef condition, const NodeId& from, const NodeId& to, BitRef bit);

  Program take() { return std::move(program_); }

 private:
  Program program_;
};

struct RunResult {
  std::vector<Branch> branches;
  ResourceLedger ledger;
};

/// Depth-first enumeration of every measurement branch (outcome 0 explored
/// before 1). Branch probabilities sum to 1; the ledger is validated to be
/// identical across branches and counted once per run.
RunResult run_protocol(const Program& p, const std::vector<Eigen::Vector2cd>& inputs);

/// Called after every instruction of a sampled run with a short description
/// and the current global state.
using TraceSink = std::function<void(const std::string&, const qstate::PureState&)>;

struct SampledRun {
  Branch branch;
  ResourceLedger ledger;
};

/// Single seeded trajectory: measurement outcomes are sampled from the branch
/// probabilities instead of enumerated.
SampledRun run_sampled(const Program& p, const std::vector<Eigen::Vector2cd>& inputs,
                       std::uint64_t seed, const TraceSink& trace = {});

}  // namespace nlgate::locc
