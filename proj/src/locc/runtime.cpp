#include "nlgate/locc/runtime.hpp"

#include <random>

#include "nlgate/qstate/random.hpp"
#include <set>
#include <sstream>

namespace nlgate::locc {

int ResourceLedger::bits_total() const {
  int total = 0;
  for (const auto& [_, count] : bits_sent) total += count;
  return total;
}

// --- builder ----------------------------------------------------------------

QubitRef ProgramBuilder::input(const NodeId& node, const std::string& label) {
  program_.inputs.push_back({node, label});
  program_.instructions.push_back(AllocInput{node, label, int(program_.inputs.size()) - 1});
  return {node, label};
}

QubitRef ProgramBuilder::qubit(const NodeId& node, const std::string& label,
                               const Eigen::Vector2cd& init) {
  program_.instructions.push_back(AllocQubit{node, label, init});
  return {node, label};
}

std::pair<QubitRef, QubitRef> ProgramBuilder::bell_pair(const NodeId& a, const NodeId& b,
                                                        const std::string& label_a,
                                                        const std::string& label_b) {
  program_.instructions.push_back(AllocBellPair{a, b, label_a, label_b});
  return {QubitRef{a, label_a}, QubitRef{b, label_b}};
}

void ProgramBuilder::apply(const NodeId& node, const qstate::Unitary& u,
                           const std::vector<QubitRef>& qubits, std::string tag) {
  std::vector<std::string> targets;
  for (const auto& q : qubits) targets.push_back(q.label);
  program_.instructions.push_back(LocalApply{node, u, std::move(targets), std::move(tag)});
}

BitRef ProgramBuilder::measure(const QubitRef& q) {
  const int slot = program_.slot_count++;
  program_.instructions.push_back(MeasureQubit{q.owner, q.label, slot});
  return {slot};
}

void ProgramBuilder::send(const NodeId& from, const NodeId& to, BitRef bit) {
  program_.instructions.push_back(SendBit{from, to, bit.slot});
}

void ProgramBuilder::apply_if(const NodeId& node, BitRef bit, const qstate::Unitary& u,
                              const std::vector<QubitRef>& qubits, std::string tag) {
  std::vector<std::string> targets;
  for (const auto& q : qubits) targets.push_back(q.label);
  program_.instructions.push_back(
      ConditionalApply{node, bit.slot, u, std::move(targets), std::move(tag)});
}

void ProgramBuilder::send_if(BitRef condition, const NodeId& from, const NodeId& to,
                             BitRef bit) {
  program_.instructions.push_back(SendBitIf{condition.slot, from, to, bit.slot});
}

// --- executor ----------------------------------------------------------------

namespace {

struct Frame {
  qstate::PureState state = qstate::PureState::vacuum();
  std::map<std::string, NodeId> owner;          // live qubits only
  std::vector<std::optional<int>> bits;         // slot -> value on this path
  std::vector<std::set<std::string>> known;     // slot -> nodes holding the bit
  double probability = 1.0;
  std::vector<ClassicalRecord> transcript;
  std::vector<std::pair<QubitRef, int>> outcomes;
  std::vector<std::pair<NodeId, NodeId>> channel_uses;
  int ebits = 0;
  int step = 0;
};

const NodeId& owner_of(const Frame& f, const std::string& label) {
  const auto it = f.owner.find(label);
  if (it == f.owner.end()) {
    throw Error(ErrorCode::UnknownQubit, "no live qubit '" + label + "'");
  }
  return it->second;
}

void require_local(const Frame& f, const NodeId& node, const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    const NodeId& owner = owner_of(f, l);
    if (owner != node) {
      throw Error(ErrorCode::LocalityViolation,
                  "node '" + node.name + "' cannot act on qubit '" + l + "' owned by '" +
                      owner.name + "'");
    }
  }
}

void require_known(const Frame& f, const NodeId& node, int slot) {
  if (slot < 0 || std::size_t(slot) >= f.bits.size() || !f.bits[slot].has_value()) {
    throw Error(ErrorCode::KnowledgeViolation,
                "bit slot " + std::to_string(slot) + " was never produced");
  }
  if (!f.known[slot].count(node.name)) {
    throw Error(ErrorCode::KnowledgeViolation,
                "bit slot " + std::to_string(slot) + " is not known at '" + node.name + "'");
  }
}

void add_qubit(Frame& f, const NodeId& node, const std::string& label,
               const qstate::PureState& init) {
  if (f.owner.count(label)) {
    throw Error(ErrorCode::DuplicateQubit, "label '" + label + "' already live");
  }
  f.state = qstate::tensor(f.state, init);
  f.owner.emplace(label, node);
}

void record_send(Frame& f, const NodeId& from, const NodeId& to, int slot) {
  require_known(f, from, slot);
  f.known[slot].insert(to.name);
  f.transcript.push_back({from, to, *f.bits[slot], f.step});
  f.channel_uses.emplace_back(from, to);
}

qstate::PureState bell_phi_plus(const std::string& label_a, const std::string& label_b) {
  Eigen::Vector4cd amps;
  const double s = 1.0 / std::sqrt(2.0);
  amps << s, 0, 0, s;
  return qstate::PureState({label_a, label_b}, amps);
}

std::string describe_value(const Frame& f, int slot) {
  return f.bits[slot].has_value() ? std::to_string(*f.bits[slot]) : "?";
}

std::string describe(const Instruction& instr, const Frame& f) {
  std::ostringstream out;
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, AllocInput>) {
          out << op.node.name << ": input qubit " << op.label;
        } else if constexpr (std::is_same_v<T, AllocQubit>) {
          out << op.node.name << ": prepare qubit " << op.label;
        } else if constexpr (std::is_same_v<T, AllocBellPair>) {
          out << "share Bell pair " << op.label_a << "@" << op.node_a.name << " - "
              << op.label_b << "@" << op.node_b.name;
        } else if constexpr (std::is_same_v<T, LocalApply>) {
          out << op.node.name << ": " << (op.tag.empty() ? "gate" : op.tag) << " on";
          for (const auto& t : op.targets) out << " " << t;
        } else if constexpr (std::is_same_v<T, MeasureQubit>) {
          out << op.node.name << ": measure " << op.label << " -> "
              << describe_value(f, op.slot);
        } else if constexpr (std::is_same_v<T, SendBit>) {
          out << op.from.name << " -> " << op.to.name << ": bit "
              << describe_value(f, op.slot);
        } else if constexpr (std::is_same_v<T, ConditionalApply>) {
          out << op.node.name << ": if bit=" << describe_value(f, op.slot) << " apply "
              << (op.tag.empty() ? "gate" : op.tag) << " on";
          for (const auto& t : op.targets) out << " " << t;
        } else if constexpr (std::is_same_v<T, SendBitIf>) {
          out << op.from.name << " -> " << op.to.name << ": conditional bit";
        }
      },
      instr);
  return out.str();
}

/// Executes one non-measurement instruction in place.
void step_instruction(Frame& f, const Instruction& instr,
                      const std::vector<Eigen::Vector2cd>& inputs) {
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, AllocInput>) {
          add_qubit(f, op.node, op.label,
                    qstate::PureState::single(op.label, inputs.at(op.input_index)));
        } else if constexpr (std::is_same_v<T, AllocQubit>) {
          add_qubit(f, op.node, op.label, qstate::PureState::single(op.label, op.init));
        } else if constexpr (std::is_same_v<T, AllocBellPair>) {
          if (op.node_a == op.node_b) {
            throw Error(ErrorCode::SameNode,
                        "a Bell pair inside node '" + op.node_a.name + "' is not an ebit");
          }
          if (f.owner.count(op.label_a)) {
            throw Error(ErrorCode::DuplicateQubit, "label '" + op.label_a + "' already live");
          }
          f.state = qstate::tensor(f.state, bell_phi_plus(op.label_a, op.label_b));
          f.owner.emplace(op.label_a, op.node_a);
          f.owner.emplace(op.label_b, op.node_b);
          f.ebits += 1;
        } else if constexpr (std::is_same_v<T, LocalApply>) {
          require_local(f, op.node, op.targets);
          f.state = qstate::apply_unitary(f.state, op.u, op.targets);
        } else if constexpr (std::is_same_v<T, SendBit>) {
          record_send(f, op.from, op.to, op.slot);
        } else if constexpr (std::is_same_v<T, ConditionalApply>) {
          require_known(f, op.node, op.slot);
          require_local(f, op.node, op.targets);
          if (*f.bits[op.slot] == 1) {
            f.state = qstate::apply_unitary(f.state, op.u, op.targets);
          }
        } else if constexpr (std::is_same_v<T, SendBitIf>) {
          require_known(f, op.from, op.condition_slot);
          if (*f.bits[op.condition_slot] == 1) {
            record_send(f, op.from, op.to, op.slot);
          }
        } else if constexpr (std::is_same_v<T, MeasureQubit>) {
          throw std::logic_error("measurement must be handled by the caller");
        }
      },
      instr);
}

void prepare_measure(Frame& f, const MeasureQubit& op) {
  const NodeId& owner = owner_of(f, op.label);
  if (owner != op.node) {
    throw Error(ErrorCode::LocalityViolation,
                "node '" + op.node.name + "' cannot measure qubit '" + op.label +
                    "' owned by '" + owner.name + "'");
  }
  if (f.bits.size() <= std::size_t(op.slot)) {
    f.bits.resize(op.slot + 1);
    f.known.resize(op.slot + 1);
  }
}

void settle_outcome(Frame& f, const MeasureQubit& op, const qstate::MeasurementBranch& mb) {
  f.state = mb.post;
  f.owner.erase(op.label);
  f.probability *= mb.probability;
  f.bits[op.slot] = mb.outcome;
  f.known[op.slot] = {op.node.name};
  f.outcomes.emplace_back(QubitRef{op.node, op.label}, mb.outcome);
}

struct Collection {
  std::vector<Branch> branches;
  std::vector<int> ebits;
  std::vector<std::vector<std::pair<NodeId, NodeId>>> channel_uses;
};

void run_from(const Program& p, const std::vector<Eigen::Vector2cd>& inputs, std::size_t idx,
              Frame frame, Collection& out) {
  for (; idx < p.instructions.size(); ++idx) {
    const Instruction& instr = p.instructions[idx];
    if (const auto* m = std::get_if<MeasureQubit>(&instr)) {
      prepare_measure(frame, *m);
      auto branches = qstate::measure_branches(frame.state, m->label);
      frame.step += 1;
      for (std::size_t b = 0; b < branches.size(); ++b) {
        if (b + 1 == branches.size()) {
          settle_outcome(frame, *m, branches[b]);
          run_from(p, inputs, idx + 1, std::move(frame), out);
        } else {
          Frame fork = frame;
          settle_outcome(fork, *m, branches[b]);
          run_from(p, inputs, idx + 1, std::move(fork), out);
        }
      }
      return;
    }
    step_instruction(frame, instr, inputs);
    frame.step += 1;
  }
  out.branches.push_back({frame.probability, std::move(frame.state),
                          std::move(frame.transcript), std::move(frame.outcomes)});
  out.ebits.push_back(frame.ebits);
  out.channel_uses.push_back(std::move(frame.channel_uses));
}

ResourceLedger finalize_ledger(const Collection& c) {
  for (std::size_t i = 1; i < c.branches.size(); ++i) {
    if (c.channel_uses[i] != c.channel_uses[0]) {
      throw Error(ErrorCode::NonUniformCommunication,
                  "branches disagree on classical channel use");
    }
    if (c.ebits[i] != c.ebits[0]) {
      throw Error(ErrorCode::NonUniformCommunication, "branches disagree on ebit use");
    }
  }
  ResourceLedger ledger;
  if (!c.branches.empty()) {
    ledger.ebits_consumed = c.ebits[0];
    for (const auto& use : c.channel_uses[0]) ledger.bits_sent[use] += 1;
  }
  return ledger;
}

void check_input_arity(const Program& p, const std::vector<Eigen::Vector2cd>& inputs) {
  if (inputs.size() != p.inputs.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "program '" + p.name + "' takes " + std::to_string(p.inputs.size()) +
                    " inputs, got " + std::to_string(inputs.size()));
  }
}

}  // namespace

RunResult run_protocol(const Program& p, const std::vector<Eigen::Vector2cd>& inputs) {
  check_input_arity(p, inputs);
  Collection collected;
  run_from(p, inputs, 0, Frame{}, collected);
  ResourceLedger ledger = finalize_ledger(collected);
  return {std::move(collected.branches), std::move(ledger)};
}

SampledRun run_sampled(const Program& p, const std::vector<Eigen::Vector2cd>& inputs,
                       std::uint64_t seed, const TraceSink& trace) {
  check_input_arity(p, inputs);
  qstate::Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Frame frame;
  for (const Instruction& instr : p.instructions) {
    if (const auto* m = std::get_if<MeasureQubit>(&instr)) {
      prepare_measure(frame, *m);
      auto branches = qstate::measure_branches(frame.state, m->label);
      std::size_t pick = branches.size() - 1;
      double r = unit(rng);
      for (std::size_t b = 0; b < branches.size(); ++b) {
        if (r < branches[b].probability) {
          pick = b;
          break;
        }
        r -= branches[b].probability;
      }
      settle_outcome(frame, *m, branches[pick]);
    } else {
      step_instruction(frame, instr, inputs);
    }
    frame.step += 1;
    if (trace) trace(describe(instr, frame), frame.state);
  }

  Collection single;
  single.branches.push_back({frame.probability, std::move(frame.state),
                             std::move(frame.transcript), std::move(frame.outcomes)});
  single.ebits.push_back(frame.ebits);
  single.channel_uses.push_back(std::move(frame.channel_uses));
  ResourceLedger ledger = finalize_ledger(single);
  return {std::move(single.branches.front()), std::move(ledger)};
}

}  // namespace nlgate::locc
