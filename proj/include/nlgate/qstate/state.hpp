#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlgate/qstate/matrices.hpp"

namespace nlgate::qstate {

/// Pure state over an ordered register of named qubits.
///
/// The amplitude index encodes basis kets with register position 0 as the
/// most significant bit: amplitudes(i) multiplies |q0 q1 ... q(n-1)> where
/// q0's bit is bit n-1 of i. Labels are unique and the L2 norm is 1 within
/// tol::norm; both are enforced at construction.
class PureState {
 public:
  PureState(std::vector<std::string> labels, Eigen::VectorXcd amplitudes);

  /// Zero-qubit state (single amplitude 1); identity for tensor().
  static PureState vacuum();
  static PureState single(const std::string& label, const Eigen::Vector2cd& amplitudes);
  static PureState basis(std::vector<std::string> labels, std::size_t index);

  std::size_t qubit_count() const { return labels_.size(); }
  Eigen::Index dim() const { return amps_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  bool has(const std::string& label) const;
  /// Register position of a label; throws UnknownQubit if absent.
  std::size_t position(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  Eigen::VectorXcd amps_;
};

struct MeasurementBranch {
  int outcome;
  double probability;
  PureState post;  // measured qubit removed from the register
};

/// Bipartite decomposition of a two-qubit state: state = sum_k c_k |a_k>|b_k>
/// with c nonincreasing and orthonormal column pairs in basis_a / basis_b.
struct SchmidtForm {
  Eigen::Vector2d coefficients;
  Eigen::Matrix2cd basis_a;
  Eigen::Matrix2cd basis_b;
};

/// Kronecker product of two states; a's register precedes b's.
PureState tensor(const PureState& a, const PureState& b);

/// Applies u to the listed target qubits (first target = most significant bit
/// of u's index space) and identity elsewhere.
PureState apply_unitary(const PureState& s, const Unitary& u,
                        const std::vector<std::string>& targets);

/// Computational-basis measurement of one qubit. Each branch is renormalized
/// with the measured qubit removed from the register; branches below
/// tol::prune probability are omitted. Outcome 0 precedes outcome 1.
std::vector<MeasurementBranch> measure_branches(const PureState& s, const std::string& qubit);

/// |<a|b>| after aligning b's register order with a's. Clamped to [0,1];
/// insensitive to the global phase of either argument.
double fidelity_up_to_phase(const PureState& a, const PureState& b);

/// Same state with the register permuted into the given label order.
PureState reorder(const PureState& s, const std::vector<std::string>& new_order);

/// Schmidt decomposition of a two-qubit state across the cut that puts
/// side_a first. Coefficients are nonincreasing singular values.
SchmidtForm schmidt_decompose(const PureState& s, const std::string& side_a);

/// Singular values of an arbitrary bipartition of an n-qubit pure state.
Eigen::VectorXd schmidt_values(const PureState& s, const std::vector<std::string>& side_a);

/// Reduced density operator on the kept qubits (complement traced out),
/// rows/cols ordered by the given label list.
Eigen::MatrixXcd reduced_density(const PureState& s, const std::vector<std::string>& keep);

/// Extracts the pure state of a subsystem that is unentangled with its
/// complement; throws RegisterMismatch if the reduced state is mixed.
PureState extract_pure_substate(const PureState& s, const std::vector<std::string>& keep);

}  // namespace nlgate::qstate
