#pragma once

#include "nlgate/qstate/matrices.hpp"

namespace nlgate::qstate::gates {

Unitary identity(int qubits = 1);
Unitary x();  // NOT
Unitary z();
Unitary h();
Unitary cnot();     // control on the first (most significant) qubit
Unitary toffoli();  // controls on the first two qubits
Unitary swap();

/// Control-U with the given number of controls, control qubits first:
/// identity on the first 2^(c+1)-2 basis states, u on the last block.
Unitary control_u(const Unitary& u, int controls);

}  // namespace nlgate::qstate::gates
