#pragma once

#include <array>

#include "nlgate/qstate/gates.hpp"

namespace nlgate::analysis {

using qstate::HermitianGenerator;
using qstate::Unitary;

/// Four local one-qubit unitaries (u1 x u2) U (u3 x u4) relating a gate to
/// its swap conjugate.
struct SymmetrizerQuad {
  Unitary u1, u2, u3, u4;
};

/// Sorted spectra of the one-qubit reduced operators of a generator before
/// and after swap conjugation. Local conjugation cannot change them, so
/// unequal spectra witness that no (U1 x U2) conjugation exists.
struct SpectrumWitness {
  std::array<double, 2> spectrum_before{};
  std::array<double, 2> spectrum_after{};
  bool obstruction() const;
};

/// U_ss X U_ss† for a two-qubit gate or generator.
Unitary swap_conjugate(const Unitary& u);
HermitianGenerator swap_conjugate(const HermitianGenerator& h);

/// Hermitian H with exp(iH) = v, eigenphases on the principal branch
/// (-pi, pi].
HermitianGenerator generator_of(const Unitary& v);

/// exp(iH); inverse of generator_of up to branch choice.
Unitary exp_i(const HermitianGenerator& h);

/// True iff U_ss uab U_ss† = (u1 x u2) uab (u3 x u4) up to a global phase.
bool check_condition(const Unitary& uab, const SymmetrizerQuad& quad);

/// Conjugation form of the same relation on a generator:
/// U_ss h U_ss† = (u1 x u2) h (u3 x u4), entrywise (quad is expected to hold
/// u3 = u1†, u4 = u2†).
bool check_generator_condition(const HermitianGenerator& h, const SymmetrizerQuad& quad);

/// For a generator with a single non-vanishing eigenvalue, builds the quad
/// (U, U†, U†, U) from the Schmidt basis pairing of its eigenvector, where U
/// maps each |k> to its partner |k~>. Throws RankMismatch otherwise.
SymmetrizerQuad rank1_symmetrizers(const HermitianGenerator& h);

/// Identity quad for a Bell-diagonal generator (every Bell projector is
/// swap-invariant); throws NotBellDiagonal otherwise.
SymmetrizerQuad bell_diagonal_symmetrizers(const HermitianGenerator& h);

/// Controlled-phase gate diag(1, 1, e^{i l3}, e^{i l4}) and the four explicit
/// local unitaries that satisfy the swap condition for it.
Unitary lemma5_gate(double lambda3, double lambda4);
SymmetrizerQuad lemma5_unitaries(double lambda3, double lambda4);

/// Generator l3 |10><10| + l4 |11><11| of the gate with eigenvectors
/// |0+>, |0->, |10>, |11>; its reduced spectra change under swap whenever
/// both phases are nonzero.
HermitianGenerator counterexample_generator(double lambda3, double lambda4);
SpectrumWitness counterexample_witness(double lambda3, double lambda4);

/// (H x H) CNOT (H x H) equals both the reversed CNOT and the swap conjugate
/// of CNOT, entrywise.
bool cnot_hadamard_identity();

/// Trace over the second qubit of a two-qubit operator.
Eigen::Matrix2cd partial_trace_second(const Eigen::MatrixXcd& m);

/// Bell states as columns: Phi+, Phi-, Psi+, Psi-.
Eigen::Matrix4cd bell_basis();

}  // namespace nlgate::analysis
