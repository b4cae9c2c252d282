#pragma once

#include <random>

#include "nlgate/qstate/matrices.hpp"
#include "nlgate/qstate/state.hpp"

namespace nlgate::qstate {

using Rng = std::mt19937_64;

/// Normalized single-qubit state with Gaussian real/imaginary parts.
Eigen::Vector2cd random_qubit(Rng& rng);

/// Normalized amplitude vector of the given power-of-two dimension.
Eigen::VectorXcd random_state_vector(Eigen::Index dim, Rng& rng);

/// Unitary from QR orthonormalization of a Gaussian complex matrix, with the
/// R diagonal phase-fixed so the distribution is basis-invariant.
Unitary random_unitary(Eigen::Index dim, Rng& rng);

}  // namespace nlgate::qstate
