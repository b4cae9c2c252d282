#pragma once

#include <array>

#include "nlgate/protocols/protocols.hpp"

namespace nlgate::protocols {

/// Dense coding pushed through the swap protocol: Alice encodes a two-bit
/// message on her half of a shared pair with one of {1, X, Z, XZ}, the swap
/// delivers her qubit to Bob, and Bob's Bell measurement decodes it.
locc::Program dense_coding_program(int phase_bit, int flip_bit);

struct DenseCodingOutcome {
  std::array<bool, 4> decoded{};        // message order 00, 01, 10, 11
  std::array<int, 4> branch_counts{};   // decode adds no forks: swap branches only
  CostReport ledger;                    // per message run
  bool all_decoded() const { return decoded[0] && decoded[1] && decoded[2] && decoded[3]; }
};

DenseCodingOutcome dense_coding_demo();

/// The swap applied to the inner halves of two node-local Bell pairs turns a
/// cross-node product state into two cross-node ebits.
locc::Program swap_entangling_program();

struct SwapEntangleOutcome {
  // Schmidt coefficients of the two delivered pairs, worst case over branches
  Eigen::Vector2d alice_pair_coefficients;
  Eigen::Vector2d bob_pair_coefficients;
  CostReport ledger;
  bool established(double tolerance) const;
};

SwapEntangleOutcome swap_entangling_demo();

}  // namespace nlgate::protocols
