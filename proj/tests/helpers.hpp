#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "nlgate/qstate/gates.hpp"
#include "nlgate/qstate/random.hpp"
#include "nlgate/qstate/state.hpp"

namespace testutil {

using nlgate::qstate::Complex;

inline Eigen::Vector2cd ket0() { return {1, 0}; }
inline Eigen::Vector2cd ket1() { return {0, 1}; }
inline Eigen::Vector2cd ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s};
}
inline Eigen::Vector2cd ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, -s};
}

inline nlgate::qstate::PureState bell_phi_plus(const std::string& a, const std::string& b) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd amps;
  amps << s, 0, 0, s;
  return nlgate::qstate::PureState({a, b}, amps);
}

inline double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const nlgate::qstate::PureState& a, const nlgate::qstate::PureState& b) {
  return max_diff(a.amplitudes(), nlgate::qstate::reorder(b, a.labels()).amplitudes());
}

inline nlgate::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const nlgate::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an nlgate::Error");
}

}  // namespace testutil
