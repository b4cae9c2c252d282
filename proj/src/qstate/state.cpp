#include "nlgate/qstate/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nlgate::qstate {

namespace {

using Index = Eigen::Index;

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

}  // namespace

PureState::PureState(std::vector<std::string> labels, Eigen::VectorXcd amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateQubit, "label '" + l + "' repeated in register");
    }
  }
  if (amps_.size() != Index(1) << labels_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "amplitude vector of size " + std::to_string(amps_.size()) +
                    " does not match register [" + join_labels(labels_) + "]");
  }
  if (!amps_.allFinite()) {
    throw Error(ErrorCode::NotFinite, "state has NaN or Inf amplitudes");
  }
  const double n = amps_.norm();
  if (std::abs(n - 1.0) > tol::norm) {
    throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(n));
  }
}

PureState PureState::vacuum() {
  return PureState({}, Eigen::VectorXcd::Ones(1));
}

PureState PureState::single(const std::string& label, const Eigen::Vector2cd& amplitudes) {
  return PureState({label}, amplitudes);
}

PureState PureState::basis(std::vector<std::string> labels, std::size_t index) {
  const Index dim = Index(1) << labels.size();
  if (Index(index) >= dim) {
    throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(Index(index)) = 1.0;
  return PureState(std::move(labels), std::move(amps));
}

bool PureState::has(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PureState::position(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::UnknownQubit, "no qubit '" + label + "' in register [" +
                                             join_labels(labels_) + "]");
  }
  return std::size_t(it - labels_.begin());
}

PureState tensor(const PureState& a, const PureState& b) {
  for (const auto& l : b.labels()) {
    if (a.has(l)) {
      throw Error(ErrorCode::DuplicateQubit, "label '" + l + "' present in both registers");
    }
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return PureState(std::move(labels), kron(a.amplitudes(), b.amplitudes()));
}

PureState apply_unitary(const PureState& s, const Unitary& u,
                        const std::vector<std::string>& targets) {
  const std::size_t n = s.qubit_count();
  const std::size_t k = targets.size();
  if (u.dim() != Index(1) << k) {
    throw Error(ErrorCode::DimensionMismatch,
                "gate of dimension " + std::to_string(u.dim()) + " applied to " +
                    std::to_string(k) + " qubits");
  }
  std::set<std::string> unique(targets.begin(), targets.end());
  if (unique.size() != k) {
    throw Error(ErrorCode::DuplicateQubit, "repeated target label");
  }

  // shift[j] = bit position of target j in the amplitude index
  std::vector<std::size_t> shift(k);
  std::uint64_t target_mask = 0;
  for (std::size_t j = 0; j < k; ++j) {
    shift[j] = n - 1 - s.position(targets[j]);
    target_mask |= std::uint64_t(1) << shift[j];
  }

  const std::uint64_t dim = std::uint64_t(1) << n;
  const std::uint64_t sub_dim = std::uint64_t(1) << k;
  const Eigen::VectorXcd& in = s.amplitudes();
  Eigen::VectorXcd out(static_cast<Index>(dim));
  Eigen::VectorXcd gathered(static_cast<Index>(sub_dim));

  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    // global index for each sub-index; sub-index bit 0 is the first target
    for (std::uint64_t sub = 0; sub < sub_dim; ++sub) {
      std::uint64_t idx = base;
      for (std::size_t j = 0; j < k; ++j) {
        idx |= ((sub >> (k - 1 - j)) & 1) << shift[j];
      }
      gathered(Index(sub)) = in(Index(idx));
    }
    const Eigen::VectorXcd transformed = u.matrix() * gathered;
    for (std::uint64_t sub = 0; sub < sub_dim; ++sub) {
      std::uint64_t idx = base;
      for (std::size_t j = 0; j < k; ++j) {
        idx |= ((sub >> (k - 1 - j)) & 1) << shift[j];
      }
      out(Index(idx)) = transformed(Index(sub));
    }
  }
  return PureState(s.labels(), std::move(out));
}

std::vector<MeasurementBranch> measure_branches(const PureState& s, const std::string& qubit) {
  const std::size_t n = s.qubit_count();
  const std::size_t shift = n - 1 - s.position(qubit);
  const std::uint64_t half = std::uint64_t(1) << (n - 1);
  const Eigen::VectorXcd& in = s.amplitudes();

  std::vector<std::string> rest;
  rest.reserve(n - 1);
  for (const auto& l : s.labels()) {
    if (l != qubit) rest.push_back(l);
  }

  std::vector<MeasurementBranch> branches;
  for (int outcome = 0; outcome <= 1; ++outcome) {
    Eigen::VectorXcd slice(static_cast<Index>(half));
    for (std::uint64_t j = 0; j < half; ++j) {
      const std::uint64_t low = j & ((std::uint64_t(1) << shift) - 1);
      const std::uint64_t high = j >> shift;
      const std::uint64_t idx =
          (high << (shift + 1)) | (std::uint64_t(outcome) << shift) | low;
      slice(Index(j)) = in(Index(idx));
    }
    const double probability = slice.squaredNorm();
    if (probability < tol::prune) continue;
    slice /= std::sqrt(probability);
    branches.push_back({outcome, probability, PureState(rest, std::move(slice))});
  }
  return branches;
}

PureState reorder(const PureState& s, const std::vector<std::string>& new_order) {
  if (new_order == s.labels()) return s;
  const std::size_t n = s.qubit_count();
  std::vector<std::string> sorted_new = new_order, sorted_old = s.labels();
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  if (sorted_new != sorted_old) {
    throw Error(ErrorCode::RegisterMismatch, "label order is not a permutation of the register");
  }
  std::vector<std::size_t> old_shift(n);
  for (std::size_t p = 0; p < n; ++p) {
    old_shift[p] = n - 1 - s.position(new_order[p]);  // throws on unknown labels
  }
  const std::uint64_t dim = std::uint64_t(1) << n;
  const Eigen::VectorXcd& in = s.amplitudes();
  Eigen::VectorXcd out(static_cast<Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t j = 0;
    for (std::size_t p = 0; p < n; ++p) {
      j |= ((i >> old_shift[p]) & 1) << (n - 1 - p);
    }
    out(Index(j)) = in(Index(i));
  }
  return PureState(new_order, std::move(out));
}

double fidelity_up_to_phase(const PureState& a, const PureState& b) {
  std::vector<std::string> la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) {
    throw Error(ErrorCode::RegisterMismatch,
                "registers [" + join_labels(a.labels()) + "] and [" +
                    join_labels(b.labels()) + "] differ");
  }
  const PureState aligned = reorder(b, a.labels());
  const double f = std::abs(a.amplitudes().dot(aligned.amplitudes()));
  return std::clamp(f, 0.0, 1.0);
}

namespace {

// Amplitudes reshaped so rows index side-A bits (in the given label order)
// and columns index the remaining qubits in register order.
Eigen::MatrixXcd bipartition_matrix(const PureState& s, const std::vector<std::string>& side_a) {
  const std::size_t n = s.qubit_count();
  if (side_a.empty() || side_a.size() >= n) {
    throw Error(ErrorCode::RegisterMismatch, "bipartition must be a proper nonempty subset");
  }
  std::set<std::string> a_set;
  std::vector<std::size_t> a_shift;
  for (const auto& l : side_a) {
    if (!a_set.insert(l).second) {
      throw Error(ErrorCode::RegisterMismatch, "repeated label '" + l + "' in partition");
    }
    a_shift.push_back(n - 1 - s.position(l));
  }
  std::vector<std::size_t> b_shift;
  for (const auto& l : s.labels()) {
    if (!a_set.count(l)) b_shift.push_back(n - 1 - s.position(l));
  }

  const std::uint64_t rows = std::uint64_t(1) << a_shift.size();
  const std::uint64_t cols = std::uint64_t(1) << b_shift.size();
  Eigen::MatrixXcd m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      std::uint64_t idx = 0;
      for (std::size_t j = 0; j < a_shift.size(); ++j) {
        idx |= ((r >> (a_shift.size() - 1 - j)) & 1) << a_shift[j];
      }
      for (std::size_t j = 0; j < b_shift.size(); ++j) {
        idx |= ((c >> (b_shift.size() - 1 - j)) & 1) << b_shift[j];
      }
      m(Index(r), Index(c)) = s.amplitudes()(Index(idx));
    }
  }
  return m;
}

}  // namespace

SchmidtForm schmidt_decompose(const PureState& s, const std::string& side_a) {
  if (s.qubit_count() != 2) {
    throw Error(ErrorCode::RegisterMismatch, "Schmidt form is defined here for two qubits only");
  }
  if (!s.has(side_a)) {
    throw Error(ErrorCode::RegisterMismatch, "cut label '" + side_a + "' not in register");
  }
  const Eigen::Matrix2cd m = bipartition_matrix(s, {side_a});
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtForm form;
  form.coefficients = svd.singularValues();
  form.basis_a = svd.matrixU();
  form.basis_b = svd.matrixV().conjugate();
  return form;
}

Eigen::VectorXd schmidt_values(const PureState& s, const std::vector<std::string>& side_a) {
  const Eigen::MatrixXcd m = bipartition_matrix(s, side_a);
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
}

Eigen::MatrixXcd reduced_density(const PureState& s, const std::vector<std::string>& keep) {
  const Eigen::MatrixXcd m = bipartition_matrix(s, keep);
  return m * m.adjoint();
}

PureState extract_pure_substate(const PureState& s, const std::vector<std::string>& keep) {
  const Eigen::MatrixXcd m = bipartition_matrix(s, keep);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  if (1.0 - svd.singularValues()(0) * svd.singularValues()(0) > tol::state) {
    throw Error(ErrorCode::RegisterMismatch,
                "subsystem [" + join_labels(keep) + "] is entangled with its complement");
  }
  Eigen::VectorXcd amps = svd.matrixU().col(0);
  // deterministic global phase: largest entry made real positive
  Index imax;
  amps.cwiseAbs().maxCoeff(&imax);
  amps *= std::polar(1.0, -std::arg(amps(imax)));
  amps /= amps.norm();
  return PureState(keep, std::move(amps));
}

}  // namespace nlgate::qstate
