#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gstest/graph.hpp"
#include "gstest/pauli.hpp"
#include "gstest/protocol.hpp"

namespace gstest {

// 2^18 amplitudes (4 MiB) covers the largest graph the checks need, the
// 18-vertex open-boundary unit cell.
inline constexpr std::size_t kMaxOracleQubits = 18;

// Dense statevector, little-endian: bit v of a basis index is vertex v.
// Deliberately brute force; this is the ground truth the fast path is
// judged against, so it stays as dumb as possible.
class DenseState {
 public:
  explicit DenseState(std::size_t qubit_count);  // |0...0>

  std::size_t qubit_count() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::complex<double>& amp(std::size_t basis) { return amps_[basis]; }
  const std::complex<double>& amp(std::size_t basis) const {
    return amps_[basis];
  }
  double norm() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

// |+>^n followed by CZ on every edge.
DenseState build_graph_state(const Graph& g);

// Exact in-place application, Y phases included.
void apply_pauli(DenseState& state, const SparsePauli& op);

// <state| observable |state>, discarding the (zero) imaginary part.
double expectation(const DenseState& state, const SparsePauli& observable);

struct CrossValidationReport {
  std::size_t trials = 0;
  std::size_t mismatches = 0;  // commutation sign vs statevector sign
  std::vector<double> mean_parity;  // empirical, per plan vertex
  double predicted_mean_parity = 0.0;  // 1 - 2 * parity_flip_exact
  double max_mean_deviation = 0.0;
};

// Samples errors, computes each generator's parity twice per trial: once
// from commutation signs, once as a dense expectation on the corrupted
// state. Every per-trial disagreement counts as a mismatch.
CrossValidationReport cross_validate(const Graph& g, const TestPlan& plan,
                                     double p, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace gstest
