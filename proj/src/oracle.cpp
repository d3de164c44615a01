#include "gstest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gstest/errors.hpp"
#include "gstest/noise.hpp"
#include "gstest/rng.hpp"

namespace gstest {

namespace {

struct Masks {
  std::uint64_t flip = 0;   // X and Y sites permute basis states
  std::uint64_t phase = 0;  // Z and Y sites contribute (-1)^bit
  std::size_t y_count = 0;
};

Masks masks_of(const SparsePauli& op, std::size_t qubit_count) {
  Masks m;
  for (const auto& [v, p] : op.terms()) {
    if (v >= qubit_count)
      throw VertexOutOfRange("operator touches vertex " + std::to_string(v) +
                             " outside a " + std::to_string(qubit_count) +
                             "-qubit state");
    const auto bit = std::uint64_t{1} << v;
    if (p == Pauli::X || p == Pauli::Y) m.flip |= bit;
    if (p == Pauli::Z || p == Pauli::Y) m.phase |= bit;
    if (p == Pauli::Y) ++m.y_count;
  }
  return m;
}

// <b| P |b ^ flip> = (-i)^y_count * (-1)^popcount(b & phase).
std::complex<double> entry_phase(const Masks& m, std::uint64_t b) {
  static constexpr std::complex<double> kQuarterTurns[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  std::complex<double> w = kQuarterTurns[m.y_count & 3];
  if (std::popcount(b & m.phase) & 1) w = -w;
  return w;
}

}  // namespace

DenseState::DenseState(std::size_t qubit_count) : qubits_(qubit_count) {
  if (qubit_count > kMaxOracleQubits)
    throw TooManyQubits("dense statevector capped at " +
                        std::to_string(kMaxOracleQubits) + " qubits, got " +
                        std::to_string(qubit_count));
  amps_.assign(std::size_t{1} << qubit_count, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double DenseState::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

DenseState build_graph_state(const Graph& g) {
  DenseState state(g.vertex_count());
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(g.vertex_count()));
  for (std::size_t b = 0; b < state.dim(); ++b) state.amp(b) = {amp, 0.0};
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t mask =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    for (std::size_t b = 0; b < state.dim(); ++b) {
      if ((b & mask) == mask) state.amp(b) = -state.amp(b);
    }
  }
  return state;
}

void apply_pauli(DenseState& state, const SparsePauli& op) {
  const Masks m = masks_of(op, state.qubit_count());
  if (m.flip == 0) {
    for (std::size_t b = 0; b < state.dim(); ++b) {
      if (std::popcount(b & m.phase) & 1) state.amp(b) = -state.amp(b);
    }
    return;
  }
  for (std::size_t b = 0; b < state.dim(); ++b) {
    const std::size_t q = b ^ m.flip;
    if (b > q) continue;  // each pair once
    const std::complex<double> ab = state.amp(b);
    const std::complex<double> aq = state.amp(q);
    state.amp(b) = entry_phase(m, b) * aq;
    state.amp(q) = entry_phase(m, q) * ab;
  }
}

double expectation(const DenseState& state, const SparsePauli& observable) {
  const Masks m = masks_of(observable, state.qubit_count());
  std::complex<double> acc = {0.0, 0.0};
  for (std::size_t b = 0; b < state.dim(); ++b) {
    acc += std::conj(state.amp(b)) * entry_phase(m, b) *
           state.amp(b ^ m.flip);
  }
  return acc.real();
}

CrossValidationReport cross_validate(const Graph& g, const TestPlan& plan,
                                     double p, std::size_t trials,
                                     std::uint64_t seed) {
  CrossValidationReport report;
  report.trials = trials;
  report.mean_parity.assign(plan.vertices.size(), 0.0);
  report.predicted_mean_parity = 1.0 - 2.0 * parity_flip_exact(plan.degree, p);

  DenseState state = build_graph_state(g);
  const DepolarizingModel model{p};
  std::vector<std::int64_t> parity_sum(plan.vertices.size(), 0);

  // The state carries e_t|G> up to a global phase: each trial applies
  // product_up_to_phase(e_prev, e_t), and Pauli application is exact
  // (swaps, negations, quarter turns), so nothing drifts.
  SparsePauli previous;
  for (std::size_t t = 0; t < trials; ++t) {
    const SparsePauli error = sample_error(g, model, rng::derive(seed, t));
    apply_pauli(state, product_up_to_phase(previous, error));
    previous = error;

    const Outcome predicted = run_one_shot(plan, error);
    for (std::size_t i = 0; i < plan.stabilizers.size(); ++i) {
      const double e = expectation(state, plan.stabilizers[i]);
      const int sign = e >= 0.0 ? +1 : -1;
      if (std::abs(std::abs(e) - 1.0) > 1e-9)
        throw std::runtime_error(
            "corrupted state is not a generator eigenstate; |<S>| = " +
            std::to_string(std::abs(e)));
      if (sign != predicted.parities[i]) ++report.mismatches;
      parity_sum[i] += sign;
    }
  }
  for (std::size_t i = 0; i < plan.vertices.size(); ++i) {
    report.mean_parity[i] = trials == 0
                                ? 0.0
                                : static_cast<double>(parity_sum[i]) /
                                      static_cast<double>(trials);
    report.max_mean_deviation =
        std::max(report.max_mean_deviation,
                 std::abs(report.mean_parity[i] - report.predicted_mean_parity));
  }
  return report;
}

}  // namespace gstest
