#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gstest/graph.hpp"
#include "gstest/pauli.hpp"

namespace gstest {

// IID single-qubit depolarizing noise: each qubit independently suffers
// X, Y or Z with probability p/3 each, nothing with probability 1 - p.
struct DepolarizingModel {
  double p = 0.0;
};

// One error per qubit decision, two derived words per vertex, so the
// sample depends only on (seed, vertex ids) and never on visit order.
SparsePauli sample_error(const Graph& g, const DepolarizingModel& model,
                         std::uint64_t seed);

// Probability of one specific error of the given weight on a support of
// support_size qubits: (p/3)^weight * (1-p)^(support_size-weight).
double error_probability(std::size_t weight, std::size_t support_size,
                         double p);

// Census of the 4^(degree+1) errors on the support of one stabilizer
// generator, split by commutation with it; index is error weight.
struct FlipStats {
  std::size_t degree = 0;
  std::vector<std::uint64_t> commuting;      // size degree + 2
  std::vector<std::uint64_t> anticommuting;  // size degree + 2
};

FlipStats flip_counts(std::size_t degree);

// Parity-flip probability of one generator of weight degree + 1 under the
// model: exact enumeration vs the closed form (1-(1-4p/3)^(degree+1))/2.
double parity_flip_exact(std::size_t degree, double p);
double parity_flip_closed(std::size_t degree, double p);

// Quadratic lower bound, valid for p in [0, 3/8]; linear upper bound.
double parity_flip_lower_bound(std::size_t degree, double p);
double parity_flip_upper_bound(std::size_t degree, double p);

}  // namespace gstest
