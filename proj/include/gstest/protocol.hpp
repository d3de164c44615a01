#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gstest/graph.hpp"
#include "gstest/pauli.hpp"

namespace gstest {

// Parameters of one test instance: measure n_test stabilizer generators of
// weight degree + 1 and accept iff every parity comes out +1.
struct ProtocolParams {
  double delta = 0.0;        // allowed error probability of the verdict
  double p_threshold = 0.0;  // reject noise at or above this rate
  std::size_t degree = 0;
  std::size_t n_test = 0;
  double p_goal = 0.0;       // accept noise below this rate
  std::size_t measured_qubits = 0;  // (degree + 1) * n_test
};

// n_test = ceil(ln(1/delta) / l(p_threshold)) and p_goal from the accept
// condition at equality; throws DomainError when the inputs leave the
// bounds' validity domain or no p_goal below p_threshold exists.
ProtocolParams compute_params(double delta, double p_threshold,
                              std::size_t degree);

// Re-derives both one-shot guarantees from first principles:
//   reject side  1 - (1 - l(p_threshold))^n_test >= 1 - delta
//   accept side  (1 - u(p_goal))^n_test         >= 1 - delta
struct VerifyReport {
  double confidence = 0.0;         // 1 - delta
  double reject_prob_bound = 0.0;  // worst-case rejection probability
  double accept_prob_bound = 0.0;  // worst-case acceptance probability
  bool reject_ok = false;
  bool accept_ok = false;
  double reject_slack = 0.0;  // bound - confidence
  double accept_slack = 0.0;
};

VerifyReport verify_params(const ProtocolParams& params);

// Chosen test vertices with their measurement bases. All vertices have the
// same degree and are pairwise at graph distance >= 3, so their generators
// act on disjoint qubit sets and the parities are independent.
struct TestPlan {
  std::size_t degree = 0;
  std::vector<std::uint32_t> vertices;  // X-measured centers, ascending
  std::vector<std::vector<std::uint32_t>> z_neighbors;  // per center
  std::vector<SparsePauli> stabilizers;                 // per center
};

// Greedy sweep in ascending id order; throws InsufficientVertices with the
// achievable count when the graph cannot supply n_test centers.
TestPlan select_test_vertices(const Graph& g, std::size_t degree,
                              std::size_t n_test);

std::string test_plan_json(const TestPlan& plan);

struct Outcome {
  std::vector<int> parities;  // +1 or -1 per plan vertex
  bool accept = false;        // true iff every parity is +1
};

// Parity of each generator against the sampled error: -1 iff the error
// anticommutes with it. Exact for stabilizer states under Pauli noise.
Outcome run_one_shot(const TestPlan& plan, const SparsePauli& error);

// (1 - parity_flip_exact(degree, p))^n_test.
double accept_probability_analytic(std::size_t degree, double p,
                                    std::size_t n_test);

}  // namespace gstest
