#include "gstest/protocol.hpp"

#include <cmath>
#include <deque>
#include <string>
#include <utility>

#include "json.hpp"

#include "gstest/errors.hpp"
#include "gstest/noise.hpp"

namespace gstest {

ProtocolParams compute_params(double delta, double p_threshold,
                              std::size_t degree) {
  if (!(delta > 0.0 && delta < 1.0))
    throw DomainError("delta must lie in (0, 1), got " +
                      std::to_string(delta));
  if (!(p_threshold > 0.0 && p_threshold < 0.375))
    throw DomainError("p_threshold must lie in (0, 3/8)");
  const double l = parity_flip_lower_bound(degree, p_threshold);
  if (!(l > 0.0))
    throw DomainError(
        "the flip-probability lower bound vanishes at this p_threshold; "
        "no sample count can separate the hypotheses");

  const double log_inv_delta = std::log(1.0 / delta);
  const auto n_test =
      static_cast<std::size_t>(std::ceil(log_inv_delta / l));

  // Accept-side condition solved at equality: u(p_goal) * n_test'
  // = delta with n_test' = ln(1/delta) / l before rounding, then mapped
  // through u(p) = 2(degree+1)p/3.
  const double r = delta / log_inv_delta * l;
  const double u_goal = r / (1.0 + r);
  const double p_goal = 3.0 / (2.0 * (static_cast<double>(degree) + 1.0)) *
                        u_goal;
  if (!(p_goal > 0.0 && p_goal < p_threshold))
    throw DomainError("derived p_goal does not fall below p_threshold");

  ProtocolParams params;
  params.delta = delta;
  params.p_threshold = p_threshold;
  params.degree = degree;
  params.n_test = n_test;
  params.p_goal = p_goal;
  params.measured_qubits = (degree + 1) * n_test;
  return params;
}

VerifyReport verify_params(const ProtocolParams& params) {
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw DomainError("delta must lie in (0, 1)");
  if (params.n_test == 0) throw DomainError("n_test must be positive");
  const double l = parity_flip_lower_bound(params.degree, params.p_threshold);
  const double u = parity_flip_upper_bound(params.degree, params.p_goal);
  const auto n = static_cast<double>(params.n_test);

  VerifyReport report;
  report.confidence = 1.0 - params.delta;
  // Above threshold every generator flips with probability >= l, so at
  // least one of n_test independent parities is -1 except with
  // probability (1 - l)^n.
  report.reject_prob_bound = 1.0 - std::pow(1.0 - l, n);
  // Below p_goal each parity survives with probability >= 1 - u.
  report.accept_prob_bound = std::pow(1.0 - u, n);
  report.reject_slack = report.reject_prob_bound - report.confidence;
  report.accept_slack = report.accept_prob_bound - report.confidence;
  report.reject_ok = report.reject_slack >= 0.0;
  report.accept_ok = report.accept_slack >= 0.0;
  return report;
}

TestPlan select_test_vertices(const Graph& g, std::size_t degree,
                              std::size_t n_test) {
  if (degree == 0) throw DomainError("degree must be positive");
  if (n_test == 0) throw DomainError("n_test must be positive");

  TestPlan plan;
  plan.degree = degree;
  std::vector<char> blocked(g.vertex_count(), 0);
  for (std::uint32_t v = 0;
       v < g.vertex_count() && plan.vertices.size() < n_test; ++v) {
    if (blocked[v] || g.degree(v) != degree) continue;
    plan.vertices.push_back(v);
    const auto nbrs = g.neighbors(v);
    plan.z_neighbors.emplace_back(nbrs.begin(), nbrs.end());
    plan.stabilizers.push_back(stabilizer_generator(g, v));
    // Block the radius-2 ball; anything outside it is at distance >= 3,
    // so later picks share no qubits with this generator.
    for (const std::uint32_t u : nbrs) {
      blocked[u] = 1;
      for (const std::uint32_t w : g.neighbors(u)) blocked[w] = 1;
    }
  }
  if (plan.vertices.size() < n_test)
    throw InsufficientVertices(
        "graph supplies only " + std::to_string(plan.vertices.size()) +
            " of " + std::to_string(n_test) +
            " requested degree-" + std::to_string(degree) + " test vertices",
        plan.vertices.size());
  return plan;
}

std::string test_plan_json(const TestPlan& plan) {
  nlohmann::json j;
  j["D"] = plan.degree;
  j["vertices"] = plan.vertices;
  j["x_measure"] = plan.vertices;
  j["z_measure"] = plan.z_neighbors;
  return j.dump();
}

Outcome run_one_shot(const TestPlan& plan, const SparsePauli& error) {
  Outcome outcome;
  outcome.parities.reserve(plan.stabilizers.size());
  outcome.accept = true;
  for (const SparsePauli& s : plan.stabilizers) {
    const int parity = anticommutes(error, s) ? -1 : +1;
    outcome.parities.push_back(parity);
    if (parity < 0) outcome.accept = false;
  }
  return outcome;
}

double accept_probability_analytic(std::size_t degree, double p,
                                   std::size_t n_test) {
  return std::pow(1.0 - parity_flip_exact(degree, p),
                  static_cast<double>(n_test));
}

}  // namespace gstest
