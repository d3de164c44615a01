#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gstest/graph.hpp"
#include "gstest/protocol.hpp"

namespace gstest {

struct SweepRow {
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t accepts = 0;
  double accept_rate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  double analytic = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

inline constexpr double kWilson95Z = 1.959963984540054;

// Wilson score interval; clamped to [0, 1], always contains k/n.
Interval wilson_interval(std::size_t successes, std::size_t trials,
                         double z = kWilson95Z);

// 20 log-spaced points from p_goal / 4 to min(4 * p_threshold, 1).
std::vector<double> default_p_grid(double p_goal, double p_threshold,
                                   std::size_t points = 20);

// Monte Carlo acceptance rate at every p, ascending. Per-trial seed is
// derive(master_seed, trial), so a given trial sees the same randomness
// stream at every p and results are independent of sweep order.
std::vector<SweepRow> run_sweep(const Graph& g, const TestPlan& plan,
                                std::span<const double> p_values,
                                std::size_t trials, std::uint64_t master_seed);

// Header: p,trials,accepts,accept_rate,wilson_low,wilson_high,analytic
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace gstest
