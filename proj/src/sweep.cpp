#include "gstest/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "gstest/errors.hpp"
#include "gstest/noise.hpp"
#include "gstest/rng.hpp"

namespace gstest {

Interval wilson_interval(std::size_t successes, std::size_t trials,
                         double z) {
  if (trials == 0) throw DomainError("Wilson interval needs trials >= 1");
  if (successes > trials)
    throw DomainError("successes cannot exceed trials");
  const auto n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<double> default_p_grid(double p_goal, double p_threshold,
                                   std::size_t points) {
  if (!(p_goal > 0.0) || !(p_threshold > 0.0))
    throw DomainError("grid endpoints must be positive");
  if (points < 2) throw DomainError("grid needs at least 2 points");
  const double lo = p_goal / 4.0;
  const double hi = std::min(4.0 * p_threshold, 1.0);
  if (!(lo < hi)) throw DomainError("empty sweep range");
  std::vector<double> grid(points);
  const double step = (std::log(hi) - std::log(lo)) /
                      static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
  grid.back() = hi;  // pin the endpoint against rounding
  return grid;
}

std::vector<SweepRow> run_sweep(const Graph& g, const TestPlan& plan,
                                std::span<const double> p_values,
                                std::size_t trials,
                                std::uint64_t master_seed) {
  if (trials == 0) throw DomainError("trials must be >= 1");
  std::vector<double> ps(p_values.begin(), p_values.end());
  std::sort(ps.begin(), ps.end());
  std::vector<SweepRow> rows;
  rows.reserve(ps.size());
  for (const double p : ps) {
    const DepolarizingModel model{p};  // sample_error validates p
    std::size_t accepts = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const SparsePauli error =
          sample_error(g, model, rng::derive(master_seed, t));
      accepts += run_one_shot(plan, error).accept ? 1 : 0;
    }
    SweepRow row;
    row.p = p;
    row.trials = trials;
    row.accepts = accepts;
    row.accept_rate =
        static_cast<double>(accepts) / static_cast<double>(trials);
    const Interval ci = wilson_interval(accepts, trials);
    row.wilson_low = ci.low;
    row.wilson_high = ci.high;
    row.analytic =
        accept_probability_analytic(plan.degree, p, plan.vertices.size());
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "p,trials,accepts,accept_rate,wilson_low,wilson_high,analytic\n";
  char buf[160];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g,%zu,%zu,%.6f,%.6f,%.6f,%.6f\n", r.p,
                  r.trials, r.accepts, r.accept_rate, r.wilson_low,
                  r.wilson_high, r.analytic);
    out << buf;
  }
}

}  // namespace gstest
