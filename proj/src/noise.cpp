#include "gstest/noise.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gstest/errors.hpp"
#include "gstest/rng.hpp"

namespace gstest {

namespace {

void check_rate(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("error rate must lie in [0, 1], got " +
                      std::to_string(p));
}

void check_degree(std::size_t degree) {
  if (degree == 0) throw DomainError("degree must be positive");
}

}  // namespace

SparsePauli sample_error(const Graph& g, const DepolarizingModel& model,
                         std::uint64_t seed) {
  check_rate(model.p);
  static constexpr Pauli kLetter[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  SparsePauli error;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (rng::to_unit(rng::derive(seed, v, 0)) < model.p)
      error.set(v, kLetter[rng::derive(seed, v, 1) % 3]);
  }
  return error;
}

double error_probability(std::size_t weight, std::size_t support_size,
                         double p) {
  check_rate(p);
  if (support_size == 0) throw DomainError("support must be non-empty");
  if (weight > support_size)
    throw DomainError("weight exceeds the support size");
  return std::pow(p / 3.0, static_cast<double>(weight)) *
         std::pow(1.0 - p, static_cast<double>(support_size - weight));
}

FlipStats flip_counts(std::size_t degree) {
  check_degree(degree);
  if (degree + 1 > kMaxEnumerationSupport)
    throw SupportTooLarge("stabilizer support " + std::to_string(degree + 1) +
                          " exceeds the enumeration cap of " +
                          std::to_string(kMaxEnumerationSupport));
  SparsePauli generator;
  generator.set(0, Pauli::X);
  for (std::uint32_t v = 1; v <= degree; ++v) generator.set(v, Pauli::Z);

  std::vector<std::uint32_t> support(degree + 1);
  std::iota(support.begin(), support.end(), 0);

  FlipStats stats;
  stats.degree = degree;
  stats.commuting.assign(degree + 2, 0);
  stats.anticommuting.assign(degree + 2, 0);
  PauliEnumerator en(std::move(support));
  SparsePauli error;
  while (en.next(error)) {
    auto& bucket =
        anticommutes(error, generator) ? stats.anticommuting : stats.commuting;
    ++bucket[error.weight()];
  }
  return stats;
}

double parity_flip_exact(std::size_t degree, double p) {
  const FlipStats stats = flip_counts(degree);
  check_rate(p);
  double flip = 0.0;
  for (std::size_t w = 0; w < stats.anticommuting.size(); ++w) {
    if (stats.anticommuting[w] != 0)
      flip += static_cast<double>(stats.anticommuting[w]) *
              error_probability(w, degree + 1, p);
  }
  return flip;
}

double parity_flip_closed(std::size_t degree, double p) {
  check_degree(degree);
  check_rate(p);
  return 0.5 *
         (1.0 - std::pow(1.0 - 4.0 * p / 3.0,
                         static_cast<double>(degree + 1)));
}

double parity_flip_lower_bound(std::size_t degree, double p) {
  check_degree(degree);
  if (!(p >= 0.0 && p <= 0.375))
    throw DomainError("the quadratic lower bound is valid for p in [0, 3/8]");
  const auto d = static_cast<double>(degree);
  return (2.0 * (d + 1.0) / 3.0) * p - (4.0 * d * (d + 1.0) / 9.0) * p * p;
}

double parity_flip_upper_bound(std::size_t degree, double p) {
  check_degree(degree);
  check_rate(p);
  return (2.0 * (static_cast<double>(degree) + 1.0) / 3.0) * p;
}

}  // namespace gstest
