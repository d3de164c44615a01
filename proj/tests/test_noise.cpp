#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "gstest/errors.hpp"
#include "gstest/graph.hpp"
#include "gstest/noise.hpp"

using namespace gstest;

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("error sampling is deterministic and rate-consistent") {
  const Graph g = build_rhg({{3, 3, 3}, Boundary::periodic});

  SUBCASE("same seed, same error") {
    const auto a = sample_error(g, {0.3}, 99);
    const auto b = sample_error(g, {0.3}, 99);
    CHECK(a == b);
    const auto c = sample_error(g, {0.3}, 100);
    CHECK(a != c);
  }
  SUBCASE("rate endpoints") {
    CHECK(sample_error(g, {0.0}, 1).is_identity());
    CHECK(sample_error(g, {1.0}, 1).weight() == g.vertex_count());
    CHECK_THROWS_AS(sample_error(g, {-0.1}, 1), DomainError);
    CHECK_THROWS_AS(sample_error(g, {1.5}, 1), DomainError);
  }
  SUBCASE("empirical weight near n*p") {
    const Graph big = path_graph(2000);
    const double p = 0.1;
    const auto err = sample_error(big, {p}, 7);
    // 5 sigma around the binomial mean of 200.
    const double sigma = std::sqrt(2000 * p * (1 - p));
    CHECK(std::abs(static_cast<double>(err.weight()) - 200.0) < 5 * sigma);
  }
  SUBCASE("letters are roughly uniform at p = 1") {
    const Graph big = path_graph(3000);
    const auto err = sample_error(big, {1.0}, 5);
    std::size_t tally[4] = {0, 0, 0, 0};
    for (const auto& [v, letter] : err.terms())
      ++tally[static_cast<std::size_t>(letter)];
    CHECK(tally[static_cast<std::size_t>(Pauli::I)] == 0);
    for (const Pauli letter : {Pauli::X, Pauli::Y, Pauli::Z}) {
      const double count =
          static_cast<double>(tally[static_cast<std::size_t>(letter)]);
      CHECK(std::abs(count - 1000.0) < 150.0);  // ~5.7 sigma
    }
  }
  SUBCASE("randomness is keyed by vertex id, not graph shape") {
    const Graph small = build_rhg({{1, 1, 1}, Boundary::open});
    const Graph wide = build_rhg({{2, 1, 1}, Boundary::open});
    const auto a = sample_error(small, {0.4}, 31);
    const auto b = sample_error(wide, {0.4}, 31);
    for (std::uint32_t v = 0; v < small.vertex_count(); ++v)
      CHECK(a.at(v) == b.at(v));
  }
}

TEST_CASE("single-error probability formula") {
  CHECK(error_probability(0, 5, 0.0) == doctest::Approx(1.0));
  CHECK(error_probability(1, 5, 0.3) ==
        doctest::Approx(0.1 * std::pow(0.7, 4)));
  CHECK(error_probability(5, 5, 0.3) == doctest::Approx(std::pow(0.1, 5)));
  // Total probability over the census is 1.
  const FlipStats stats = flip_counts(4);
  for (const double p : {0.0, 0.05, 0.3, 1.0}) {
    double total = 0.0;
    for (std::size_t w = 0; w < stats.commuting.size(); ++w)
      total += static_cast<double>(stats.commuting[w] +
                                   stats.anticommuting[w]) *
               error_probability(w, 5, p);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(error_probability(6, 5, 0.1), DomainError);
  CHECK_THROWS_AS(error_probability(0, 0, 0.1), DomainError);
  CHECK_THROWS_AS(error_probability(1, 5, -0.1), DomainError);
  CHECK_THROWS_AS(error_probability(1, 5, 1.1), DomainError);
}

TEST_CASE("flip census for degree 4") {
  const FlipStats stats = flip_counts(4);
  CHECK(stats.degree == 4);
  CHECK(stats.commuting ==
        std::vector<std::uint64_t>{1, 5, 50, 130, 205, 121});
  CHECK(stats.anticommuting ==
        std::vector<std::uint64_t>{0, 10, 40, 140, 200, 122});
}

TEST_CASE("flip census for degree 1") {
  const FlipStats stats = flip_counts(1);
  CHECK(stats.commuting == std::vector<std::uint64_t>{1, 2, 5});
  CHECK(stats.anticommuting == std::vector<std::uint64_t>{0, 4, 4});
}

TEST_CASE("flip census structural properties") {
  for (std::size_t degree = 1; degree <= 6; ++degree) {
    const FlipStats stats = flip_counts(degree);
    CHECK(stats.commuting[0] == 1);
    CHECK(stats.anticommuting[0] == 0);
    // Exactly 2 anticommuting single-site choices per support qubit.
    CHECK(stats.anticommuting[1] == 2 * (degree + 1));
    // Census totals per weight are C(degree+1, w) * 3^w.
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < stats.commuting.size(); ++w)
      total += stats.commuting[w] + stats.anticommuting[w];
    std::uint64_t four_pow = 1;
    for (std::size_t i = 0; i <= degree; ++i) four_pow *= 4;
    CHECK(total == four_pow);
  }
  CHECK_THROWS_AS(flip_counts(0), DomainError);
  CHECK_THROWS_AS(flip_counts(12), SupportTooLarge);
  CHECK_NOTHROW(flip_counts(11));
}

TEST_CASE("exact and closed-form flip probabilities agree") {
  for (std::size_t degree = 1; degree <= 6; ++degree) {
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      const double exact = parity_flip_exact(degree, p);
      const double closed = parity_flip_closed(degree, p);
      CHECK(std::abs(exact - closed) <=
            1e-12 * std::max({1e-300, std::abs(exact), std::abs(closed)}));
    }
  }
  // Frozen spot values, degree 4.
  CHECK(parity_flip_exact(4, 0.004) ==
        doctest::Approx(0.013191873).epsilon(1e-6));
  CHECK(parity_flip_exact(4, 0.02) ==
        doctest::Approx(0.063204673).epsilon(1e-6));
  CHECK(parity_flip_exact(4, 0.0) == doctest::Approx(0.0));
  // Fully depolarizing: (1 - (1 - 4/3)^5) / 2 = (1 + 3^-5... ) via closed.
  CHECK(parity_flip_exact(4, 1.0) ==
        doctest::Approx(0.5 * (1.0 - std::pow(-1.0 / 3.0, 5))));
}

TEST_CASE("flip probability is monotone on the bound domain") {
  for (std::size_t degree : {1u, 4u, 8u}) {
    double prev = -1.0;
    for (int k = 0; k <= 60; ++k) {
      const double p = 0.375 * k / 60.0;
      const double value = parity_flip_closed(degree, p);
      CHECK(value > prev);
      prev = value;
    }
  }
}

TEST_CASE("quadratic lower and linear upper bounds sandwich the truth") {
  for (std::size_t degree = 1; degree <= 8; ++degree) {
    for (int k = 1; k <= 100; ++k) {
      const double p = 0.375 * k / 100.0;
      const double exact = parity_flip_exact(degree, p);
      CHECK(parity_flip_lower_bound(degree, p) <= exact + 1e-12);
      CHECK(exact <= parity_flip_upper_bound(degree, p) + 1e-12);
    }
  }
  CHECK(parity_flip_lower_bound(4, 0.0) == 0.0);
  CHECK(parity_flip_upper_bound(4, 0.003) == doctest::Approx(0.01));
  // Frozen value used by the parameter derivation.
  CHECK(parity_flip_lower_bound(4, 0.014) ==
        doctest::Approx(0.04492444444444445).epsilon(1e-12));

  CHECK_THROWS_AS(parity_flip_lower_bound(4, 0.38), DomainError);
  CHECK_THROWS_AS(parity_flip_lower_bound(4, -0.01), DomainError);
  CHECK_THROWS_AS(parity_flip_upper_bound(4, 1.01), DomainError);
  CHECK_THROWS_AS(parity_flip_lower_bound(0, 0.1), DomainError);
}
