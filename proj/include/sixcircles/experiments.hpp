#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "sixcircles/chain.hpp"
#include "sixcircles/pl_map.hpp"
#include "sixcircles/triangle.hpp"

namespace sixcircles {

/// Exact orbit of x0 = eps under a = 1, b = 2 - eps. The pre-period grows
/// without bound as eps shrinks. Requires 0 < eps < 1/2.
ExactOrbitReport long_preperiod_family(const Rational& eps);

struct Histogram {
  std::map<std::size_t, std::size_t> bins;  // pre-period -> number of chains
  std::size_t runs = 0;
  std::size_t failures = 0;  // not constructible, degenerate, or no cycle
  std::uint64_t seed = 0;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

enum class McPolicy { Random, AlwaysSmaller };

struct MonteCarloConfig {
  std::size_t runs = 3000;
  std::uint64_t seed = 1;
  McPolicy policy = McPolicy::Random;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t start_vertex = 0;
  unsigned threads = 1;
};

/// Seed of run `index`, a pure function of the master seed and the index.
std::uint64_t run_seed(std::uint64_t master, std::uint64_t index);

/// Runs `config.runs` chains from phi0 uniform in (0, min beta). The
/// result depends only on (triangle, runs, seed, policy, max_steps,
/// start_vertex), whatever the thread count.
Histogram monte_carlo(const Triangle& tri, const MonteCarloConfig& config);

}  // namespace sixcircles
