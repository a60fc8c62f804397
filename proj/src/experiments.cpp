#include "sixcircles/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "sixcircles/error.hpp"

namespace sixcircles {
namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::optional<std::size_t> one_run(const Triangle& tri, const MonteCarloConfig& config,
                                   std::size_t index, double phi_limit) {
  std::mt19937_64 engine(run_seed(config.seed, index));
  double phi0 = 0.0;
  while (phi0 == 0.0) phi0 = phi_limit * unit_interval(engine());
  const std::uint64_t choice_seed = engine();

  const AngleCircle initial =
      circle_from_u(tri, config.start_vertex, u_from_phi(phi0, tri.semiperimeter()));
  ChoicePolicy policy = AlwaysSmaller{};
  if (config.policy == McPolicy::Random) policy = RandomChoice{choice_seed};
  const ChainRecord record = run_chain(tri, initial, policy, config.max_steps);
  if (record.termination != Termination::CycleDetected) return std::nullopt;
  return record.periodicity->pre_period;
}

}  // namespace

ExactOrbitReport long_preperiod_family(const Rational& eps) {
  if (!(eps > 0 && eps < Rational(1, 2))) {
    throw Error(ErrorCode::InvalidParameters, "need 0 < eps < 1/2");
  }
  const auto params = ExactPlMapParams::make(Rational(1), Rational(2) - eps);
  // The bound is linear in 1/eps; give the orbit a little room past it.
  const std::size_t budget = preperiod_bound(params, eps) + 16;
  return orbit(params, eps, budget, Rational(0));
}

std::uint64_t run_seed(std::uint64_t master, std::uint64_t index) {
  return mix(mix(master) + 0x9E3779B97F4A7C15ULL * (index + 1));
}

Histogram monte_carlo(const Triangle& tri, const MonteCarloConfig& config) {
  if (config.start_vertex > 2) {
    throw Error(ErrorCode::InvalidParameters, "start vertex must be 0, 1 or 2");
  }
  const auto& beta = tri.betas();
  const double phi_limit = *std::min_element(beta.begin(), beta.end());

  std::vector<std::optional<std::size_t>> outcomes(config.runs);
  std::atomic<std::size_t> next_index{0};
  const auto worker = [&] {
    for (std::size_t i = next_index++; i < config.runs; i = next_index++) {
      outcomes[i] = one_run(tri, config, i, phi_limit);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Histogram histogram;
  histogram.runs = config.runs;
  histogram.seed = config.seed;
  for (const auto& outcome : outcomes) {
    if (outcome) {
      ++histogram.bins[*outcome];
    } else {
      ++histogram.failures;
    }
  }
  return histogram;
}

}  // namespace sixcircles
