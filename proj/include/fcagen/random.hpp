#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "fcagen/context.hpp"

namespace fcagen {

/// Derives the seed of stream `index` from a root seed. Pure function of
/// its arguments, so stream i never depends on how siblings were consumed.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) noexcept;

/// Seeded 64-bit generator. Single owner; hand each worker its own split.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static Rng split(std::uint64_t root, std::uint64_t index) { return Rng(split_seed(root, index)); }

  std::uint64_t seed() const noexcept { return seed_; }

  result_type operator()() { return engine_(); }
  static constexpr result_type min() noexcept { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// Uniform integer in [lo, hi], unbiased.
std::uint64_t discrete_uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

bool bernoulli(Rng& rng, double p);

std::uint64_t binomial(Rng& rng, std::uint64_t n, double p);

double standard_normal(Rng& rng);

/// Gamma(shape, 1). Shape 0 is the distribution degenerate at zero.
double gamma(Rng& rng, double shape);

/// Dirichlet parameters as base measure `alpha` (sums to 1) and precision
/// `beta`; the concentration vector is beta * alpha.
struct DirichletParams {
  std::vector<double> alpha;
  double beta = 1.0;

  /// alpha = (1/K, ..., 1/K)
  static DirichletParams symmetric(std::size_t k, double beta);

  /// Builds the base measure by normalizing non-negative weights.
  static DirichletParams from_weights(std::span<const double> weights, double beta);

  /// Throws ContractError if K < 2, any alpha is negative, all are zero,
  /// the sum is off by more than 1e-12, or beta <= 0.
  void validate() const;
};

/// One draw from Dirichlet(beta * alpha). Components with alpha_i = 0 are
/// exactly 0 and the result sums to 1.
std::vector<double> dirichlet(Rng& rng, const DirichletParams& params);

/// Inverse-CDF draw. Never returns an index with zero mass.
std::size_t categorical(Rng& rng, std::span<const double> probabilities);

/// Uniform member of { B subset of {0..n-1} : |B| = k }.
AttributeSet random_k_subset(Rng& rng, std::size_t n, std::size_t k);

}  // namespace fcagen
