#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fcagen/context.hpp"
#include "fcagen/random.hpp"

namespace fcagen {

enum class Model { DirectCoin, IndirectCoin, Dirichlet };

std::string to_string(Model model);

// How the Dirichlet precision is chosen for each context.
struct BaseBeta {};                    ///< beta = |M|+1, uniform on the simplex
struct FixedBeta { double beta; };     ///< beta as given
struct UniformRandomBeta {};           ///< beta ~ Uniform(0, |M|+1]   (variation A)
struct ScaledBeta { double c = 0.1; }; ///< beta = c * (|M|+1)        (variation B)
using BetaMode = std::variant<BaseBeta, FixedBeta, UniformRandomBeta, ScaledBeta>;

std::string to_string(const BetaMode& mode);

struct RandomObjectCount {};                  ///< |G| ~ DiscreteUniform[|M|, 2^|M|]
struct FixedObjectCount { std::uint64_t n; };
using ObjectCountMode = std::variant<RandomObjectCount, FixedObjectCount>;

/// Largest |M| for which random object counts are accepted.
inline constexpr std::size_t kRandomObjectCountMaxAttributes = 20;

struct GeneratorSpec {
  Model model = Model::DirectCoin;
  std::size_t attribute_count = 10;
  BetaMode beta_mode = BaseBeta{};
  /// Base measure over degrees 0..|M|; empty means uniform. Dirichlet only.
  std::vector<double> alpha;
  ObjectCountMode object_count = RandomObjectCount{};
  std::uint64_t seed = 0;

  static GeneratorSpec direct_coin(std::size_t attributes, std::uint64_t seed = 0);
  static GeneratorSpec indirect_coin(std::size_t attributes, std::uint64_t seed = 0);
  static GeneratorSpec dirichlet(std::size_t attributes, BetaMode mode = BaseBeta{}, std::uint64_t seed = 0);
  static GeneratorSpec variation_a(std::size_t attributes, std::uint64_t seed = 0);
  static GeneratorSpec variation_b(std::size_t attributes, double c = 0.1, std::uint64_t seed = 0);

  void validate() const;

  /// Normalized base measure of length |M|+1.
  std::vector<double> base_measure() const;
};

double resolve_beta(const BetaMode& mode, std::size_t attribute_count, Rng& rng);

std::uint64_t draw_object_count(const ObjectCountMode& mode, std::size_t attribute_count, Rng& rng);

// Building blocks, one per algorithm stage once the random parameters are
// known. Tests drive these directly to pin p, theta or the degree law.

/// Every pair (g, m) is incident with probability p.
FormalContext coin_toss_context(std::size_t attribute_count, std::uint64_t object_count, double p, Rng& rng);

/// Object g receives a uniform subset of size degrees[g].
FormalContext context_from_degrees(std::size_t attribute_count, std::span<const std::size_t> degrees, Rng& rng);

/// theta_g ~ Binomial(|M|, p), then a uniform theta_g-subset.
FormalContext binomial_degree_context(std::size_t attribute_count, std::uint64_t object_count, double p, Rng& rng);

/// theta_g ~ Categorical(degree_probabilities) over {0..|M|}, then a
/// uniform theta_g-subset.
FormalContext categorical_degree_context(std::size_t attribute_count, std::uint64_t object_count,
                                         std::span<const double> degree_probabilities, Rng& rng);

FormalContext gen_direct_coin_toss(const GeneratorSpec& spec, Rng& rng);
FormalContext gen_indirect_coin_toss(const GeneratorSpec& spec, Rng& rng);
FormalContext gen_dirichlet(const GeneratorSpec& spec, Rng& rng);

/// Dispatches on spec.model.
FormalContext generate(const GeneratorSpec& spec, Rng& rng);

/// Context number `index` of a batch rooted at spec.seed.
FormalContext generate(const GeneratorSpec& spec, std::uint64_t index);

}  // namespace fcagen
