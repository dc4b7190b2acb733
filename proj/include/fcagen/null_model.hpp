#pragma once

#include <cstdint>
#include <vector>

#include "fcagen/context.hpp"
#include "fcagen/random.hpp"

namespace fcagen {

/// Histogram of attributes per object: counts[k] objects have degree k.
struct DegreeDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  /// counts / |G|. Throws ContractError when there are no objects.
  std::vector<double> normalized() const;

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
};

DegreeDistribution degree_distribution(const FormalContext& ctx);

/// beta = 1000 * (|M|+1)
double default_null_beta(std::size_t attribute_count);

// Randomizations of a reference context. Each keeps |G|, |M| and all names;
// only incidences change. References without objects are rejected.

/// Every row becomes a uniform subset of the same size.
FormalContext permutation_null(const FormalContext& reference, Rng& rng);

/// Each object draws a fresh degree from the reference degree distribution.
FormalContext categorical_null(const FormalContext& reference, Rng& rng);

/// One p ~ Dirichlet(beta * reference degree distribution) per output, then
/// each object draws its degree from Categorical(p).
FormalContext dirichlet_null(const FormalContext& reference, Rng& rng, double beta);

}  // namespace fcagen
