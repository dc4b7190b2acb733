#include "fcagen/null_model.hpp"

#include <numeric>
#include <span>
#include <string>

namespace fcagen {

namespace {

void require_objects(const FormalContext& reference) {
  if (reference.object_count() == 0) throw ContractError("null models need a reference with at least one object");
}

FormalContext with_reference_names(const FormalContext& reference, std::vector<AttributeSet> rows) {
  auto objects = std::vector<std::string>(reference.object_names().begin(), reference.object_names().end());
  auto attributes = std::vector<std::string>(reference.attribute_names().begin(), reference.attribute_names().end());
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext resample_degrees(const FormalContext& reference, std::span<const double> degree_probabilities, Rng& rng) {
  const std::size_t m = reference.attribute_count();
  std::vector<AttributeSet> rows;
  rows.reserve(reference.object_count());
  for (std::size_t g = 0; g < reference.object_count(); ++g) {
    rows.push_back(random_k_subset(rng, m, categorical(rng, degree_probabilities)));
  }
  return with_reference_names(reference, std::move(rows));
}

}  // namespace

std::uint64_t DegreeDistribution::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<double> DegreeDistribution::normalized() const {
  const std::uint64_t n = total();
  if (n == 0) throw ContractError("degree distribution of a context without objects");
  std::vector<double> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
  return out;
}

DegreeDistribution degree_distribution(const FormalContext& ctx) {
  DegreeDistribution d{std::vector<std::uint64_t>(ctx.attribute_count() + 1, 0)};
  for (AttributeSet r : ctx.rows()) ++d.counts[r.size()];
  return d;
}

double default_null_beta(std::size_t attribute_count) {
  return 1000.0 * (static_cast<double>(attribute_count) + 1.0);
}

FormalContext permutation_null(const FormalContext& reference, Rng& rng) {
  require_objects(reference);
  std::vector<AttributeSet> rows;
  rows.reserve(reference.object_count());
  for (AttributeSet r : reference.rows()) rows.push_back(random_k_subset(rng, reference.attribute_count(), r.size()));
  return with_reference_names(reference, std::move(rows));
}

FormalContext categorical_null(const FormalContext& reference, Rng& rng) {
  require_objects(reference);
  const std::vector<double> p = degree_distribution(reference).normalized();
  return resample_degrees(reference, p, rng);
}

FormalContext dirichlet_null(const FormalContext& reference, Rng& rng, double beta) {
  require_objects(reference);
  if (!(beta > 0.0)) throw ContractError("dirichlet_null: beta must be > 0");
  const DirichletParams params{degree_distribution(reference).normalized(), beta};
  const std::vector<double> p = dirichlet(rng, params);
  return resample_degrees(reference, p, rng);
}

}  // namespace fcagen
