#include "fcagen/generators.hpp"

#include <cmath>
#include <sstream>

namespace fcagen {

std::string to_string(Model model) {
  switch (model) {
    case Model::DirectCoin: return "direct";
    case Model::IndirectCoin: return "indirect";
    case Model::Dirichlet: return "dirichlet";
  }
  return "unknown";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void require_model(const GeneratorSpec& spec, Model model) {
  if (spec.model != model) throw ContractError("generator called with a spec for model '" + to_string(spec.model) + "'");
  spec.validate();
}

}  // namespace

std::string to_string(const BetaMode& mode) {
  return std::visit(overloaded{
                        [](BaseBeta) { return std::string("base"); },
                        [](FixedBeta f) { return "fixed(" + format_double(f.beta) + ")"; },
                        [](UniformRandomBeta) { return std::string("uniform-random"); },
                        [](ScaledBeta s) { return "scaled(" + format_double(s.c) + ")"; },
                    },
                    mode);
}

GeneratorSpec GeneratorSpec::direct_coin(std::size_t attributes, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.model = Model::DirectCoin;
  spec.attribute_count = attributes;
  spec.seed = seed;
  return spec;
}

GeneratorSpec GeneratorSpec::indirect_coin(std::size_t attributes, std::uint64_t seed) {
  GeneratorSpec spec = direct_coin(attributes, seed);
  spec.model = Model::IndirectCoin;
  return spec;
}

GeneratorSpec GeneratorSpec::dirichlet(std::size_t attributes, BetaMode mode, std::uint64_t seed) {
  GeneratorSpec spec = direct_coin(attributes, seed);
  spec.model = Model::Dirichlet;
  spec.beta_mode = mode;
  return spec;
}

GeneratorSpec GeneratorSpec::variation_a(std::size_t attributes, std::uint64_t seed) {
  return dirichlet(attributes, UniformRandomBeta{}, seed);
}

GeneratorSpec GeneratorSpec::variation_b(std::size_t attributes, double c, std::uint64_t seed) {
  return dirichlet(attributes, ScaledBeta{c}, seed);
}

void GeneratorSpec::validate() const {
  if (attribute_count < 1 || attribute_count > kMaxAttributes) {
    throw ContractError("attribute count must be in [1, 63]");
  }
  if (std::holds_alternative<RandomObjectCount>(object_count) && attribute_count > kRandomObjectCountMaxAttributes) {
    throw ContractError("random object counts need at most 20 attributes; use a fixed object count");
  }
  if (model != Model::Dirichlet) return;
  std::visit(overloaded{
                 [](BaseBeta) {},
                 [](FixedBeta f) {
                   if (!(f.beta > 0.0) || !std::isfinite(f.beta)) throw ContractError("fixed beta must be > 0");
                 },
                 [](UniformRandomBeta) {},
                 [](ScaledBeta s) {
                   if (!(s.c > 0.0) || !std::isfinite(s.c)) throw ContractError("scale factor c must be > 0");
                 },
             },
             beta_mode);
  if (!alpha.empty()) {
    if (alpha.size() != attribute_count + 1) throw ContractError("alpha must have |M|+1 components");
    DirichletParams::from_weights(alpha, 1.0).validate();
  }
}

std::vector<double> GeneratorSpec::base_measure() const {
  if (alpha.empty()) return DirichletParams::symmetric(attribute_count + 1, 1.0).alpha;
  return DirichletParams::from_weights(alpha, 1.0).alpha;
}

double resolve_beta(const BetaMode& mode, std::size_t attribute_count, Rng& rng) {
  const double base = static_cast<double>(attribute_count) + 1.0;
  return std::visit(overloaded{
                        [&](BaseBeta) { return base; },
                        [](FixedBeta f) { return f.beta; },
                        [&](UniformRandomBeta) {
                          double beta = 0.0;
                          while (beta == 0.0) beta = (1.0 - uniform01(rng)) * base;  // (0, base]
                          return beta;
                        },
                        [&](ScaledBeta s) { return s.c * base; },
                    },
                    mode);
}

std::uint64_t draw_object_count(const ObjectCountMode& mode, std::size_t attribute_count, Rng& rng) {
  if (const auto* fixed = std::get_if<FixedObjectCount>(&mode)) return fixed->n;
  if (attribute_count > kRandomObjectCountMaxAttributes) {
    throw ContractError("random object counts need at most 20 attributes");
  }
  return discrete_uniform(rng, attribute_count, std::uint64_t{1} << attribute_count);
}

FormalContext coin_toss_context(std::size_t attribute_count, std::uint64_t object_count, double p, Rng& rng) {
  std::vector<AttributeSet> rows(object_count);
  for (auto& row : rows) {
    for (std::size_t m = 0; m < attribute_count; ++m) {
      if (bernoulli(rng, p)) row.insert(m);
    }
  }
  return FormalContext::anonymous(attribute_count, std::move(rows));
}

FormalContext context_from_degrees(std::size_t attribute_count, std::span<const std::size_t> degrees, Rng& rng) {
  std::vector<AttributeSet> rows;
  rows.reserve(degrees.size());
  for (std::size_t theta : degrees) rows.push_back(random_k_subset(rng, attribute_count, theta));
  return FormalContext::anonymous(attribute_count, std::move(rows));
}

FormalContext binomial_degree_context(std::size_t attribute_count, std::uint64_t object_count, double p, Rng& rng) {
  std::vector<AttributeSet> rows;
  rows.reserve(object_count);
  for (std::uint64_t g = 0; g < object_count; ++g) {
    const auto theta = static_cast<std::size_t>(binomial(rng, attribute_count, p));
    rows.push_back(random_k_subset(rng, attribute_count, theta));
  }
  return FormalContext::anonymous(attribute_count, std::move(rows));
}

FormalContext categorical_degree_context(std::size_t attribute_count, std::uint64_t object_count,
                                         std::span<const double> degree_probabilities, Rng& rng) {
  if (degree_probabilities.size() != attribute_count + 1) {
    throw ContractError("degree distribution must have |M|+1 components");
  }
  std::vector<AttributeSet> rows;
  rows.reserve(object_count);
  for (std::uint64_t g = 0; g < object_count; ++g) {
    const std::size_t theta = categorical(rng, degree_probabilities);
    rows.push_back(random_k_subset(rng, attribute_count, theta));
  }
  return FormalContext::anonymous(attribute_count, std::move(rows));
}

FormalContext gen_direct_coin_toss(const GeneratorSpec& spec, Rng& rng) {
  require_model(spec, Model::DirectCoin);
  const std::uint64_t n = draw_object_count(spec.object_count, spec.attribute_count, rng);
  const double p = uniform01(rng);
  return coin_toss_context(spec.attribute_count, n, p, rng);
}

FormalContext gen_indirect_coin_toss(const GeneratorSpec& spec, Rng& rng) {
  require_model(spec, Model::IndirectCoin);
  const std::uint64_t n = draw_object_count(spec.object_count, spec.attribute_count, rng);
  const double p = uniform01(rng);
  return binomial_degree_context(spec.attribute_count, n, p, rng);
}

FormalContext gen_dirichlet(const GeneratorSpec& spec, Rng& rng) {
  require_model(spec, Model::Dirichlet);
  const std::uint64_t n = draw_object_count(spec.object_count, spec.attribute_count, rng);
  const double beta = resolve_beta(spec.beta_mode, spec.attribute_count, rng);
  const std::vector<double> p = fcagen::dirichlet(rng, DirichletParams{spec.base_measure(), beta});
  return categorical_degree_context(spec.attribute_count, n, p, rng);
}

FormalContext generate(const GeneratorSpec& spec, Rng& rng) {
  switch (spec.model) {
    case Model::DirectCoin: return gen_direct_coin_toss(spec, rng);
    case Model::IndirectCoin: return gen_indirect_coin_toss(spec, rng);
    case Model::Dirichlet: return gen_dirichlet(spec, rng);
  }
  throw ContractError("unknown model");
}

FormalContext generate(const GeneratorSpec& spec, std::uint64_t index) {
  Rng rng = Rng::split(spec.seed, index);
  return generate(spec, rng);
}

}  // namespace fcagen
