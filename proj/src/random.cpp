#include "fcagen/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace fcagen {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError(std::string(what) + ": probability outside [0, 1]");
}

// Marsaglia-Tsang for shape >= 1. Returns log of the draw so callers with
// tiny shapes can stay in log space.
double log_gamma_draw_ge1(Rng& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d * v);
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d * v);
  }
}

// log of a Gamma(shape, 1) draw for shape > 0. Shapes below one use the
// boost Gamma(a) = Gamma(a + 1) * U^(1/a).
double log_gamma_draw(Rng& rng, double shape) {
  if (shape >= 1.0) return log_gamma_draw_ge1(rng, shape);
  const double boosted = log_gamma_draw_ge1(rng, shape + 1.0);
  double u = 0.0;
  do {
    u = uniform01(rng);
  } while (u == 0.0);
  return boosted + std::log(u) / shape;
}

}  // namespace

std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(root) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t discrete_uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw ContractError("discrete_uniform: lo > hi");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

bool bernoulli(Rng& rng, double p) {
  require_probability(p, "bernoulli");
  return uniform01(rng) < p;
}

std::uint64_t binomial(Rng& rng, std::uint64_t n, double p) {
  require_probability(p, "binomial");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial(rng, n, 1.0 - p);
  // Waiting times between successes are geometric; count how many fit in n.
  const double log_q = std::log1p(-p);
  std::uint64_t successes = 0;
  std::uint64_t position = 0;
  for (;;) {
    const double u = 1.0 - uniform01(rng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q) + 1.0;
    if (gap > static_cast<double>(n - position)) return successes;
    position += static_cast<std::uint64_t>(gap);
    ++successes;
  }
}

double standard_normal(Rng& rng) {
  // Marsaglia polar method; the second variate is discarded to keep the
  // generator stateless beyond the bit stream.
  for (;;) {
    const double u = 2.0 * uniform01(rng) - 1.0;
    const double v = 2.0 * uniform01(rng) - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double gamma(Rng& rng, double shape) {
  if (!(shape >= 0.0) || !std::isfinite(shape)) throw ContractError("gamma: shape must be finite and >= 0");
  if (shape == 0.0) return 0.0;
  return std::exp(log_gamma_draw(rng, shape));
}

DirichletParams DirichletParams::symmetric(std::size_t k, double beta) {
  if (k == 0) throw ContractError("dirichlet: K must be at least 2");
  return DirichletParams{std::vector<double>(k, 1.0 / static_cast<double>(k)), beta};
}

DirichletParams DirichletParams::from_weights(std::span<const double> weights, double beta) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ContractError("dirichlet: weights must be finite and >= 0");
    total += w;
  }
  if (total <= 0.0) throw ContractError("dirichlet: weights are all zero");
  DirichletParams params{std::vector<double>(weights.begin(), weights.end()), beta};
  for (double& a : params.alpha) a /= total;
  return params;
}

void DirichletParams::validate() const {
  if (alpha.size() < 2) throw ContractError("dirichlet: K must be at least 2");
  double total = 0.0;
  bool any_positive = false;
  for (double a : alpha) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ContractError("dirichlet: alpha components must be finite and >= 0");
    any_positive = any_positive || a > 0.0;
    total += a;
  }
  if (!any_positive) throw ContractError("dirichlet: alpha is all zero");
  if (std::abs(total - 1.0) > 1e-12) throw ContractError("dirichlet: alpha must sum to 1");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ContractError("dirichlet: beta must be finite and > 0");
}

std::vector<double> dirichlet(Rng& rng, const DirichletParams& params) {
  params.validate();
  const std::size_t k = params.alpha.size();
  // Work with log Z_i: for shapes far below one, Z_i itself underflows.
  std::vector<double> log_z(k, -std::numeric_limits<double>::infinity());
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    const double shape = params.beta * params.alpha[i];
    if (shape > 0.0) {
      log_z[i] = log_gamma_draw(rng, shape);
      max_log = std::max(max_log, log_z[i]);
    }
  }
  std::vector<double> y(k, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (params.alpha[i] > 0.0) {
      y[i] = std::exp(log_z[i] - max_log);
      total += y[i];
    }
  }
  std::size_t largest = 0;
  for (std::size_t i = 0; i < k; ++i) {
    y[i] /= total;
    if (y[i] > y[largest]) largest = i;
  }
  // Fold rounding drift into the largest component.
  double rest = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != largest) rest += y[i];
  }
  y[largest] = 1.0 - rest;
  return y;
}

std::size_t categorical(Rng& rng, std::span<const double> probabilities) {
  if (probabilities.empty()) throw ContractError("categorical: empty probability vector");
  double total = 0.0;
  std::size_t last_positive = probabilities.size();
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= 0.0) || !std::isfinite(p)) throw ContractError("categorical: probabilities must be >= 0");
    if (p > 0.0) last_positive = i;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ContractError("categorical: probabilities must sum to 1");
  const double u = uniform01(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < last_positive; ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  return last_positive;
}

AttributeSet random_k_subset(Rng& rng, std::size_t n, std::size_t k) {
  if (n > kMaxAttributes) throw ContractError("random_k_subset: universe larger than 63");
  if (k > n) throw ContractError("random_k_subset: k > n");
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  std::array<std::uint8_t, kMaxAttributes> pool{};
  std::iota(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n), std::uint8_t{0});
  AttributeSet out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(discrete_uniform(rng, i, n - 1));
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

}  // namespace fcagen
