#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fcagen/context.hpp"
#include "fcagen/fca.hpp"
#include "fcagen/generators.hpp"

namespace fcagen {

/// Expected number of uniform draws to see all n coupons: n * H_n.
double coupon_mean(std::uint64_t n);

/// Standard deviation of that count: sqrt(n * sum_{k=1}^{n} (n-k)/k^2).
double coupon_std(std::uint64_t n);

struct IpiRecord {
  std::size_t context_index = 0;
  std::uint64_t intents = 0;
  std::uint64_t pseudo_intents = 0;
  bool contranominal = false;
  std::uint64_t object_count = 0;

  IpiCoordinate coordinate() const noexcept { return {intents, pseudo_intents}; }
  friend bool operator==(const IpiRecord&, const IpiRecord&) = default;
};

struct DistinctCurve {
  std::vector<std::uint64_t> checkpoints;
  std::vector<std::uint64_t> distinct;
};

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the caller's thread (the one from the lowest index wins).
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

/// Worker count used when a caller passes jobs = 0.
std::size_t default_jobs();

IpiRecord measure_context(const FormalContext& ctx, std::size_t index);

/// One record per context, in input order regardless of `jobs`.
std::vector<IpiRecord> measure_batch(std::span<const FormalContext> contexts, std::size_t jobs = 0);

/// Generates and measures contexts 0..count-1 of the batch rooted at
/// spec.seed; context i uses the split stream (seed, i).
std::vector<IpiRecord> measure_batch(const GeneratorSpec& spec, std::size_t count, std::size_t jobs = 0);

/// Counts generated contexts containing a full contranominal scale, without
/// running any enumeration.
std::uint64_t count_contranominal(const GeneratorSpec& spec, std::size_t count, std::size_t jobs = 0);

/// Records per pseudo-intent count, optionally without the zero bin.
std::map<std::uint64_t, std::uint64_t> pi_histogram(std::span<const IpiRecord> records, bool omit_zero);

/// Running number of distinct (intents, pseudo-intents) pairs among the
/// first checkpoints[i] records.
DistinctCurve distinct_curve(std::span<const IpiRecord> records, std::span<const std::uint64_t> checkpoints);

DistinctCurve distinct_curve(const GeneratorSpec& spec, std::uint64_t total, std::span<const std::uint64_t> checkpoints,
                             std::size_t jobs = 0);

/// Roughly log-spaced checkpoints 1, 2, 5, 10, 20, 50, ... capped by and
/// ending at `total`.
std::vector<std::uint64_t> log_checkpoints(std::uint64_t total);

}  // namespace fcagen
