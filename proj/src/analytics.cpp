#include "fcagen/analytics.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace fcagen {

double coupon_mean(std::uint64_t n) {
  if (n < 1) throw ContractError("coupon_mean: n must be >= 1");
  double harmonic = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);
  return static_cast<double>(n) * harmonic;
}

double coupon_std(std::uint64_t n) {
  if (n < 1) throw ContractError("coupon_std: n must be >= 1");
  double sum = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    sum += static_cast<double>(n - k) / (kd * kd);
  }
  return std::sqrt(static_cast<double>(n) * sum);
}

std::size_t default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        failed = true;
      }
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  threads.clear();
  if (error) std::rethrow_exception(error);
}

IpiRecord measure_context(const FormalContext& ctx, std::size_t index) {
  const IpiCoordinate ipi = ipi_coordinate(ctx);
  return {index, ipi.intents, ipi.pseudo_intents, contains_full_contranominal(ctx), ctx.object_count()};
}

std::vector<IpiRecord> measure_batch(std::span<const FormalContext> contexts, std::size_t jobs) {
  std::vector<IpiRecord> records(contexts.size());
  parallel_for(contexts.size(), jobs, [&](std::size_t i) { records[i] = measure_context(contexts[i], i); });
  return records;
}

std::vector<IpiRecord> measure_batch(const GeneratorSpec& spec, std::size_t count, std::size_t jobs) {
  spec.validate();
  std::vector<IpiRecord> records(count);
  parallel_for(count, jobs, [&](std::size_t i) { records[i] = measure_context(generate(spec, i), i); });
  return records;
}

std::uint64_t count_contranominal(const GeneratorSpec& spec, std::size_t count, std::size_t jobs) {
  spec.validate();
  std::vector<char> hit(count, 0);
  parallel_for(count, jobs, [&](std::size_t i) { hit[i] = contains_full_contranominal(generate(spec, i)) ? 1 : 0; });
  std::uint64_t total = 0;
  for (char h : hit) total += static_cast<std::uint64_t>(h);
  return total;
}

std::map<std::uint64_t, std::uint64_t> pi_histogram(std::span<const IpiRecord> records, bool omit_zero) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const IpiRecord& r : records) {
    if (omit_zero && r.pseudo_intents == 0) continue;
    ++histogram[r.pseudo_intents];
  }
  return histogram;
}

DistinctCurve distinct_curve(std::span<const IpiRecord> records, std::span<const std::uint64_t> checkpoints) {
  DistinctCurve curve;
  std::set<IpiCoordinate> seen;
  std::size_t consumed = 0;
  std::uint64_t previous = 0;
  for (std::uint64_t checkpoint : checkpoints) {
    if (checkpoint <= previous && !curve.checkpoints.empty()) throw ContractError("checkpoints must increase");
    if (checkpoint > records.size()) throw ContractError("checkpoint beyond the number of records");
    for (; consumed < checkpoint; ++consumed) seen.insert(records[consumed].coordinate());
    curve.checkpoints.push_back(checkpoint);
    curve.distinct.push_back(seen.size());
    previous = checkpoint;
  }
  return curve;
}

DistinctCurve distinct_curve(const GeneratorSpec& spec, std::uint64_t total, std::span<const std::uint64_t> checkpoints,
                             std::size_t jobs) {
  for (std::uint64_t c : checkpoints) {
    if (c > total) throw ContractError("checkpoint beyond the total number of contexts");
  }
  const std::vector<IpiRecord> records = measure_batch(spec, static_cast<std::size_t>(total), jobs);
  return distinct_curve(records, checkpoints);
}

std::vector<std::uint64_t> log_checkpoints(std::uint64_t total) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t decade = 1; decade <= total; decade *= 10) {
    for (std::uint64_t step : {1, 2, 5}) {
      const std::uint64_t c = decade * step;
      if (c < total) out.push_back(c);
    }
    if (decade > total / 10) break;
  }
  if (total > 0) out.push_back(total);
  return out;
}

}  // namespace fcagen
