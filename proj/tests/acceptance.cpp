// Acceptance checks. Usage: fcagen_acceptance [criterion...]; no argument runs all.
// Prints one PASS/FAIL line per criterion and exits non-zero if any failed.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fcagen/analytics.hpp"
#include "fcagen/fca.hpp"
#include "fcagen/generators.hpp"
#include "fcagen/null_model.hpp"
#include "stats.hpp"

using namespace fcagen;
using namespace fcagen::test;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

FormalContext mixed_context(Rng& rng, std::size_t m) {
  switch (discrete_uniform(rng, 0, 4)) {
    case 0: return gen_direct_coin_toss(GeneratorSpec::direct_coin(m), rng);
    case 1: return gen_indirect_coin_toss(GeneratorSpec::indirect_coin(m), rng);
    case 2: return gen_dirichlet(GeneratorSpec::dirichlet(m), rng);
    case 3: return gen_dirichlet(GeneratorSpec::variation_a(m), rng);
    default: return gen_dirichlet(GeneratorSpec::variation_b(m), rng);
  }
}

Outcome oracle_equivalence() {
  Rng rng(1001);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto ctx = mixed_context(rng, 1 + discrete_uniform(rng, 0, 5));
    const auto as_set = [](const std::vector<AttributeSet>& v) { return std::set<AttributeSet>(v.begin(), v.end()); };
    if (as_set(enumerate_intents(ctx)) != as_set(brute_force_intents(ctx)) ||
        as_set(enumerate_pseudo_intents(ctx)) != as_set(brute_force_pseudo_intents(ctx))) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(500 - bad) + "/500 contexts agree with brute force"};
}

Outcome structural_facts() {
  bool ok = true;
  for (std::size_t n = 3; n <= 10; ++n) {
    ok = ok && ipi_coordinate(FormalContext::contranominal(n)) == IpiCoordinate{1ULL << n, 0};
  }
  std::vector<AttributeSet> rows;
  for (std::uint64_t b = 0; b < 1024; ++b) {
    if (std::popcount(b) == 8) rows.emplace_back(b);
  }
  const auto pis = enumerate_pseudo_intents(FormalContext::anonymous(10, std::move(rows)));
  ok = ok && pis.size() == 10;
  return {ok, "contranominal 3..10 give (2^n, 0); density 8/10 context has " + std::to_string(pis.size()) +
                  " pseudo-intents"};
}

std::uint64_t collect_all(Rng& rng, std::uint64_t n) {
  std::vector<bool> seen(n, false);
  std::uint64_t distinct = 0;
  std::uint64_t draws = 0;
  while (distinct < n) {
    ++draws;
    const auto k = discrete_uniform(rng, 0, n - 1);
    if (!seen[k]) {
      seen[k] = true;
      ++distinct;
    }
  }
  return draws;
}

Outcome coupon_formulas() {
  bool ok = std::abs(coupon_mean(10) - 29.29) <= 0.01 && std::abs(coupon_std(10) - 11.21) <= 0.05 &&
            std::abs(coupon_mean(45) - 198) <= 1 && std::abs(coupon_std(45) - 56) <= 1;
  Rng rng(1003);
  constexpr int kRuns = 20000;
  for (std::uint64_t n : {10u, 45u}) {
    std::vector<double> draws;
    for (int i = 0; i < kRuns; ++i) draws.push_back(static_cast<double>(collect_all(rng, n)));
    ok = ok && std::abs(mean(draws) - coupon_mean(n)) < 3 * coupon_std(n) / std::sqrt(double(kRuns));
  }
  return {ok, "mean/std(10) = " + fmt(coupon_mean(10)) + "/" + fmt(coupon_std(10)) + ", mean/std(45) = " +
                  fmt(coupon_mean(45)) + "/" + fmt(coupon_std(45)) + ", simulation within 3 sigma"};
}

Outcome contranominal_fractions() {
  const std::vector<std::pair<GeneratorSpec, double>> cases{
      {GeneratorSpec::indirect_coin(10, 2004), 0.343},
      {GeneratorSpec::dirichlet(10, BaseBeta{}, 2004), 0.488},
      {GeneratorSpec::variation_a(10, 2004), 0.382},
      {GeneratorSpec::variation_b(10, 0.1, 2004), 0.234},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [spec, target] : cases) {
    const double frac = static_cast<double>(count_contranominal(spec, 5000)) / 5000.0;
    ok = ok && std::abs(frac - target) <= 0.03;
    detail += (detail.empty() ? "" : ", ") + fmt(100 * frac, 3) + "% vs " + fmt(100 * target, 3) + "%";
  }
  return {ok, detail};
}

std::uint64_t final_distinct(const GeneratorSpec& spec, std::uint64_t total) {
  const std::vector<std::uint64_t> cps{total};
  return distinct_curve(spec, total, cps).distinct.back();
}

Outcome distinct_dominance() {
  const double crit = t_critical(0.05, 4);
  std::vector<double> a_minus_coin;
  std::vector<double> b_minus_a;
  std::string per_seed;
  for (std::uint64_t seed = 11; seed <= 15; ++seed) {
    const double coin = static_cast<double>(final_distinct(GeneratorSpec::direct_coin(6, seed), 10000));
    const double a = static_cast<double>(final_distinct(GeneratorSpec::variation_a(6, seed), 10000));
    const double b = static_cast<double>(final_distinct(GeneratorSpec::variation_b(6, 0.1, seed), 10000));
    a_minus_coin.push_back(a - coin);
    b_minus_a.push_back(b - a);
    per_seed += " " + fmt(coin) + "/" + fmt(a) + "/" + fmt(b);
  }
  const auto t_of = [](const std::vector<double>& d) {
    const double sd = std::sqrt(variance(d));
    return sd == 0.0 ? (mean(d) > 0 ? INFINITY : 0.0) : mean(d) / (sd / std::sqrt(double(d.size())));
  };
  const double t1 = t_of(a_minus_coin);
  const double t2 = t_of(b_minus_a);

  const double coin7 = static_cast<double>(final_distinct(GeneratorSpec::direct_coin(7, 1), 100000));
  const double a7 = static_cast<double>(final_distinct(GeneratorSpec::variation_a(7, 1), 100000));
  const double b7 = static_cast<double>(final_distinct(GeneratorSpec::variation_b(7, 0.1, 1), 100000));
  const bool full = std::abs(coin7 / 1963 - 1) <= 0.1 && std::abs(a7 / 2450 - 1) <= 0.1 &&
                    std::abs(b7 / 2550 - 1) <= 0.1;

  return {t1 > crit && t2 > crit && full,
          "coin/varA/varB at |M|=6:" + per_seed + "; t(varA-coin) = " + fmt(t1) + ", t(varB-varA) = " + fmt(t2) +
              " vs " + fmt(crit) + "; |M|=7 x 100000: " + fmt(coin7) + "/" + fmt(a7) + "/" + fmt(b7)};
}

Outcome pseudo_intent_ceiling() {
  const auto records = measure_batch(GeneratorSpec::variation_a(10, 2006), 5000);
  std::uint64_t max_pi = 0;
  for (const auto& r : records) max_pi = std::max(max_pi, r.pseudo_intents);
  return {max_pi <= 252 && max_pi > 150, "max pseudo-intents " + std::to_string(max_pi)};
}

Outcome variation_b_peak() {
  const auto records = measure_batch(GeneratorSpec::variation_b(10, 0.1, 2007), 5000);
  const auto hist = pi_histogram(records, true);
  std::uint64_t mode = 0;
  std::uint64_t best = 0;
  for (const auto& [pi, n] : hist) {
    if (n > best) {
      best = n;
      mode = pi;
    }
  }
  return {mode == 10 && best >= 250 && best <= 500,
          "modal non-zero count " + std::to_string(mode) + " with " + std::to_string(best) + " contexts"};
}

Outcome sampler_statistics() {
  Rng rng(1008);
  bool ok = true;
  std::string detail;
  constexpr int kDraws = 100000;
  for (double beta : {30.0, 3.0, 0.3}) {
    const double a = 1.0 / 3.0;
    const double var = a * (1 - a) / (beta + 1);
    std::vector<std::vector<double>> ys(3);
    for (int i = 0; i < kDraws; ++i) {
      const auto y = dirichlet(rng, DirichletParams::symmetric(3, beta));
      for (int k = 0; k < 3; ++k) ys[k].push_back(y[k]);
    }
    for (const auto& y : ys) {
      const double m = mean(y);
      const double v = variance(y);
      double m4 = 0.0;
      for (double x : y) m4 += std::pow(x - m, 4);
      m4 /= kDraws;
      ok = ok && std::abs(m - a) < 3 * std::sqrt(var / kDraws);
      ok = ok && std::abs(v - var) < 3 * std::sqrt((m4 - v * v) / kDraws);
    }
  }
  detail += "dirichlet moments";

  std::vector<std::uint64_t> bin(11, 0);
  for (int i = 0; i < kDraws; ++i) ++bin[binomial(rng, 10, 0.3)];
  const double p_bin = chi_square_gof_p(bin, binomial_pmf(10, 0.3));

  std::vector<std::uint64_t> coin(2, 0);
  for (int i = 0; i < kDraws; ++i) ++coin[bernoulli(rng, 0.3) ? 1 : 0];
  const std::vector<double> coin_p{0.7, 0.3};
  const double p_coin = chi_square_gof_p(coin, coin_p);

  std::map<std::uint64_t, std::uint64_t> subsets;
  for (int i = 0; i < kDraws; ++i) ++subsets[random_k_subset(rng, 6, 3).bits()];
  std::vector<std::uint64_t> sub_counts;
  for (const auto& [bits, n] : subsets) sub_counts.push_back(n);
  const double p_sub =
      subsets.size() == 20 ? chi_square_gof_p(sub_counts, std::vector<double>(20, 1.0 / 20)) : 0.0;

  ok = ok && p_bin > 0.001 && p_coin > 0.001 && p_sub > 0.001;
  return {ok, detail + "; chi-square p binomial " + fmt(p_bin) + ", bernoulli " + fmt(p_coin) + ", 3-subsets " +
                  fmt(p_sub)};
}

Outcome null_models() {
  Rng rng(1009);
  int preserved = 0;
  for (int i = 0; i < 100; ++i) {
    const auto spec = GeneratorSpec::direct_coin(3 + discrete_uniform(rng, 0, 9), rng());
    auto sized = spec;
    sized.object_count = FixedObjectCount{1 + discrete_uniform(rng, 0, 60)};
    const auto ref = generate(sized, rng);
    if (degree_distribution(permutation_null(ref, rng)) == degree_distribution(ref)) ++preserved;
  }

  const auto ref = generate(GeneratorSpec::dirichlet(10, FixedBeta{2.0}, 9), 0);
  const auto p = degree_distribution(ref).normalized();
  std::vector<double> avg(p.size(), 0.0);
  for (int i = 0; i < 1000; ++i) {
    const auto d = degree_distribution(dirichlet_null(ref, rng, default_null_beta(10))).normalized();
    for (std::size_t k = 0; k < p.size(); ++k) avg[k] += d[k] / 1000;
  }
  double tv = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) tv += std::abs(avg[k] - p[k]) / 2;
  return {preserved == 100 && tv < 0.02,
          std::to_string(preserved) + "/100 permutations keep degrees; dirichlet TV " + fmt(tv)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("fcagen_acceptance_" + std::to_string(rd()));
  fs::create_directories(dir);
  const std::string exe = FCAGEN_CLI_PATH;
  const auto run = [&](const std::string& args) {
    return std::system(("\"" + exe + "\" " + args + " 2>/dev/null >/dev/null").c_str()) == 0;
  };
  const auto d = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };

  bool ok = true;
  int compared = 0;
  const auto same_tree = [&](const std::string& a, const std::string& b) {
    for (const auto& entry : fs::directory_iterator(dir / a)) {
      const auto name = entry.path().filename();
      ok = ok && fs::exists(dir / b / name) && slurp(entry.path()) == slurp(dir / b / name);
      ++compared;
    }
  };

  const std::string stego = "experiment stego --model varB --attributes 8 --count 2000 --seed 10 ";
  ok = ok && run(stego + "--jobs 1 --out " + d("s1")) && run(stego + "--jobs 6 --out " + d("s6")) &&
       run("replay --manifest " + d("s1/manifest.txt") + " --jobs 3 --out " + d("sr"));
  same_tree("s1", "s6");
  same_tree("s1", "sr");

  const std::string gen = "generate --model dirichlet --attributes 7 --count 300 --seed 11 ";
  ok = ok && run(gen + "--jobs 1 --out " + d("g1")) && run(gen + "--jobs 4 --out " + d("g4")) &&
       run("replay --manifest " + d("g1/manifest.txt") + " --jobs 2 --out " + d("gr"));
  same_tree("g1", "g4");
  same_tree("g1", "gr");

  ok = ok && run("nullmodel --reference " + d("g1/ctx_0.cxt") + " --method dirichlet --count 50 --seed 12 --jobs 1 " +
                 "--out " + d("n1")) &&
       run("replay --manifest " + d("n1/manifest.txt") + " --jobs 5 --out " + d("nr"));
  same_tree("n1", "nr");

  const std::string distinct = "experiment distinct --attributes 5 --count 3000 --seed 13 ";
  ok = ok && run(distinct + "--jobs 1 --out " + d("d1")) &&
       run("replay --manifest " + d("d1/manifest.txt") + " --jobs 7 --out " + d("dr"));
  same_tree("d1", "dr");

  std::error_code ec;
  fs::remove_all(dir, ec);
  return {ok && compared > 0, std::to_string(compared) + " output files byte-identical across --jobs and replay"};
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {1, {"oracle equivalence", oracle_equivalence}},
    {2, {"structural facts", structural_facts}},
    {3, {"coupon collector", coupon_formulas}},
    {4, {"contranominal fractions", contranominal_fractions}},
    {5, {"distinct I-PI dominance", distinct_dominance}},
    {6, {"pseudo-intent ceiling", pseudo_intent_ceiling}},
    {7, {"variation B histogram peak", variation_b_peak}},
    {8, {"sampler statistics", sampler_statistics}},
    {9, {"null models", null_models}},
    {10, {"determinism", determinism}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) {
    for (const auto& [n, c] : kCriteria) which.push_back(n);
  }
  bool all = true;
  for (int n : which) {
    const auto it = kCriteria.find(n);
    if (it == kCriteria.end()) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << " (" << it->second.first
              << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
