#include <doctest.h>

#include <cmath>
#include <map>

#include "fcagen/random.hpp"
#include "stats.hpp"

using namespace fcagen;
using namespace fcagen::test;

TEST_SUITE("random") {

TEST_CASE("streams are reproducible and splits are independent of siblings") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a() == b());

  Rng first = Rng::split(7, 3);
  const auto expected = first();
  Rng sibling = Rng::split(7, 2);
  for (int i = 0; i < 100; ++i) sibling();
  Rng again = Rng::split(7, 3);
  CHECK(again() == expected);
  CHECK(split_seed(7, 3) != split_seed(7, 4));
  CHECK(split_seed(7, 3) != split_seed(8, 3));
}

TEST_CASE("degenerate coins and ranges") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(bernoulli(rng, 0.0));
    CHECK(bernoulli(rng, 1.0));
    CHECK(discrete_uniform(rng, 5, 5) == 5);
  }
  CHECK_THROWS_AS(bernoulli(rng, -0.1), ContractError);
  CHECK_THROWS_AS(bernoulli(rng, 1.5), ContractError);
  CHECK_THROWS_AS(discrete_uniform(rng, 6, 5), ContractError);
  for (int i = 0; i < 100; ++i) {
    const auto x = discrete_uniform(rng, 10, 1024);
    CHECK(x >= 10);
    CHECK(x <= 1024);
  }
  // Full 64-bit range must not overflow.
  discrete_uniform(rng, 0, std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("uniform01 mean") {
  Rng rng(2);
  double sum = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 1'000'000; ++i) {
    const double u = uniform01(rng);
    sum += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(std::abs(sum / 1e6 - 0.5) < 0.002);
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("discrete uniform is uniform") {
  Rng rng(3);
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[discrete_uniform(rng, 0, 6)];
  const std::vector<double> p(7, 1.0 / 7.0);
  CHECK(chi_square_gof_p(counts, p) > 0.001);
}

TEST_CASE("binomial") {
  Rng rng(4);
  CHECK(binomial(rng, 10, 0.0) == 0);
  CHECK(binomial(rng, 10, 1.0) == 10);
  CHECK(binomial(rng, 0, 0.5) == 0);
  CHECK_THROWS_AS(binomial(rng, 3, 1.1), ContractError);

  std::vector<double> draws;
  for (int i = 0; i < 100000; ++i) draws.push_back(static_cast<double>(binomial(rng, 10, 0.3)));
  CHECK(std::abs(mean(draws) - 3.0) < 0.05);
  CHECK(std::abs(variance(draws) - 2.1) < 0.1);

  // Both branches (p <= 1/2 and the mirrored p > 1/2) against the pmf.
  for (double p : {0.3, 0.8}) {
    std::vector<std::uint64_t> counts(11, 0);
    for (int i = 0; i < 100000; ++i) ++counts[binomial(rng, 10, p)];
    CHECK(chi_square_gof_p(counts, binomial_pmf(10, p)) > 0.001);
  }
}

TEST_CASE("binomial matches a sum of Bernoulli draws") {
  Rng rng(5);
  std::vector<std::uint64_t> direct(11, 0);
  std::vector<std::uint64_t> summed(11, 0);
  for (int i = 0; i < 10000; ++i) {
    ++direct[binomial(rng, 10, 0.37)];
    std::size_t s = 0;
    for (int k = 0; k < 10; ++k) s += bernoulli(rng, 0.37) ? 1 : 0;
    ++summed[s];
  }
  CHECK(chi_square_two_sample_p(direct, summed) > 0.001);
}

TEST_CASE("gamma moments") {
  Rng rng(6);
  CHECK(gamma(rng, 0.0) == 0.0);
  CHECK_THROWS_AS(gamma(rng, -1.0), ContractError);

  // 3 sigma of the mean is 3*sqrt(shape/1e5).
  for (auto [shape, tol] : {std::pair{2.0, 0.05}, std::pair{0.5, 0.03}}) {
    std::vector<double> draws;
    for (int i = 0; i < 100000; ++i) draws.push_back(gamma(rng, shape));
    CHECK(std::abs(mean(draws) - shape) < tol);
    CHECK(variance(draws) == doctest::Approx(shape).epsilon(0.05));
  }
}

TEST_CASE("dirichlet support and normalization") {
  Rng rng(7);
  const DirichletParams one_hot{{0.0, 0.0, 1.0, 0.0}, 3.0};
  for (int i = 0; i < 100; ++i) CHECK(dirichlet(rng, one_hot) == std::vector<double>{0.0, 0.0, 1.0, 0.0});

  const DirichletParams with_zero{{0.5, 0.0, 0.5}, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const auto y = dirichlet(rng, with_zero);
    CHECK(y[1] == 0.0);
    CHECK(std::abs(y[0] + y[1] + y[2] - 1.0) < 1e-12);
  }

  // Very small concentrations stay on the simplex instead of underflowing.
  for (double beta : {1e-3, 1e-8, 1e-12}) {
    for (int i = 0; i < 200; ++i) {
      const auto y = dirichlet(rng, DirichletParams::symmetric(11, beta));
      double s = 0.0;
      for (double v : y) {
        CHECK(v >= 0.0);
        s += v;
      }
      CHECK(std::abs(s - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("dirichlet parameter validation") {
  Rng rng(8);
  CHECK_THROWS_AS(dirichlet(rng, DirichletParams{{0.0, 0.0}, 1.0}), ContractError);
  CHECK_THROWS_AS(dirichlet(rng, DirichletParams{{0.5, 0.5}, 0.0}), ContractError);
  CHECK_THROWS_AS(dirichlet(rng, DirichletParams{{1.0}, 1.0}), ContractError);
  CHECK_THROWS_AS(dirichlet(rng, DirichletParams{{0.6, 0.6}, 1.0}), ContractError);
  CHECK_THROWS_AS(dirichlet(rng, DirichletParams{{1.5, -0.5}, 1.0}), ContractError);
  CHECK_NOTHROW(DirichletParams::from_weights(std::vector<double>{1, 0, 3}, 2.0).validate());
}

TEST_CASE("dirichlet moments") {
  Rng rng(9);
  constexpr int kDraws = 100000;
  constexpr double a = 1.0 / 3.0;

  SUBCASE("mean at beta*alpha = (1,1,1)") {
    std::vector<double> y0, y1, y2;
    for (int i = 0; i < kDraws; ++i) {
      const auto y = dirichlet(rng, DirichletParams::symmetric(3, 3.0));
      y0.push_back(y[0]);
      y1.push_back(y[1]);
      y2.push_back(y[2]);
    }
    CHECK(std::abs(mean(y0) - a) < 0.005);
    CHECK(std::abs(mean(y1) - a) < 0.005);
    CHECK(std::abs(mean(y2) - a) < 0.005);

    // Covariance is -alpha_i alpha_j / (beta + 1) = -1/36.
    double cov = 0.0;
    const double m0 = mean(y0);
    const double m1 = mean(y1);
    for (int i = 0; i < kDraws; ++i) cov += (y0[i] - m0) * (y1[i] - m1);
    cov /= kDraws - 1;
    CHECK(cov < 0.0);
    CHECK(std::abs(cov) == doctest::Approx(1.0 / 36.0).epsilon(0.05));
  }

  SUBCASE("variance follows the precision") {
    for (auto [beta, expected] : {std::pair{30.0, 2.0 / 279.0}, std::pair{0.3, (2.0 / 9.0) / 1.3}}) {
      std::vector<double> y0;
      for (int i = 0; i < kDraws; ++i) y0.push_back(dirichlet(rng, DirichletParams::symmetric(3, beta))[0]);
      CHECK(variance(y0) == doctest::Approx(expected).epsilon(0.10));
      CHECK(std::abs(mean(y0) - a) < 3.0 * std::sqrt(expected / kDraws));
    }
  }
}

TEST_CASE("categorical") {
  Rng rng(10);
  const std::vector<double> one_hot{0.0, 0.0, 1.0};
  for (int i = 0; i < 1000; ++i) CHECK(categorical(rng, one_hot) == 2);

  const std::vector<double> fair{0.5, 0.5};
  int zeros = 0;
  for (int i = 0; i < 100000; ++i) zeros += categorical(rng, fair) == 0 ? 1 : 0;
  CHECK(std::abs(zeros / 1e5 - 0.5) < 0.005);

  const std::vector<double> gap{0.3, 0.0, 0.7, 0.0};
  bool hit_zero_mass = false;
  for (int i = 0; i < 1'000'000; ++i) {
    const auto k = categorical(rng, gap);
    hit_zero_mass = hit_zero_mass || k == 1 || k == 3;
  }
  CHECK_FALSE(hit_zero_mass);

  CHECK_THROWS_AS(categorical(rng, std::vector<double>{}), ContractError);
  CHECK_THROWS_AS(categorical(rng, std::vector<double>{0.5, 0.6}), ContractError);
  CHECK_THROWS_AS(categorical(rng, std::vector<double>{1.5, -0.5}), ContractError);
}

TEST_CASE("k-subsets") {
  Rng rng(11);
  CHECK(random_k_subset(rng, 6, 0) == AttributeSet{});
  CHECK(random_k_subset(rng, 6, 6) == AttributeSet::full(6));
  CHECK_THROWS_AS(random_k_subset(rng, 3, 4), ContractError);
  CHECK_THROWS_AS(random_k_subset(rng, 64, 1), ContractError);
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_k_subset(rng, 63, 17);
    CHECK(s.size() == 17);
    CHECK(s.is_subset_of(AttributeSet::full(63)));
  }

  std::map<std::uint64_t, int> pairs;
  for (int i = 0; i < 100000; ++i) ++pairs[random_k_subset(rng, 5, 2).bits()];
  CHECK(pairs.size() == 10);
  for (const auto& [bits, n] : pairs) CHECK(std::abs(n / 1e5 - 0.1) < 0.01);

  std::map<std::uint64_t, std::uint64_t> triples;
  for (int i = 0; i < 100000; ++i) ++triples[random_k_subset(rng, 6, 3).bits()];
  REQUIRE(triples.size() == 20);
  std::vector<std::uint64_t> counts;
  for (const auto& [bits, n] : triples) counts.push_back(n);
  CHECK(chi_square_gof_p(counts, std::vector<double>(20, 1.0 / 20.0)) > 0.001);
}

}  // TEST_SUITE
