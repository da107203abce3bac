// Copyright 2026 The renyi-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/fixtures.hpp"
#include "renyi/guessing.hpp"
#include "renyi/hypothesis.hpp"
#include "renyi/measures.hpp"
#include "renyi/oracles.hpp"

using namespace renyi;

TEST_CASE("locus endpoints") {
  for (std::size_t m : {2u, 5u, 16u}) {
    for (double rho : {0.5, 1.0, 3.0}) {
      const LocusBounds zero = locus_bounds(0.0, m, rho);
      CHECK(zero.lower == doctest::Approx(1.0));
      CHECK(zero.upper == doctest::Approx(1.0));
      const double top = 1.0 - 1.0 / static_cast<double>(m);
      double flat = 0.0;
      for (std::size_t j = 1; j <= m; ++j) flat += std::pow(double(j), rho);
      flat /= static_cast<double>(m);
      const LocusBounds full = locus_bounds(top, m, rho);
      CHECK(full.lower == doctest::Approx(flat));
      CHECK(full.upper == doctest::Approx(flat));
    }
  }
  CHECK_THROWS_AS(locus_bounds(0.9, 4, 1.0), DomainError);
  CHECK_THROWS_AS(locus_bounds(0.1, 1, 1.0), DomainError);
  CHECK_THROWS_AS(locus_bounds(0.1, 4, 0.0), DomainError);
}

TEST_CASE("locus at rho = 1 in closed form") {
  for (std::size_t m : {8u, 64u}) {
    const double mm = static_cast<double>(m);
    for (int i = 0; i < 50; ++i) {
      const double eps = (1.0 - 1.0 / mm) * i / 49.0;
      const double k = std::floor(1.0 / (1.0 - eps) + 1e-12);
      const double lo = 1.0 + k * (1.0 + eps) / 2.0 - (1.0 - eps) * k * k / 2.0;
      const LocusBounds b = locus_bounds(eps, m, 1.0);
      CHECK(b.lower == doctest::Approx(lo).epsilon(1e-12));
      CHECK(b.upper == doctest::Approx(1.0 + mm * eps / 2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("both ends of the locus are attained") {
  const std::size_t m = 7;
  for (double eps : {0.1, 0.35, 0.6, 0.8}) {
    for (double rho : {0.5, 2.0}) {
      const double keep = 1.0 - eps;
      const auto k = static_cast<std::size_t>(std::floor(1.0 / keep + 1e-12));
      std::vector<double> low(m, 0.0);
      for (std::size_t i = 0; i < k; ++i) low[i] = keep;
      if (k < m) low[k] = 1.0 - keep * static_cast<double>(k);
      std::vector<double> high(m, eps / double(m - 1));
      high[0] = keep;
      const LocusBounds b = locus_bounds(eps, m, rho);
      CHECK(exact_moment(Pmf(low), rho) == doctest::Approx(b.lower).epsilon(1e-12));
      CHECK(exact_moment(Pmf(high), rho) == doctest::Approx(b.upper).epsilon(1e-12));
    }
  }
}

TEST_CASE("lower envelope is convex") {
  for (double rho : {0.5, 1.0, 4.0}) {
    for (int i = 1; i < 99; ++i) {
      const double u = 0.95 * i / 99.0;
      const double h = 0.95 / 99.0;
      CHECK(locus_lower(u, rho) <= 0.5 * (locus_lower(u - h, rho) + locus_lower(u + h, rho)) + 1e-12);
    }
  }
}

TEST_CASE("diagonal joint sits on the upper edge") {
  const JointPmf j = testing::diagonal_joint();
  const double eps = map_error(j);
  CHECK(eps == doctest::Approx(3.0 / 13.0));
  for (double rho : {0.5, 1.0, 2.0, 5.0}) {
    const double closed = (10.0 + std::pow(2.0, rho) + std::pow(3.0, rho) + std::pow(4.0, rho)) / 13.0;
    CHECK(exact_conditional_moment(j, rho) == doctest::Approx(closed).epsilon(1e-12));
    CHECK(locus_bounds(eps, 4, rho).upper == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("moment derivatives and recovery") {
  const JointPmf two = JointPmf::from_rows({{0.35, 0.35}, {0.15, 0.15}});
  const auto z2 = moment_derivatives(two);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0] == doctest::Approx(1.0));
  CHECK(z2[1] == doctest::Approx(0.3 * std::log(2.0)));
  CHECK(recover_map_error(z2) == doctest::Approx(0.3).epsilon(1e-12));

  const JointPmf d = testing::diagonal_joint();
  const auto z = moment_derivatives(d);
  CHECK(z[1] == doctest::Approx((std::log(2.0) + std::log(3.0) + std::log(4.0)) / 13.0));
  CHECK(recover_map_error(z) == doctest::Approx(3.0 / 13.0).epsilon(1e-12));
  CHECK(recover_map_error(moment_derivatives(testing::circulant_joint())) ==
        doctest::Approx(0.64).epsilon(1e-10));

  const auto u = rank_masses(d);
  CHECK(u[0] == doctest::Approx(10.0 / 13.0));
  const auto zu = moment_derivatives_from_rank_masses(u);
  for (std::size_t k = 0; k < z.size(); ++k) CHECK(zu[k] == doctest::Approx(z[k]));

  std::vector<double> big(13, 0.0);
  big[0] = 1.0;
  CHECK_THROWS_AS(recover_map_error(big), DomainError);
}

TEST_CASE("log-Vandermonde determinant") {
  for (std::size_t m = 2; m <= 8; ++m) {
    CHECK(log_vandermonde_constant(m) ==
          doctest::Approx(oracle::log_vandermonde_determinant(m)).epsilon(1e-9));
  }
}

TEST_CASE("error lower bounds from moments") {
  const JointPmf c = testing::circulant_joint();
  const std::vector<std::pair<double, double>> moments = {
      {-1.0, 0.463}, {-0.5, 0.475}, {-0.25, 0.482}, {0.2, 0.494}, {0.5, 0.502}, {0.8, 0.510}};
  for (const auto& [alpha, ref] : moments) {
    const double v = error_lb_from_moments(c, alpha).value;
    CHECK(std::abs(v - ref) < 5e-4);
    CHECK(v <= 0.64);
  }
  CHECK(std::abs(holder_error_lb(c, -1.0) - 0.447) < 5e-4);
  CHECK(std::abs(holder_error_lb(c, -0.5) - 0.355) < 5e-4);
  CHECK(std::abs(holder_error_lb(c, -0.25) - 0.206) < 5e-4);
  CHECK(std::abs(fano_error_lb(c, 0.2) - 0.523) < 5e-4);
  CHECK(std::abs(fano_error_lb(c, 0.5) - 0.530) < 5e-4);
  CHECK(std::abs(fano_error_lb(c, 0.8) - 0.536) < 5e-4);
  CHECK(std::abs(fano_error_lb(c, 0.99) - 0.540) < 5e-4);
  CHECK(std::abs(shannon_error_lb(c) - 0.146) < 5e-4);

  const auto base = error_lb_baselines(c, 0.5);
  CHECK(base.count("fano") == 1);
  CHECK(base.count("shannon") == 1);
  CHECK(error_lb_baselines(c, -0.5).count("holder") == 1);
  CHECK_THROWS_AS(error_lb_from_moments(c, 1.0), DomainError);
  CHECK_THROWS_AS(error_lb_from_moments(c, 0.0), DomainError);
}

TEST_CASE("order 0.99 near the drop of the envelope") {
  const JointPmf c = testing::circulant_joint();
  const BoundReport full = error_lb_from_moments(c, 0.99);
  CHECK(full.value <= map_error(c));
  // Restricting rho so that 99 rho stays below one recovers the value
  // obtained from the |beta| < 1 branch of the envelope alone.
  const double alpha = 0.99;
  const double h = arimoto_conditional_entropy(c, alpha);
  auto objective = [&](double rho) {
    const double beta = alpha * rho / (1.0 - alpha);
    const double a = (1.0 / alpha - 1.0) * (h - log_harmonic_envelope_u(beta, 4));
    double den = 0.0;
    for (int j = 2; j <= 4; ++j) den += std::pow(double(j), rho) - 1.0;
    return std::expm1(a) / (den / 3.0);
  };
  const BoundReport restricted = supremize(objective, Interval{0.0, 1.0 / 99.0 - 1e-12, true});
  CHECK(std::abs(restricted.value - 0.515) < 5e-4);
  CHECK(restricted.value <= full.value + 1e-12);
}

TEST_CASE("error bounds never exceed the MAP error") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const JointPmf j = testing::random_joint(rng, 2 + t % 6, 1 + t % 3);
    const double e = map_error(j);
    for (double alpha : {-1.0, 0.5}) CHECK(error_lb_from_moments(j, alpha).value <= e + 1e-9);
    CHECK(shannon_error_lb(j) <= e + 1e-9);
  }
}
