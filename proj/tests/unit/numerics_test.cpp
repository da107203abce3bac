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
#include <cstdlib>
#include <limits>
#include <numbers>

#include "renyi/numerics.hpp"
#include "renyi/oracles.hpp"

using namespace renyi;

TEST_CASE("zeta closed forms") {
  const double pi = std::numbers::pi;
  CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
  CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-14));
  CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
  CHECK_THROWS_AS(riemann_zeta(0.5), DomainError);
}

TEST_CASE("zeta against a bracketed partial sum") {
  for (double s : {1.5, 1.1, 3.3}) {
    const oracle::Bracket b = oracle::zeta_partial_sum(s, 1000000);
    const double z = riemann_zeta(s);
    CHECK(z >= b.lo - 1e-12);
    CHECK(z <= b.hi + 1e-12);
  }
}

TEST_CASE("zeta decreases") {
  double prev = riemann_zeta(1.01);
  for (double s = 1.05; s < 30.0; s += 0.05) {
    const double z = riemann_zeta(s);
    CHECK(z < prev);
    prev = z;
  }
}

TEST_CASE("harmonic envelope fixtures") {
  CHECK(harmonic_envelope_u(1.0, 10) == doctest::Approx(2.928969).epsilon(1e-6));
  CHECK(harmonic_envelope_u(1.0, 10) >= oracle::harmonic_sum(1.0, 10));
  CHECK(harmonic_envelope_u(0.0, 5) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(harmonic_envelope_u(-1.0, 4) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(std::exp(log_harmonic_envelope_u(-3.0, 50)) ==
        doctest::Approx(harmonic_envelope_u(-3.0, 50)).epsilon(1e-12));
  CHECK(std::isfinite(log_harmonic_envelope_u(-400.0, 128)));
}

TEST_CASE("log-domain sums") {
  const std::vector<double> half = {0.5, 0.5};
  CHECK(log_power_sum(half, 2.0) == doctest::Approx(std::log(0.5)));
  const std::vector<double> p = {0.9, 0.1};
  CHECK(log_power_sum(p, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_power_sum(p, -1.0) == doctest::Approx(std::log(1.0 / 0.9 + 10.0)));
  const std::vector<double> z = {0.5, 0.0, 0.5};
  CHECK(log_power_sum(z, -2.0) == doctest::Approx(std::log(8.0)));
  const std::vector<double> big = {1000.0, 1000.0};
  CHECK(log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK(log_add_exp(-1e300, 0.0) == doctest::Approx(0.0));
  CHECK(std::exp(log_power_partial_sum(0.5, 100)) ==
        doctest::Approx(oracle::harmonic_sum(0.5, 100)).epsilon(1e-12));
}

TEST_CASE("supremize finds interior optima") {
  auto quad = [](double c) { return [c](double b) { return -(b - c) * (b - c); }; };
  const BoundReport a = supremize(quad(3.0), Interval{0.0, std::numeric_limits<double>::infinity(), true});
  CHECK(a.value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(std::abs(*a.optimizer_beta - 3.0) < 1e-6);
  CHECK(a.refined);

  const BoundReport b = supremize(quad(-2.85), Interval{-6.0, std::numeric_limits<double>::infinity(), true});
  CHECK(std::abs(*b.optimizer_beta + 2.85) < 1e-6);

  const BoundReport c = infimize([](double x) { return (x - 2.0) * (x - 2.0); },
                                 Interval{0.0, 10.0, false});
  CHECK(c.value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("supremize reports re-evaluable optimizers") {
  auto f = [](double b) { return std::sin(b) / (1.0 + b * b); };
  const BoundReport r = supremize(f, Interval{-5.0, 5.0, true});
  CHECK(f(*r.optimizer_beta) == doctest::Approx(r.value).epsilon(1e-9));
  const BoundReport again = supremize(f, Interval{-5.0, 5.0, true});
  CHECK(again.value == r.value);
  CHECK(*again.optimizer_beta == *r.optimizer_beta);
}

TEST_CASE("supremize never evaluates the puncture") {
  auto f = [](double b) {
    REQUIRE(b != 0.0);
    return -std::abs(b);
  };
  const BoundReport r = supremize(f, Interval{-1.0, 1.0, true});
  CHECK(r.value <= 0.0);
  CHECK(*r.optimizer_beta != 0.0);
}

TEST_CASE("supremize rejects undefined objectives") {
  auto nan = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
  CHECK_THROWS_AS(supremize(nan, Interval{0.0, 1.0, false}), UndefinedBound);
  SupremizeOptions tiny;
  tiny.grid_points = 1;
  CHECK_THROWS_AS(supremize([](double b) { return b; }, Interval{0.0, 1.0, false}, tiny),
                  DomainError);
}

TEST_CASE("grid density from the environment") {
  ::setenv("RENYI_GRID_POINTS", "123", 1);
  CHECK(options_from_environment().grid_points == 123);
  ::unsetenv("RENYI_GRID_POINTS");
  CHECK(options_from_environment().grid_points == default_grid_points());
  CHECK(default_grid_points() == 400);
}

TEST_CASE("scalar helpers") {
  CHECK(golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10) ==
        doctest::Approx(0.3).epsilon(1e-8));
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), DomainError);
}
