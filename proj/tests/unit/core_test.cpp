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
#include "renyi/core.hpp"
#include "renyi/guessing.hpp"
#include "renyi/hypothesis.hpp"

using namespace renyi;

TEST_CASE("pmf validation and renormalization") {
  CHECK_THROWS_AS(Pmf({0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(Pmf({-0.1, 1.1}), ValidationError);
  CHECK_THROWS_AS(Pmf(std::vector<double>{}), ValidationError);
  const Pmf p({0.5 + 4e-13, 0.5});
  CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(p.size() == 2);
}

TEST_CASE("pmf accessors") {
  const Pmf p({0.2, 0.0, 0.5, 0.3});
  CHECK(p.p_max() == 0.5);
  CHECK(p.p_min_positive() == 0.2);
  CHECK(p.support_size() == 3);
  CHECK(p.has_zero_mass());
  CHECK_FALSE(p.is_deterministic());
  CHECK(p.support_restriction().size() == 3);
  CHECK(p.sorted_descending() == std::vector<double>{0.5, 0.3, 0.2, 0.0});
  CHECK(Pmf::deterministic(4, 2).is_deterministic());
  CHECK(Pmf::equiprobable(8)[7] == doctest::Approx(0.125));
}

TEST_CASE("geometric pmf") {
  const Pmf g = Pmf::geometric(0.9, 32);
  const double z = (1.0 - std::pow(0.9, 32)) / 0.1;
  CHECK(g[0] == doctest::Approx(1.0 / z).epsilon(1e-14));
  CHECK(g[5] / g[4] == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("ranking sorts descending with a stable tie break") {
  CHECK(ranking(Pmf({0.5, 0.3, 0.2})).guess_of == std::vector<std::size_t>{1, 2, 3});
  const Ranking r = ranking(Pmf({0.2, 0.5, 0.3}));
  CHECK(r.guess_of == std::vector<std::size_t>{3, 1, 2});
  CHECK(r.order == std::vector<std::size_t>{1, 2, 0});
  CHECK(ranking(Pmf::equiprobable(4)).guess_of == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("moments do not depend on how ties are broken") {
  const Pmf p({0.25, 0.125, 0.25, 0.125, 0.25});
  const Pmf q({0.125, 0.25, 0.25, 0.25, 0.125});
  for (double rho : {0.5, 1.0, 3.0}) {
    CHECK(exact_moment(p, rho) == doctest::Approx(exact_moment(q, rho)).epsilon(1e-15));
  }
}

TEST_CASE("convolved sums and products") {
  const Pmf u({0.4, 0.3, 0.2, 0.1});
  const Pmf x2 = convolved_sum(u, 2);
  CHECK(x2.size() == 7);
  CHECK(x2[0] == doctest::Approx(0.16));
  CHECK(x2[6] == doctest::Approx(0.01));
  CHECK(convolved_sum(u, 100).size() == 301);
  const Pmf p3 = product_pmf(Pmf({4.0 / 7, 2.0 / 7, 1.0 / 7}), 3);
  CHECK(p3.size() == 27);
  CHECK(p3[0] == doctest::Approx(64.0 / 343.0));
}

TEST_CASE("joint slices") {
  const JointPmf j = testing::diagonal_joint();
  const auto py = j.marginal_y();
  for (double v : py) CHECK(v == doctest::Approx(0.25));
  const Pmf c = j.conditional(0);
  CHECK(c[0] == doctest::Approx(10.0 / 13.0));
  CHECK(c[1] == doctest::Approx(1.0 / 13.0));
  CHECK(j.slice_support(0) == 4);

  const JointPmf z = JointPmf::from_rows({{0.5, 0.0}, {0.5, 0.0}});
  CHECK_THROWS_AS(z.conditional(1), DomainError);
}

TEST_CASE("independent joints condition to the marginal") {
  const std::vector<double> px = {0.6, 0.3, 0.1};
  const std::vector<double> py = {0.25, 0.75};
  std::vector<std::vector<double>> rows(3, std::vector<double>(2));
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 2; ++y) rows[x][y] = px[x] * py[y];
  }
  const JointPmf j = JointPmf::from_rows(rows);
  for (std::size_t y = 0; y < 2; ++y) {
    const Pmf c = j.conditional(y);
    for (std::size_t x = 0; x < 3; ++x) CHECK(c[x] == doctest::Approx(px[x]));
  }
}

TEST_CASE("map error") {
  CHECK(map_error(testing::diagonal_joint()) == doctest::Approx(3.0 / 13.0).epsilon(1e-15));
  CHECK(map_error(testing::circulant_joint()) == doctest::Approx(0.64).epsilon(1e-15));
  // X a function of Y.
  CHECK(map_error(JointPmf::from_rows({{0.3, 0.0}, {0.0, 0.7}})) == 0.0);
  // Equiprobable and independent attains 1 - 1/M.
  std::vector<std::vector<double>> flat(5, std::vector<double>(3, 1.0 / 15.0));
  CHECK(map_error(JointPmf::from_rows(flat)) == doctest::Approx(0.8));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const JointPmf j = testing::random_joint(rng, 2 + t % 6, 1 + t % 4);
    const double e = map_error(j);
    CHECK(e >= 0.0);
    CHECK(e <= 1.0 - 1.0 / static_cast<double>(j.rows()) + 1e-12);
    CHECK(e == doctest::Approx(oracle::map_error(testing::to_rows(j))).epsilon(1e-12));
  }
}

TEST_CASE("log bases") {
  CHECK(to_base(std::log(2.0), LogBase::bits) == doctest::Approx(1.0));
  CHECK(from_base(1.0, LogBase::dits) == doctest::Approx(std::log(10.0)));
  CHECK(parse_log_base("bits") == LogBase::bits);
  CHECK(log_base_name(LogBase::nats) == "nats");
  CHECK_THROWS_AS(parse_log_base("furlongs"), ValidationError);
}

TEST_CASE("order tags") {
  CHECK(Order(1.0).tag() == Order::Tag::one);
  CHECK(Order(0.0).tag() == Order::Tag::zero);
  CHECK(Order::infinity().tag() == Order::Tag::plus_infinity);
  CHECK(Order::minus_infinity().tag() == Order::Tag::minus_infinity);
  CHECK(Order(0.5).tag() == Order::Tag::finite);
  CHECK_THROWS_AS(Order(std::nan("")), ValidationError);
}
