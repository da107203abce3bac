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
#include <limits>
#include <random>

#include "../support/fixtures.hpp"
#include "renyi/coding.hpp"
#include "renyi/measures.hpp"
#include "renyi/oracles.hpp"

using namespace renyi;

namespace {
const Pmf kTernary({4.0 / 7, 2.0 / 7, 1.0 / 7});
}

TEST_CASE("codeword lengths") {
  CHECK(codeword_lengths(8) == std::vector<unsigned>{0, 1, 1, 2, 2, 2, 2, 3});
  const CodeLengthLaw law = code_length_law(6);
  CHECK(law.m == 2.0);
  CHECK(law.delta == doctest::Approx(std::log2(7.0) - 2.0));
  const CodeLengthLaw prod = product_code_length_law(3, 4);
  CHECK(prod.m == 6.0);
  CHECK(prod.m + prod.delta == doctest::Approx(std::log2(82.0)));
}

TEST_CASE("codeword sum t") {
  CHECK(codeword_sum_t(1.0, 3) == doctest::Approx(2.0));
  CHECK(codeword_sum_t(1.0, 7) == doctest::Approx(3.0));
  CHECK(codeword_sum_t(1.0, 4) == doctest::Approx(2.25));
  CHECK(codeword_sum_t(0.0, 9) == doctest::Approx(9.0));
  CHECK(codeword_sum_t(0.37, 100) == doctest::Approx(oracle::codeword_sum(0.37, 100)).epsilon(1e-12));
  CHECK(codeword_sum_t(-2.0, 50) == doctest::Approx(oracle::codeword_sum(-2.0, 50)).epsilon(1e-12));
  CHECK(codeword_sum_t(3.0, 1000) == doctest::Approx(oracle::codeword_sum(3.0, 1000)).epsilon(1e-12));
  for (std::uint64_t m : {5u, 64u, 1000u}) {
    const double at = codeword_sum_t(1.0, m);
    CHECK(codeword_sum_t(1.0 - 1e-7, m) == doctest::Approx(at).epsilon(1e-6));
    CHECK(codeword_sum_t(1.0 + 1e-7, m) == doctest::Approx(at).epsilon(1e-6));
  }
}

TEST_CASE("exact cumulant") {
  CHECK(exact_cumulant(Pmf::equiprobable(3), 1.0) == doctest::Approx(std::log(5.0 / 3.0)));
  CHECK(exact_cumulant(Pmf::deterministic(4, 0), 2.0) == doctest::Approx(0.0));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Pmf p = testing::random_pmf(rng, 1, 70, 0.1);
    for (double rho : {-0.7, 0.4, 3.0}) {
      CHECK(exact_cumulant(p, rho) == doctest::Approx(oracle::cumulant(testing::vec(p), rho)).epsilon(1e-12));
    }
  }
}

TEST_CASE("type classes cover the product space") {
  const auto cls = type_classes(kTernary, 5);
  double total = 0.0;
  double members = 0.0;
  for (const TypeClass& c : cls) {
    total += c.size * std::exp(c.log_prob);
    members += c.size;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(members == doctest::Approx(243.0));
  for (std::size_t i = 1; i < cls.size(); ++i) CHECK(cls[i - 1].log_prob >= cls[i].log_prob);
}

TEST_CASE("product cumulant against brute force") {
  const auto v = testing::vec(kTernary);
  for (std::size_t n : {1u, 4u, 7u}) {
    for (double rho : {0.25, 1.0, 4.0}) {
      CHECK(exact_product_cumulant(kTernary, n, rho) ==
            doctest::Approx(oracle::product_cumulant(v, n, rho)).epsilon(1e-11));
    }
  }
}

TEST_CASE("cumulant bracket, single letter") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const Pmf p = testing::random_pmf(rng, 2, 60);
    for (double rho : {0.3, 1.0, 5.0}) {
      const CumulantBounds b = cumulant_bounds(p, rho, LogBase::bits);
      const double e = exact_cumulant(p, rho, LogBase::bits) / rho;
      CHECK(b.lower.value <= e + 1e-9);
      CHECK(e <= *b.upper + 1e-9);
      const auto [lo, hi] = reference_cumulant_bounds(p, rho, LogBase::bits);
      CHECK(lo <= e + 1e-9);
      CHECK(e <= hi + 1e-9);
      CHECK(lo <= b.lower.value + 1e-9);
    }
    const CumulantBounds neg = cumulant_bounds(p, -0.5, LogBase::bits);
    CHECK_FALSE(neg.upper.has_value());
  }
}

TEST_CASE("cumulant bracket, ternary blocks") {
  for (double rho : {0.25, 1.0, 4.0}) {
    const CumulantBounds b = product_cumulant_bounds(kTernary, 10, rho, LogBase::bits);
    const double e = exact_product_cumulant(kTernary, 10, rho, LogBase::bits);
    CHECK(b.lower.value <= e + 1e-9);
    CHECK(e <= *b.upper + 1e-9);
  }
  const double h = renyi_entropy(kTernary, 0.5, LogBase::bits);
  CHECK(h == doctest::Approx(1.4770).epsilon(1e-4));
  const CumulantBounds big = product_cumulant_bounds(kTernary, 10000, 1.0, LogBase::bits);
  CHECK(std::abs(big.lower.value - h) < 0.02);
  CHECK(std::abs(*big.upper - h) < 0.02);
}

TEST_CASE("tail bound") {
  const Pmf p = Pmf::geometric(0.8, 40);
  for (double r : {0.5, 2.0, 4.0}) {
    const double exact = exact_tail_probability(p, r, LogBase::bits);
    CHECK(exact == doctest::Approx(oracle::tail_probability(testing::vec(p), r)).epsilon(1e-12));
    const BoundReport b = tail_lb(p, r, LogBase::bits);
    CHECK(b.value <= -std::log2(exact) + 1e-9);
  }
  CHECK(tail_lb(Pmf::deterministic(3, 0), 1.0, LogBase::bits).value == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(tail_lb(p, 6.0, LogBase::bits), DomainError);
}

TEST_CASE("reliability bounds") {
  const double h = renyi_entropy(kTernary, Order::one(), LogBase::bits);
  const double top = std::log2(3.0);
  const auto v = testing::vec(kTernary);
  for (int i = 1; i <= 5; ++i) {
    const double r = h + (top - h) * i / 6.0;
    const ReliabilityReport rep = reliability_lb(kTernary, 10, r, LogBase::bits);
    CHECK(rep.baseline.value == doctest::Approx(rep.scaled_divergence).epsilon(1e-8));
    CHECK(rep.improved.value >= rep.baseline.value - 1e-12);
    const double exact = exact_product_reliability(kTernary, 10, r, LogBase::bits);
    const double naive = oracle::product_reliability(v, 10, r);
    if (std::isinf(naive)) {
      CHECK(exact == naive);
    } else {
      CHECK(exact == doctest::Approx(naive).epsilon(1e-9));
    }
    CHECK(rep.improved.value <= exact + 1e-9);
  }
  const ReliabilityReport det = reliability_lb(Pmf::deterministic(3, 1), 10, 1.0, LogBase::bits);
  CHECK(det.improved.value == std::numeric_limits<double>::infinity());
}

TEST_CASE("optimal lengths are stochastically smallest among hand-built codes") {
  const Pmf p({0.3, 0.2, 0.15, 0.12, 0.1, 0.08, 0.05});
  const Ranking r = ranking(p);
  const auto best = codeword_lengths(p.size());
  std::vector<unsigned> optimal(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) optimal[x] = best[r.guess_of[x] - 1];

  // Each competitor is a valid one-to-one code: at most 2^j words of length j.
  std::vector<std::vector<unsigned>> codes;
  codes.push_back(std::vector<unsigned>(p.size(), 3));       // fixed length
  codes.push_back({2, 2, 2, 3, 3, 3, 3});                     // prefix-style
  codes.push_back({1, 1, 2, 2, 2, 2, 0});                     // optimal set, wrong order
  codes.push_back({0, 1, 2, 3, 4, 5, 6});                     // one word per length
  for (const auto& code : codes) {
    std::vector<unsigned> per_length(8, 0);
    for (unsigned l : code) ++per_length[l];
    for (unsigned j = 0; j < 8; ++j) REQUIRE(per_length[j] <= (1u << j));
    for (unsigned k = 0; k < 8; ++k) {
      double opt_tail = 0.0;
      double tail = 0.0;
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (optimal[x] > k) opt_tail += p[x];
        if (code[x] > k) tail += p[x];
      }
      CHECK(opt_tail <= tail + 1e-15);
    }
  }
  CHECK(exact_tail_probability(p, 1.0, LogBase::bits) == doctest::Approx(0.12 + 0.1 + 0.08 + 0.05));
}
