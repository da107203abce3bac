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

#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "renyi/core.hpp"
#include "renyi/oracles.hpp"

namespace renyi::testing {

/// Random pmf with skew drawn per call; zero_chance puts holes in the
/// support (never all of it).
inline Pmf random_pmf(std::mt19937_64& rng, std::size_t m_min, std::size_t m_max,
                      double zero_chance = 0.0) {
  std::uniform_int_distribution<std::size_t> size(m_min, m_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> power(0.2, 8.0);
  const std::size_t m = size(rng);
  const double k = power(rng);
  std::vector<double> w(m);
  for (auto& v : w) v = std::pow(unit(rng), k) + 1e-300;
  for (std::size_t i = 1; i < m; ++i) {
    if (unit(rng) < zero_chance) w[i] = 0.0;
  }
  return Pmf::from_weights(w);
}

inline JointPmf random_joint(std::mt19937_64& rng, std::size_t m, std::size_t cols) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> power(0.3, 5.0);
  const double k = power(rng);
  std::vector<double> w(m * cols);
  double total = 0.0;
  for (auto& v : w) {
    v = std::pow(unit(rng), k) + 1e-12;
    total += v;
  }
  for (auto& v : w) v /= total;
  return JointPmf(m, cols, w);
}

inline oracle::Matrix to_rows(const JointPmf& j) {
  oracle::Matrix r(j.rows(), std::vector<double>(j.cols()));
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) r[x][y] = j(x, y);
  }
  return r;
}

inline JointPmf diagonal_joint() {
  std::vector<std::vector<double>> r(4, std::vector<double>(4, 1.0 / 52.0));
  for (int i = 0; i < 4; ++i) r[i][i] = 10.0 / 52.0;
  return JointPmf::from_rows(r);
}

inline JointPmf circulant_joint() {
  std::vector<std::vector<double>> r = {
      {9, 3, 4, 9}, {9, 9, 3, 4}, {4, 9, 9, 3}, {3, 4, 9, 9}};
  for (auto& x : r) {
    for (auto& v : x) v /= 100.0;
  }
  return JointPmf::from_rows(r);
}

inline std::vector<double> vec(const Pmf& p) {
  return {p.masses().begin(), p.masses().end()};
}

}  // namespace renyi::testing
