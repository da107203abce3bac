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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "renyi/core.hpp"

namespace renyi {

inline constexpr double kEulerGamma = 0.5772156649015329;

/// log(sum exp(x_i)). Returns -inf for an empty range or all -inf.
double log_sum_exp(std::span<const double> xs);
double log_add_exp(double a, double b);

/// log sum_{p > 0} p^e in nats. Zero masses are skipped for every e.
double log_power_sum(std::span<const double> masses, double exponent);

/// Riemann zeta for real s > 1 (Euler-Maclaurin).
double riemann_zeta(double s);

/// Closed-form envelope u_M(beta) of sum_{i=1}^M i^(-beta):
/// an upper bound for beta > 0, a lower bound for beta < 0.
double harmonic_envelope_u(double beta, std::size_t m);
/// log u_M(beta), finite where u_M itself would overflow.
double log_harmonic_envelope_u(double beta, std::size_t m);

/// log sum_{i=1}^M i^(-beta), exact summation up to 1e5 terms,
/// Euler-Maclaurin tail beyond.
double log_power_partial_sum(double beta, std::size_t m);

struct Interval {
  double lo;
  double hi;
  bool punctured_at_zero = false;
};

struct SupremizeOptions {
  int grid_points = 400;  // per one-signed sub-interval
  double refine_tol = 1e-9;
  double min_magnitude = 1e-6;
  double max_magnitude = 1e4;
  std::vector<double> anchors;  // extra abscissae evaluated verbatim
};

/// Grid density from RENYI_GRID_POINTS if set and valid, else 400.
int default_grid_points();
SupremizeOptions options_from_environment();

/// Log-spaced grid over each one-signed part of the interval, then golden
/// section inside the bracket around the best grid point. Ties go to the
/// smallest abscissa. The reported value is f at the reported abscissa.
BoundReport supremize(const std::function<double(double)>& f,
                      const Interval& interval,
                      const SupremizeOptions& options = {});

BoundReport infimize(const std::function<double(double)>& f,
                     const Interval& interval,
                     const SupremizeOptions& options = {});

/// Maximizer of f on [a, b] assuming unimodality.
double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double tol);

/// Root of a monotone g on [a, b] with a sign change.
double bisect_root(const std::function<double(double)>& g, double a, double b,
                   double tol = 1e-13);

}  // namespace renyi
