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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "renyi/core.hpp"
#include "renyi/numerics.hpp"

namespace renyi {

/// MAP error probability 1 - sum_y max_x P(x, y).
double map_error(const JointPmf& joint);

struct LocusBounds {
  double lower;
  double upper;
};

/// Attainable range of E[g^rho(X|Y)] when the MAP error is eps and
/// |X| = M. Both ends are attained.
LocusBounds locus_bounds(double eps, std::size_t m, double rho);

/// Piecewise-linear lower envelope f_rho(u).
double locus_lower(double u, double rho);

/// Lower bound on the MAP error from the order-alpha Arimoto entropy,
/// alpha in (-inf, 0) u (0, 1). optimizer_beta holds the maximizing rho.
BoundReport error_lb_from_moments(const JointPmf& joint, double alpha,
                                  const SupremizeOptions& opts = {});

/// Reference lower bounds on the MAP error. Keys: "fano" (alpha > 0),
/// "holder" (alpha < 0) and "shannon" (always).
std::map<std::string, double> error_lb_baselines(const JointPmf& joint,
                                                 double alpha);

double fano_error_lb(const JointPmf& joint, double alpha);
double holder_error_lb(const JointPmf& joint, double alpha);
double shannon_error_lb(const JointPmf& joint);

/// u_i = sum_y P(x_{i+1}(y), y): the mass guessed at attempt i+1.
std::vector<double> rank_masses(const JointPmf& joint);

/// z_k = d^k/drho^k E[g^rho(X|Y)] at rho = 0, k = 0..M-1.
std::vector<double> moment_derivatives(const JointPmf& joint);
std::vector<double> moment_derivatives_from_rank_masses(
    std::span<const double> u);

/// Determinant of the log-Vandermonde system, closed form.
double log_vandermonde_constant(std::size_t m);

/// Recovers the MAP error from z_0..z_{M-1}. Cramer's rule for M <= 4,
/// partial-pivot elimination up to M = 12, DomainError beyond.
double recover_map_error(std::span<const double> z);

}  // namespace renyi
