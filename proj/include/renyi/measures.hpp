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
#include <span>
#include <utility>
#include <vector>

#include "renyi/core.hpp"

namespace renyi {

/// Renyi entropy over the support (zero masses are ignored at every order,
/// including negative ones). Order 0: log |supp|; 1: Shannon;
/// +inf: -log p_max; -inf: -log p_min over the support.
double renyi_entropy(const Pmf& pmf, Order alpha, LogBase base = LogBase::nats);

/// Same, on raw masses assumed to sum to one. Result in nats.
double renyi_entropy_nats(std::span<const double> masses, Order alpha);

/// D_alpha(P || Q) for every real order, with the usual limits at
/// 0, 1 and +/-inf. Non-negative for alpha >= 0, non-positive for alpha < 0.
double renyi_divergence(const Pmf& p, const Pmf& q, Order alpha,
                        LogBase base = LogBase::nats);

/// d_alpha(p || q) = D_alpha([p, 1-p] || [q, 1-q]).
double binary_renyi_divergence(double p, double q, Order alpha,
                               LogBase base = LogBase::nats);

/// Arimoto's conditional Renyi entropy H_alpha(X | Y); rows of the joint
/// are x, columns are y. Zero-probability columns are skipped.
double arimoto_conditional_entropy(const JointPmf& joint, Order alpha,
                                   LogBase base = LogBase::nats);

/// Shannon H(X | Y).
double conditional_shannon_entropy(const JointPmf& joint,
                                   LogBase base = LogBase::nats);

/// X_alpha: the pmf proportional to P^alpha over the support.
Pmf scaled_pmf(const Pmf& pmf, double alpha);

/// Sub-probability mu <= P with total at least 1 - eps.
class SubProbability {
 public:
  SubProbability(const Pmf& reference, std::vector<double> masses, double eps);

  std::span<const double> masses() const { return masses_; }
  double total() const;
  double eps() const { return eps_; }

 private:
  std::vector<double> masses_;
  double eps_;
};

struct SmoothingSolution {
  enum class Regime { below_one, above_one, exact };
  Regime regime = Regime::exact;
  std::vector<double> mu;  // indexed like the input pmf
  std::size_t j_eps = 0;   // below_one: 1-based rank of the partial mass
  double partial_mass = 0.0;
  std::size_t k_beta = 0;  // above_one: number of capped masses
  double beta_level = 0.0;
};

/// Minimizer of sum mu^alpha over the eps-ball. For alpha < 1 the top
/// masses are kept and the tail cut; for alpha > 1 the top masses are
/// capped at a common level.
SmoothingSolution smoothing_solution(const Pmf& pmf, double eps, double alpha);

/// eps-smooth Renyi entropy, alpha in (0,1) or (1,inf), eps in [0,1).
double smooth_renyi_entropy(const Pmf& pmf, double eps, double alpha,
                            LogBase base = LogBase::nats);

/// Closed-form sandwich of the smooth entropy around
/// log(1/(1-eps))/(alpha-1).
std::pair<double, double> smooth_entropy_bounds(const Pmf& pmf, double eps,
                                                double alpha,
                                                LogBase base = LogBase::nats);

}  // namespace renyi
