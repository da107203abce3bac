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

#include <span>
#include <vector>

#include "renyi/core.hpp"
#include "renyi/numerics.hpp"

namespace renyi {

/// A moment E[g^rho] kept as its natural log so that large moments
/// do not overflow.
struct MomentValue {
  double log_moment = 0.0;
  double rho = 0.0;

  double raw() const;
  /// (1/rho) log E[g^rho] in the given base; needs rho != 0.
  double scaled(LogBase base = LogBase::nats) const;
};

/// E[g^rho(X)] for the optimal ranking.
double exact_moment(const Pmf& pmf, double rho);
MomentValue exact_moment_value(const Pmf& pmf, double rho);

/// E[g^rho(X)] for an arbitrary positive function g.
MomentValue general_moment(const Pmf& pmf, std::span<const double> g_values,
                           double rho);

/// Q_tau(x) proportional to g(x)^(-tau).
Pmf tilted_pmf(std::span<const double> g_values, double tau);

enum class Side { lower, upper };

/// Variational sandwich of (1/rho) log E[g^rho] for arbitrary positive g.
/// The upper side is an infimum and may be +inf.
BoundReport key_bound(const Pmf& pmf, std::span<const double> g_values,
                      double rho, Side side, LogBase base = LogBase::nats,
                      const SupremizeOptions& opts = {});

/// H_{1/(1+rho)}(X) - log(1 + ln M).
double lb_arikan(const Pmf& pmf, double rho, LogBase base = LogBase::nats);

/// Supremum over beta in (-rho, 0) u (0, inf) of
/// (1/beta) [H_{beta/(beta+rho)}(X) - log u_M(beta)].
BoundReport lb_guessing(const Pmf& pmf, double rho,
                        LogBase base = LogBase::nats,
                        const SupremizeOptions& opts = {});

/// Same objective with the exact finite sum in place of u_M when
/// M <= 1e5 (falls back to u_M beyond).
BoundReport lb_guessing_finite_sum(const Pmf& pmf, double rho,
                                   LogBase base = LogBase::nats,
                                   const SupremizeOptions& opts = {});

/// exp(rho H_{1/(1+rho)}(X)).
MomentValue ub_arikan(const Pmf& pmf, double rho);
/// (exp(rho H_{1/(1+rho)}) - 1)/(1+rho) + exp((rho-1)^+ H_{1/rho}).
MomentValue ub_two_term(const Pmf& pmf, double rho);
/// Refinement for rho in [0, 2].
MomentValue ub_small_rho(const Pmf& pmf, double rho);
/// Refinement for rho >= 2 with the c_j(rho) weights.
MomentValue ub_large_rho(const Pmf& pmf, double rho);
/// Smallest of the applicable upper bounds.
MomentValue ub_best(const Pmf& pmf, double rho);

/// Weights c_j(rho), j = 0..floor(rho), for rho >= 2.
std::vector<double> large_rho_weights(double rho);

// With side information: rows of the joint are x, columns are y.

/// E[g^rho(X|Y)] with the optimal ranking for every y.
double exact_conditional_moment(const JointPmf& joint, double rho);
MomentValue exact_conditional_moment_value(const JointPmf& joint, double rho);

double lb_arikan_conditional(const JointPmf& joint, double rho,
                             LogBase base = LogBase::nats);
BoundReport lb_guessing_conditional(const JointPmf& joint, double rho,
                                    LogBase base = LogBase::nats,
                                    const SupremizeOptions& opts = {});
MomentValue ub_two_term_conditional(const JointPmf& joint, double rho);
/// Tightest of the general bound and the branch for rho's range.
MomentValue ub_conditional(const JointPmf& joint, double rho);

}  // namespace renyi
