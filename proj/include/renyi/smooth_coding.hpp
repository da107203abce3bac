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

#include "renyi/core.hpp"
#include "renyi/numerics.hpp"

namespace renyi {

// Lower bounds on (1/rho) log E[2^{rho l(f(X))}] for variable-length codes
// that may decode wrongly with probability at most eps. rho > 0.

/// Average error at most eps: sup over beta > 0 of
/// (1/beta) [H^(eps)_{beta/(beta+rho)}(X) - log t(beta, M)].
BoundReport avg_error_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                  LogBase base = LogBase::nats,
                                  const SupremizeOptions& opts = {});

/// Maximal error at most eps: sup over beta in (-rho, 0) of
/// (1/beta) [H_{beta/(beta+rho)}(X) - log t(beta, M)] - (1/rho) log 1/(1-eps).
/// Zero masses are dropped (with a warning); the bound is then taken on
/// the support.
BoundReport max_error_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                  LogBase base = LogBase::nats,
                                  const SupremizeOptions& opts = {});

/// Larger of the two; valid under the maximal-error constraint.
BoundReport combined_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                 LogBase base = LogBase::nats,
                                 const SupremizeOptions& opts = {});

struct SmoothReferenceBounds {
  double prefix;     // H^(eps)_{1/(1+rho)}: prefix codes
  double nonprefix;  // H^(eps)_{1/(1+rho)} - log t(1, M)
};

SmoothReferenceBounds smooth_reference_bounds(const Pmf& pmf, double eps,
                                              double rho,
                                              LogBase base = LogBase::nats);

}  // namespace renyi
