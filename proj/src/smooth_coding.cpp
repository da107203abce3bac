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

#include "renyi/smooth_coding.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "renyi/coding.hpp"
#include "renyi/measures.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_args(double eps, double rho, const char* op) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw DomainError(std::string(op) + ": eps must lie in [0, 1)");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError(std::string(op) + ": rho must be positive");
  }
}

// Smooth entropy of order alpha in (0, 1) from the tail-cut minimizer,
// which does not depend on alpha.
class SmoothEntropyBelowOne {
 public:
  SmoothEntropyBelowOne(const Pmf& pmf, double eps) : pmf_(pmf), eps_(eps) {
    if (eps > 0.0) mu_ = smoothing_solution(pmf, eps, 0.5).mu;
  }

  double operator()(double alpha) const {
    if (eps_ == 0.0) return renyi_entropy_nats(pmf_.masses(), alpha);
    return log_power_sum(mu_, alpha) / (1.0 - alpha);
  }

 private:
  const Pmf& pmf_;
  double eps_;
  std::vector<double> mu_;
};

BoundReport in_base(BoundReport r, LogBase base) {
  r.value = to_base(r.value, base);
  return r;
}

}  // namespace

BoundReport avg_error_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                  LogBase base, const SupremizeOptions& opts) {
  check_args(eps, rho, "avg_error_cumulant_lb");
  const Pmf support = pmf.support_restriction();
  const CodeLengthLaw law = code_length_law(support.size());
  const SmoothEntropyBelowOne h(support, eps);
  auto objective = [&](double beta) {
    return (h(beta / (beta + rho)) - log_codeword_sum_t(beta, law)) / beta;
  };
  SupremizeOptions o = opts;
  o.anchors.push_back(1.0);
  return in_base(supremize(objective, Interval{0.0, kInf, true}, o), base);
}

BoundReport max_error_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                  LogBase base, const SupremizeOptions& opts) {
  check_args(eps, rho, "max_error_cumulant_lb");
  const Pmf support = pmf.support_restriction();
  const CodeLengthLaw law = code_length_law(support.size());
  auto objective = [&](double beta) {
    return (renyi_entropy_nats(support.masses(), beta / (beta + rho)) -
            log_codeword_sum_t(beta, law)) / beta;
  };
  SupremizeOptions o = opts;
  o.anchors.push_back(1.0);
  BoundReport r = supremize(objective, Interval{-rho, 0.0, true}, o);
  r.value += std::log1p(-eps) / rho;
  if (pmf.has_zero_mass()) {
    r.warning = "zero masses dropped; bound evaluated on the support";
  }
  return in_base(r, base);
}

BoundReport combined_cumulant_lb(const Pmf& pmf, double eps, double rho,
                                 LogBase base, const SupremizeOptions& opts) {
  const BoundReport a = avg_error_cumulant_lb(pmf, eps, rho, base, opts);
  const BoundReport m = max_error_cumulant_lb(pmf, eps, rho, base, opts);
  return m.value > a.value ? m : a;
}

SmoothReferenceBounds smooth_reference_bounds(const Pmf& pmf, double eps,
                                              double rho, LogBase base) {
  check_args(eps, rho, "smooth_reference_bounds");
  const Pmf support = pmf.support_restriction();
  const SmoothEntropyBelowOne h(support, eps);
  const double prefix = h(1.0 / (1.0 + rho));
  const double lt = log_codeword_sum_t(1.0, code_length_law(support.size()));
  return {to_base(prefix, base), to_base(prefix - lt, base)};
}

}  // namespace renyi
