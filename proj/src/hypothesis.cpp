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

#include "renyi/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/measures.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxRecoverySize = 12;

// (1/(M-1)) sum_{j=2}^M (j^rho - 1).
double mean_excess_power(std::size_t m, double rho) {
  double s = 0.0;
  for (std::size_t j = 2; j <= m; ++j) {
    s += std::expm1(rho * std::log(static_cast<double>(j)));
  }
  return s / static_cast<double>(m - 1);
}

double determinant(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

// Row k, column i holds ln^k(i+1); row 0 is all ones.
std::vector<double> log_vandermonde(std::size_t m) {
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const double l = std::log(static_cast<double>(i + 1));
    double v = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      a[k * m + i] = v;
      v *= l;
    }
  }
  return a;
}

}  // namespace

double map_error(const JointPmf& joint) {
  double hit = 0.0;
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < joint.rows(); ++x) best = std::max(best, joint(x, y));
    hit += best;
  }
  return std::max(0.0, 1.0 - hit);
}

double locus_lower(double u, double rho) {
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("locus_lower: u must lie in [0,1)");
  const double keep = 1.0 - u;
  const auto k = static_cast<std::size_t>(std::floor(1.0 / keep + 1e-12));
  double s = 0.0;
  for (std::size_t j = 1; j <= k; ++j) s += std::pow(static_cast<double>(j), rho);
  const double rest = std::max(0.0, 1.0 - keep * static_cast<double>(k));
  return keep * s + rest * std::pow(static_cast<double>(k + 1), rho);
}

LocusBounds locus_bounds(double eps, std::size_t m, double rho) {
  if (m < 2) throw DomainError("locus_bounds: need M >= 2");
  if (!(rho > 0.0)) throw DomainError("locus_bounds: rho must be positive");
  const double top = 1.0 - 1.0 / static_cast<double>(m);
  if (!(eps >= 0.0 && eps <= top + 1e-15)) {
    throw DomainError("locus_bounds: eps must lie in [0, 1 - 1/M]");
  }
  eps = std::min(eps, top);
  return {locus_lower(eps, rho), 1.0 + mean_excess_power(m, rho) * eps};
}

BoundReport error_lb_from_moments(const JointPmf& joint, double alpha,
                                  const SupremizeOptions& opts) {
  if (!(alpha < 1.0) || alpha == 0.0 || !std::isfinite(alpha)) {
    throw DomainError("error_lb_from_moments: alpha must lie in (-inf,0) or (0,1)");
  }
  const std::size_t m = joint.rows();
  if (m < 2) throw DomainError("error_lb_from_moments: need M >= 2");
  std::size_t widest = 0;
  std::size_t narrowest = m;
  const std::vector<double> py = joint.marginal_y();
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    if (py[y] <= 0.0) continue;
    widest = std::max(widest, joint.slice_support(y));
    narrowest = std::min(narrowest, joint.slice_support(y));
  }
  const double h = arimoto_conditional_entropy(joint, alpha);
  const double scale = 1.0 / alpha - 1.0;
  auto objective = [&](double rho) {
    const double beta = alpha * rho / (1.0 - alpha);
    const std::size_t mm = beta > 0.0 ? widest : narrowest;
    const double a = scale * (h - log_harmonic_envelope_u(beta, mm));
    const double den = mean_excess_power(m, rho);
    if (a < 700.0 && std::isfinite(den)) return std::expm1(a) / den;
    // Both sides huge: compare in the log domain.
    std::vector<double> logs;
    for (std::size_t j = 2; j <= m; ++j) logs.push_back(rho * std::log(double(j)));
    const double log_mean = log_sum_exp(logs) - std::log(double(m - 1));
    return std::exp(a + std::log1p(-std::exp(-a)) - log_mean -
                    std::log1p(-std::exp(-log_mean)));
  };
  return supremize(objective, Interval{0.0, kInf, true}, opts);
}

double fano_error_lb(const JointPmf& joint, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("fano_error_lb: alpha must be positive");
  const std::size_t m = joint.rows();
  if (m < 2) throw DomainError("fano_error_lb: need M >= 2");
  const double q = 1.0 - 1.0 / static_cast<double>(m);
  const double target =
      std::log(static_cast<double>(m)) - arimoto_conditional_entropy(joint, alpha);
  if (target <= 0.0) return q;
  auto gap = [&](double e) { return binary_renyi_divergence(e, q, alpha) - target; };
  if (gap(0.0) <= 0.0) return 0.0;
  return bisect_root(gap, 0.0, q, 1e-14);
}

double holder_error_lb(const JointPmf& joint, double alpha) {
  if (!(alpha < 0.0)) throw DomainError("holder_error_lb: alpha must be negative");
  const std::size_t m = joint.rows();
  if (m < 2) throw DomainError("holder_error_lb: need M >= 2");
  const double h = arimoto_conditional_entropy(joint, alpha);
  return std::exp((1.0 - alpha) / alpha *
                  (h - std::log(static_cast<double>(m - 1))));
}

double shannon_error_lb(const JointPmf& joint) {
  const double m = static_cast<double>(joint.rows());
  if (m < 2) throw DomainError("shannon_error_lb: need M >= 2");
  const double h = conditional_shannon_entropy(joint);
  if (h <= 0.0) return 0.0;
  return h / (6.0 * (std::log(m) + std::log(std::log(m)) - std::log(h)));
}

std::map<std::string, double> error_lb_baselines(const JointPmf& joint,
                                                 double alpha) {
  std::map<std::string, double> out;
  if (alpha > 0.0) out["fano"] = fano_error_lb(joint, alpha);
  if (alpha < 0.0) out["holder"] = holder_error_lb(joint, alpha);
  out["shannon"] = shannon_error_lb(joint);
  return out;
}

std::vector<double> rank_masses(const JointPmf& joint) {
  std::vector<double> u(joint.rows(), 0.0);
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    std::vector<double> col(joint.rows());
    for (std::size_t x = 0; x < joint.rows(); ++x) col[x] = joint(x, y);
    std::sort(col.begin(), col.end(), std::greater<>());
    for (std::size_t i = 0; i < col.size(); ++i) u[i] += col[i];
  }
  return u;
}

std::vector<double> moment_derivatives_from_rank_masses(
    std::span<const double> u) {
  const std::size_t m = u.size();
  std::vector<double> z(m, 0.0);
  for (double v : u) z[0] += v;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = 1; i < m; ++i) {
      z[k] += u[i] * std::pow(std::log(static_cast<double>(i + 1)),
                              static_cast<double>(k));
    }
  }
  return z;
}

std::vector<double> moment_derivatives(const JointPmf& joint) {
  const std::vector<double> u = rank_masses(joint);
  return moment_derivatives_from_rank_masses(u);
}

double log_vandermonde_constant(std::size_t m) {
  if (m < 2) throw DomainError("log_vandermonde_constant: need M >= 2");
  double c = 1.0;
  for (std::size_t k = 2; k <= m; ++k) c *= std::log(static_cast<double>(k));
  for (std::size_t i = 2; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      c *= std::log(static_cast<double>(j) / static_cast<double>(i));
    }
  }
  return c;
}

double recover_map_error(std::span<const double> z) {
  const std::size_t m = z.size();
  if (m < 2) throw DomainError("recover_map_error: need M >= 2");
  if (m > kMaxRecoverySize) {
    throw DomainError("recover_map_error: system ill-conditioned beyond M = 12");
  }
  std::vector<double> a = log_vandermonde(m);
  if (m <= 4) {
    for (std::size_t k = 0; k < m; ++k) a[k * m] = z[k];
    return 1.0 - determinant(a, m) / log_vandermonde_constant(m);
  }
  // Augmented elimination with partial pivoting, then back substitution.
  std::vector<double> b(z.begin(), z.end());
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::abs(a[r * m + c]) > std::abs(a[piv * m + c])) piv = r;
    }
    if (piv != c) {
      for (std::size_t k = 0; k < m; ++k) std::swap(a[c * m + k], a[piv * m + k]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < m; ++r) {
      const double f = a[r * m + c] / a[c * m + c];
      for (std::size_t k = c; k < m; ++k) a[r * m + k] -= f * a[c * m + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> u(m);
  for (std::size_t r = m; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < m; ++k) s -= a[r * m + k] * u[k];
    u[r] = s / a[r * m + r];
  }
  return 1.0 - u[0];
}

}  // namespace renyi
