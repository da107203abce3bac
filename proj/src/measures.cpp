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

#include "renyi/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "renyi/numerics.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log sum_i w_i exp(s v_i) for weights summing to one. Uses log1p/expm1
// when the exponents are small so that the alpha -> 1 limits stay exact.
double log_mean_exp(std::span<const double> w, std::span<const double> v,
                    double s) {
  double spread = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0 && std::isfinite(v[i])) {
      spread = std::max(spread, std::abs(s * v[i]));
    }
  }
  if (spread < 1.0) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > 0.0) acc += w[i] * std::expm1(s * v[i]);
    }
    return std::log1p(acc);
  }
  std::vector<double> terms;
  terms.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) terms.push_back(std::log(w[i]) + s * v[i]);
  }
  return log_sum_exp(terms);
}

double divergence_nats(std::span<const double> p, std::span<const double> q,
                       Order order) {
  const double a = order.value();
  const std::size_t n = p.size();
  switch (order.tag()) {
    case Order::Tag::zero: {
      double mass = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] > 0.0) mass += q[i];
      }
      return mass > 0.0 ? -std::log(std::min(mass, 1.0)) : kInf;
    }
    case Order::Tag::one: {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) return kInf;
        d += p[i] * std::log(p[i] / q[i]);
      }
      return std::max(d, 0.0);
    }
    case Order::Tag::plus_infinity: {
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) return kInf;
        r = std::max(r, p[i] / q[i]);
      }
      return std::log(r);
    }
    case Order::Tag::minus_infinity: {
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (q[i] <= 0.0) continue;
        if (p[i] <= 0.0) return -kInf;
        r = std::max(r, q[i] / p[i]);
      }
      return -std::log(r);
    }
    case Order::Tag::finite:
      break;
  }

  if (a > 0.0 && std::abs(1.0 - a) < 0.5) {
    std::vector<double> w;
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] <= 0.0) continue;
      if (q[i] <= 0.0 && a > 1.0) return kInf;
      w.push_back(p[i]);
      v.push_back(q[i] > 0.0 ? std::log(q[i] / p[i]) : -kInf);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      acc += w[i] * std::expm1((1.0 - a) * v[i]);
    }
    if (acc <= -1.0) return kInf;
    return std::max(std::log1p(acc) / (a - 1.0), 0.0);
  }

  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const bool pz = p[i] <= 0.0;
    const bool qz = q[i] <= 0.0;
    if (pz && qz) continue;
    if (pz) {
      if (a > 0.0) continue;
      return -kInf;  // alpha < 0: p^alpha blows up, the sum is +inf
    }
    if (qz) {
      if (a < 1.0) continue;
      return kInf;
    }
    terms.push_back(a * std::log(p[i]) + (1.0 - a) * std::log(q[i]));
  }
  const double l = log_sum_exp(terms);
  if (l == -kInf) return kInf;
  const double d = l / (a - 1.0);
  return a < 0.0 ? std::min(d, 0.0) : std::max(d, 0.0);
}

double checked_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1]");
  }
  return x;
}

}  // namespace

double renyi_entropy_nats(std::span<const double> masses, Order alpha) {
  switch (alpha.tag()) {
    case Order::Tag::zero: {
      const auto n = std::count_if(masses.begin(), masses.end(),
                                   [](double m) { return m > 0.0; });
      return std::log(static_cast<double>(n));
    }
    case Order::Tag::one: {
      double h = 0.0;
      for (double p : masses) {
        if (p > 0.0) h -= p * std::log(p);
      }
      return h;
    }
    case Order::Tag::plus_infinity:
      return -std::log(*std::max_element(masses.begin(), masses.end()));
    case Order::Tag::minus_infinity: {
      double lo = kInf;
      for (double p : masses) {
        if (p > 0.0) lo = std::min(lo, p);
      }
      return -std::log(lo);
    }
    case Order::Tag::finite:
      break;
  }
  const double a = alpha.value();
  const double t = a - 1.0;
  if (std::abs(t) < 0.5) {
    std::vector<double> logs(masses.size());
    for (std::size_t i = 0; i < masses.size(); ++i) {
      logs[i] = masses[i] > 0.0 ? std::log(masses[i]) : 0.0;
    }
    return -log_mean_exp(masses, logs, t) / t;
  }
  return log_power_sum(masses, a) / (1.0 - a);
}

double renyi_entropy(const Pmf& pmf, Order alpha, LogBase base) {
  return to_base(renyi_entropy_nats(pmf.masses(), alpha), base);
}

double renyi_divergence(const Pmf& p, const Pmf& q, Order alpha,
                        LogBase base) {
  if (p.size() != q.size()) {
    throw ValidationError("renyi_divergence: alphabet sizes differ");
  }
  return to_base(divergence_nats(p.masses(), q.masses(), alpha), base);
}

double binary_renyi_divergence(double p, double q, Order alpha, LogBase base) {
  checked_unit(p, "binary_renyi_divergence: p");
  checked_unit(q, "binary_renyi_divergence: q");
  const double pp[2] = {p, 1.0 - p};
  const double qq[2] = {q, 1.0 - q};
  return to_base(divergence_nats(pp, qq, alpha), base);
}

double conditional_shannon_entropy(const JointPmf& joint, LogBase base) {
  return arimoto_conditional_entropy(joint, Order::one(), base);
}

double arimoto_conditional_entropy(const JointPmf& joint, Order alpha,
                                   LogBase base) {
  const std::vector<double> py = joint.marginal_y();
  std::vector<double> w;
  std::vector<Pmf> slices;
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    if (py[y] <= 0.0) continue;
    w.push_back(py[y]);
    slices.push_back(joint.conditional(y));
  }

  double h = 0.0;
  switch (alpha.tag()) {
    case Order::Tag::zero: {
      std::size_t widest = 0;
      for (const Pmf& s : slices) widest = std::max(widest, s.support_size());
      h = std::log(static_cast<double>(widest));
      break;
    }
    case Order::Tag::one:
      for (std::size_t i = 0; i < w.size(); ++i) {
        h += w[i] * renyi_entropy_nats(slices[i].masses(), Order::one());
      }
      break;
    case Order::Tag::plus_infinity: {
      double guess = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) guess += w[i] * slices[i].p_max();
      h = -std::log(guess);
      break;
    }
    case Order::Tag::minus_infinity: {
      double s = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * slices[i].p_min_positive();
      }
      h = -std::log(s);
      break;
    }
    case Order::Tag::finite: {
      const double a = alpha.value();
      std::vector<double> hy(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        hy[i] = renyi_entropy_nats(slices[i].masses(), alpha);
      }
      const double s = (1.0 - a) / a;
      h = log_mean_exp(w, hy, s) / s;
      break;
    }
  }
  return to_base(h, base);
}

Pmf scaled_pmf(const Pmf& pmf, double alpha) {
  std::vector<double> logs(pmf.size(), -kInf);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] > 0.0) logs[i] = alpha * std::log(pmf[i]);
  }
  const double z = log_sum_exp(logs);
  std::vector<double> w(pmf.size(), 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] > 0.0) w[i] = std::exp(logs[i] - z);
  }
  return Pmf::from_weights(std::move(w));
}

SubProbability::SubProbability(const Pmf& reference, std::vector<double> masses,
                               double eps)
    : masses_(std::move(masses)), eps_(eps) {
  if (masses_.size() != reference.size()) {
    throw ValidationError("sub-probability: size mismatch");
  }
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("eps must lie in [0, 1)");
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!(masses_[i] >= 0.0) || masses_[i] > reference[i] * (1.0 + 1e-12)) {
      throw ValidationError("sub-probability: mass outside [0, P(x)]");
    }
  }
  if (total() < 1.0 - eps - 1e-12) {
    throw ValidationError("sub-probability: total below 1 - eps");
  }
}

double SubProbability::total() const {
  return std::accumulate(masses_.begin(), masses_.end(), 0.0);
}

SmoothingSolution smoothing_solution(const Pmf& pmf, double eps,
                                     double alpha) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("eps must lie in [0, 1)");
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw DomainError("smoothing: alpha must lie in (0,1) or (1,inf)");
  }
  SmoothingSolution sol;
  sol.mu.assign(pmf.masses().begin(), pmf.masses().end());
  if (eps == 0.0) return sol;

  const Ranking r = ranking(pmf);
  const std::size_t m = pmf.size();
  std::vector<double> p(m);
  for (std::size_t k = 0; k < m; ++k) p[k] = pmf[r.order[k]];
  const double keep = 1.0 - eps;

  if (alpha < 1.0) {
    sol.regime = SmoothingSolution::Regime::below_one;
    double before = 0.0;
    std::size_t j = 0;
    for (; j < m; ++j) {
      if (before + p[j] >= keep - 1e-12) break;
      before += p[j];
    }
    j = std::min(j, m - 1);
    sol.j_eps = j + 1;
    sol.partial_mass = std::clamp(keep - before, 0.0, p[j]);
    for (std::size_t k = 0; k < m; ++k) {
      const double v = k < j ? p[k] : (k == j ? sol.partial_mass : 0.0);
      sol.mu[r.order[k]] = v;
    }
    return sol;
  }

  sol.regime = SmoothingSolution::Regime::above_one;
  std::vector<double> tail(m + 1, 0.0);
  for (std::size_t k = m; k-- > 0;) tail[k] = tail[k + 1] + p[k];
  std::size_t best_k = 0;
  double best_level = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    const double level = (keep - tail[k]) / static_cast<double>(k);
    if (!(level > 0.0)) continue;
    const bool below_top = level <= p[k - 1] * (1.0 + 1e-14);
    const bool above_next = k == m || level >= p[k] * (1.0 - 1e-14);
    if (below_top && above_next) {
      best_k = k;
      best_level = level;
    }
  }
  if (best_k == 0) throw DomainError("smoothing: no capping level found");
  sol.k_beta = best_k;
  sol.beta_level = best_level;
  for (std::size_t k = 0; k < m; ++k) {
    sol.mu[r.order[k]] = k < best_k ? best_level : p[k];
  }
  return sol;
}

double smooth_renyi_entropy(const Pmf& pmf, double eps, double alpha,
                            LogBase base) {
  const SmoothingSolution sol = smoothing_solution(pmf, eps, alpha);
  if (sol.regime == SmoothingSolution::Regime::exact) {
    return renyi_entropy(pmf, alpha, base);
  }
  return to_base(log_power_sum(sol.mu, alpha) / (1.0 - alpha), base);
}

std::pair<double, double> smooth_entropy_bounds(const Pmf& pmf, double eps,
                                                double alpha, LogBase base) {
  const SmoothingSolution sol = smoothing_solution(pmf, eps, alpha);
  const double lower = std::log(1.0 / (1.0 - eps)) / (alpha - 1.0);
  double gap = 0.0;
  if (alpha < 1.0) {
    const double last = sol.regime == SmoothingSolution::Regime::exact
                            ? pmf.p_min_positive()
                            : sol.partial_mass;
    gap = -std::log(last);
  } else {
    double floor = pmf.p_min_positive();
    if (sol.regime == SmoothingSolution::Regime::above_one) {
      floor = std::min(floor, sol.beta_level);
    }
    gap = -std::log(floor);
  }
  return {to_base(lower, base), to_base(lower + gap, base)};
}

}  // namespace renyi
