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

#include "renyi/guessing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "renyi/measures.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive_rho(double rho, const char* op) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError(std::string(op) + ": rho must be positive");
  }
}

void require_nonzero_rho(double rho, const char* op) {
  if (rho == 0.0 || !std::isfinite(rho)) {
    throw DomainError(std::string(op) + ": rho must be a non-zero real");
  }
}

void require_nonnegative_rho(double rho, const char* op) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw DomainError(std::string(op) + ": rho must be non-negative");
  }
}

// log(e^l + c) for a real constant c with e^l + c > 0.
double log_plus_constant(double l, double c) {
  return l + std::log1p(c * std::exp(-l));
}

BoundReport to_base(BoundReport r, LogBase base) {
  r.value = renyi::to_base(r.value, base);
  return r;
}

// (e^{rho h1} - 1)/(1+rho) + e^{(rho-1)^+ hr}.
double log_two_term(double rho, double h1, double hr) {
  const double a = std::log(std::expm1(rho * h1)) - std::log1p(rho);
  return log_add_exp(a, std::max(rho - 1.0, 0.0) * hr);
}

double log_small_rho(double rho, double h1, double hr, double p_top) {
  const double lead = rho * h1 - std::log1p(rho);
  if (rho <= 1.0) {
    const double extra =
        (rho - (1.0 - rho) * (std::exp2(rho) - 1.0) * (1.0 - p_top)) / (1.0 + rho);
    return log_plus_constant(lead, std::max(extra, 0.0));
  }
  const double two = log_add_exp(lead, (rho - 1.0) * hr - std::log(rho));
  return log_plus_constant(two, (rho * rho - rho - 1.0) / (rho * (1.0 + rho)));
}

// 1 + sum_j c_j (e^{x_j} - 1) where x_j = (rho-j) H_{1/(1+rho-j)}.
double log_large_rho(double rho, const std::function<double(double)>& h) {
  const std::vector<double> c = large_rho_weights(rho);
  std::vector<double> terms;
  double constant = 1.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double shift = rho - static_cast<double>(j);
    terms.push_back(std::log(c[j]) + shift * h(1.0 / (1.0 + shift)));
    constant -= c[j];
  }
  return log_plus_constant(log_sum_exp(terms), constant);
}

BoundReport sup_over_beta(const std::function<double(double)>& objective,
                          double rho, const SupremizeOptions& opts) {
  SupremizeOptions o = opts;
  o.anchors.push_back(1.0);
  return supremize(objective, Interval{-rho, kInf, true}, o);
}

}  // namespace

double MomentValue::raw() const { return std::exp(log_moment); }

double MomentValue::scaled(LogBase base) const {
  if (rho == 0.0) throw DomainError("moment: scaled value needs rho != 0");
  return renyi::to_base(log_moment / rho, base);
}

MomentValue exact_moment_value(const Pmf& pmf, double rho) {
  if (!std::isfinite(rho)) throw DomainError("exact_moment: rho not finite");
  const Ranking r = ranking(pmf);
  std::vector<double> terms;
  for (std::size_t x = 0; x < pmf.size(); ++x) {
    if (pmf[x] <= 0.0) continue;
    terms.push_back(std::log(pmf[x]) +
                    rho * std::log(static_cast<double>(r.guess_of[x])));
  }
  return {log_sum_exp(terms), rho};
}

double exact_moment(const Pmf& pmf, double rho) {
  return exact_moment_value(pmf, rho).raw();
}

MomentValue general_moment(const Pmf& pmf, std::span<const double> g_values,
                           double rho) {
  if (g_values.size() != pmf.size()) {
    throw ValidationError("general_moment: g has the wrong size");
  }
  std::vector<double> terms;
  for (std::size_t x = 0; x < pmf.size(); ++x) {
    if (!(g_values[x] > 0.0) || !std::isfinite(g_values[x])) {
      throw ValidationError("general_moment: g must be positive");
    }
    if (pmf[x] > 0.0) {
      terms.push_back(std::log(pmf[x]) + rho * std::log(g_values[x]));
    }
  }
  return {log_sum_exp(terms), rho};
}

Pmf tilted_pmf(std::span<const double> g_values, double tau) {
  std::vector<double> logs;
  for (double g : g_values) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ValidationError("tilted_pmf: g must be positive");
    }
    logs.push_back(-tau * std::log(g));
  }
  const double z = log_sum_exp(logs);
  std::vector<double> w;
  for (double l : logs) w.push_back(std::exp(l - z));
  return Pmf::from_weights(std::move(w));
}

BoundReport key_bound(const Pmf& pmf, std::span<const double> g_values,
                      double rho, Side side, LogBase base,
                      const SupremizeOptions& opts) {
  if (rho == 0.0 || !std::isfinite(rho)) {
    throw DomainError("key_bound: rho must be a non-zero real");
  }
  if (g_values.size() != pmf.size()) {
    throw ValidationError("key_bound: g has the wrong size");
  }
  std::vector<double> p;
  std::vector<double> g;
  for (std::size_t x = 0; x < pmf.size(); ++x) {
    if (!(g_values[x] > 0.0) || !std::isfinite(g_values[x])) {
      throw ValidationError("key_bound: g must be positive");
    }
    if (pmf[x] > 0.0) {
      p.push_back(pmf[x]);
      g.push_back(g_values[x]);
    }
  }
  const Pmf support(p);
  auto objective = [&](double beta) {
    const double h = renyi_entropy_nats(support.masses(), beta / (beta + rho));
    return (h - log_power_sum(g, -beta)) / beta;
  };
  if (side == Side::lower) {
    return to_base(supremize(objective, Interval{-rho, kInf, true}, opts), base);
  }
  try {
    return to_base(infimize(objective, Interval{-kInf, -rho, true}, opts), base);
  } catch (const UndefinedBound&) {
    BoundReport r;
    r.value = kInf;
    r.warning = "upper objective non-finite on the whole interval";
    return r;
  }
}

double lb_arikan(const Pmf& pmf, double rho, LogBase base) {
  require_nonzero_rho(rho, "lb_arikan");
  if (!(rho > -1.0)) throw DomainError("lb_arikan: rho must exceed -1");
  const double m = static_cast<double>(pmf.size());
  const double h = renyi_entropy_nats(pmf.masses(), 1.0 / (1.0 + rho));
  return renyi::to_base(h - std::log(1.0 + std::log(m)), base);
}

BoundReport lb_guessing(const Pmf& pmf, double rho, LogBase base,
                        const SupremizeOptions& opts) {
  require_nonzero_rho(rho, "lb_guessing");
  const Pmf support = pmf.support_restriction();
  const std::size_t m = support.size();
  auto objective = [&](double beta) {
    const double h = renyi_entropy_nats(support.masses(), beta / (beta + rho));
    return (h - log_harmonic_envelope_u(beta, m)) / beta;
  };
  return to_base(sup_over_beta(objective, rho, opts), base);
}

BoundReport lb_guessing_finite_sum(const Pmf& pmf, double rho, LogBase base,
                                   const SupremizeOptions& opts) {
  require_nonzero_rho(rho, "lb_guessing_finite_sum");
  const Pmf support = pmf.support_restriction();
  const std::size_t m = support.size();
  const bool exact = m <= 100000;
  auto objective = [&](double beta) {
    const double h = renyi_entropy_nats(support.masses(), beta / (beta + rho));
    const double lu = exact ? log_power_partial_sum(beta, m)
                            : log_harmonic_envelope_u(beta, m);
    return (h - lu) / beta;
  };
  return to_base(sup_over_beta(objective, rho, opts), base);
}

MomentValue ub_arikan(const Pmf& pmf, double rho) {
  require_nonnegative_rho(rho, "ub_arikan");
  return {rho * renyi_entropy_nats(pmf.masses(), 1.0 / (1.0 + rho)), rho};
}

MomentValue ub_two_term(const Pmf& pmf, double rho) {
  require_nonnegative_rho(rho, "ub_two_term");
  const double h1 = renyi_entropy_nats(pmf.masses(), 1.0 / (1.0 + rho));
  const double hr =
      rho > 1.0 ? renyi_entropy_nats(pmf.masses(), 1.0 / rho) : 0.0;
  return {log_two_term(rho, h1, hr), rho};
}

MomentValue ub_small_rho(const Pmf& pmf, double rho) {
  if (!(rho >= 0.0 && rho <= 2.0)) {
    throw DomainError("ub_small_rho: rho must lie in [0, 2]");
  }
  const double h1 = renyi_entropy_nats(pmf.masses(), 1.0 / (1.0 + rho));
  const double hr = rho >= 1.0 ? renyi_entropy_nats(pmf.masses(), 1.0 / rho) : 0.0;
  return {log_small_rho(rho, h1, hr, pmf.p_max()), rho};
}

std::vector<double> large_rho_weights(double rho) {
  if (!(rho >= 2.0) || !std::isfinite(rho)) {
    throw DomainError("large_rho_weights: rho must be at least 2");
  }
  const auto top = static_cast<std::size_t>(std::floor(rho));
  std::vector<double> c(top + 1);
  c[0] = 1.0 / (1.0 + rho);
  c[1] = 0.5;
  for (std::size_t j = 2; j <= top; ++j) {
    double falling = 1.0;  // rho (rho-1) ... (rho-j+2)
    for (std::size_t i = 0; i + 2 <= j; ++i) falling *= rho - static_cast<double>(i);
    const double jj = static_cast<double>(j);
    if (j < top) {
      c[j] = falling / std::exp2(jj);
    } else {
      c[j] = falling / (std::exp2(jj - 1.0) * (rho - jj + 1.0));
    }
  }
  return c;
}

MomentValue ub_large_rho(const Pmf& pmf, double rho) {
  if (!(rho >= 2.0)) throw DomainError("ub_large_rho: rho must be at least 2");
  auto h = [&](double a) { return renyi_entropy_nats(pmf.masses(), a); };
  return {log_large_rho(rho, h), rho};
}

MomentValue ub_best(const Pmf& pmf, double rho) {
  MomentValue best = ub_two_term(pmf, rho);
  best.log_moment = std::min(best.log_moment, ub_arikan(pmf, rho).log_moment);
  if (rho <= 2.0) {
    best.log_moment = std::min(best.log_moment, ub_small_rho(pmf, rho).log_moment);
  }
  if (rho >= 2.0) {
    best.log_moment = std::min(best.log_moment, ub_large_rho(pmf, rho).log_moment);
  }
  return best;
}

MomentValue exact_conditional_moment_value(const JointPmf& joint, double rho) {
  if (!std::isfinite(rho)) throw DomainError("exact_conditional_moment: rho");
  std::vector<double> terms;
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    std::vector<double> col(joint.rows());
    double total = 0.0;
    for (std::size_t x = 0; x < joint.rows(); ++x) {
      col[x] = joint(x, y);
      total += col[x];
    }
    if (total <= 0.0) continue;
    const Ranking r = ranking(Pmf::from_weights(col));
    for (std::size_t x = 0; x < joint.rows(); ++x) {
      if (col[x] <= 0.0) continue;
      terms.push_back(std::log(col[x]) +
                      rho * std::log(static_cast<double>(r.guess_of[x])));
    }
  }
  return {log_sum_exp(terms), rho};
}

double exact_conditional_moment(const JointPmf& joint, double rho) {
  return exact_conditional_moment_value(joint, rho).raw();
}

double lb_arikan_conditional(const JointPmf& joint, double rho, LogBase base) {
  require_positive_rho(rho, "lb_arikan_conditional");
  const double m = static_cast<double>(joint.rows());
  const double h = arimoto_conditional_entropy(joint, 1.0 / (1.0 + rho));
  return renyi::to_base(h - std::log(1.0 + std::log(m)), base);
}

BoundReport lb_guessing_conditional(const JointPmf& joint, double rho,
                                    LogBase base, const SupremizeOptions& opts) {
  require_positive_rho(rho, "lb_guessing_conditional");
  // Per-slice supports: the widest one is valid for beta > 0, the
  // narrowest one for beta < 0.
  std::size_t widest = 0;
  std::size_t narrowest = joint.rows();
  const std::vector<double> py = joint.marginal_y();
  for (std::size_t y = 0; y < joint.cols(); ++y) {
    if (py[y] <= 0.0) continue;
    widest = std::max(widest, joint.slice_support(y));
    narrowest = std::min(narrowest, joint.slice_support(y));
  }
  auto objective = [&](double beta) {
    const double h = arimoto_conditional_entropy(joint, beta / (beta + rho));
    const std::size_t m = beta > 0.0 ? widest : narrowest;
    return (h - log_harmonic_envelope_u(beta, m)) / beta;
  };
  return to_base(sup_over_beta(objective, rho, opts), base);
}

MomentValue ub_two_term_conditional(const JointPmf& joint, double rho) {
  require_positive_rho(rho, "ub_two_term_conditional");
  const double h1 = arimoto_conditional_entropy(joint, 1.0 / (1.0 + rho));
  const double hr = rho > 1.0 ? arimoto_conditional_entropy(joint, 1.0 / rho) : 0.0;
  return {log_two_term(rho, h1, hr), rho};
}

MomentValue ub_conditional(const JointPmf& joint, double rho) {
  MomentValue best = ub_two_term_conditional(joint, rho);
  const double h1 = arimoto_conditional_entropy(joint, 1.0 / (1.0 + rho));
  double branch = kInf;
  if (rho < 1.0) {
    double p_top = 0.0;
    const std::vector<double> py = joint.marginal_y();
    for (std::size_t y = 0; y < joint.cols(); ++y) {
      if (py[y] > 0.0) p_top = std::max(p_top, joint.conditional(y).p_max());
    }
    branch = log_small_rho(rho, h1, 0.0, p_top);
  } else if (rho <= 2.0) {
    const double hr = arimoto_conditional_entropy(joint, 1.0 / rho);
    branch = log_small_rho(rho, h1, hr, 0.0);
  } else {
    auto h = [&](double a) { return arimoto_conditional_entropy(joint, a); };
    branch = log_large_rho(rho, h);
  }
  best.log_moment = std::min(best.log_moment, branch);
  return best;
}

}  // namespace renyi
