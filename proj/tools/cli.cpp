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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "renyi/coding.hpp"
#include "renyi/guessing.hpp"
#include "renyi/hypothesis.hpp"
#include "renyi/measures.hpp"
#include "renyi/numerics.hpp"
#include "renyi/oracles.hpp"
#include "renyi/smooth_coding.hpp"

namespace renyi::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> parse_masses(const std::vector<std::string>& items) {
  std::vector<double> v;
  for (const auto& s : items) {
    if (s.empty()) continue;
    const double x = parse_number(s);
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ValidationError("negative or non-finite mass: " + s);
    }
    v.push_back(x);
  }
  return v;
}

void check_total(double total) {
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("masses sum to " + format_number(total) + ", not 1");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t k) {
  std::vector<double> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = k == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1);
  }
  return v;
}

std::string tag(const std::string& name, double v) {
  return name + "=" + format_number(v);
}

// ---------------------------------------------------------------------------
// reproduction tables

ReproRow row(std::string q, double computed) {
  return {std::move(q), std::nullopt, 3, computed};
}

ReproRow row(std::string q, double reference, int decimals, double computed) {
  return {std::move(q), reference, decimals, computed};
}

JointPmf diagonal_4x4() {
  std::vector<std::vector<double>> r(4, std::vector<double>(4, 1.0 / 52.0));
  for (int i = 0; i < 4; ++i) r[i][i] = 10.0 / 52.0;
  return JointPmf::from_rows(r);
}

JointPmf circulant_4x4() {
  std::vector<std::vector<double>> r = {
      {9, 3, 4, 9}, {9, 9, 3, 4}, {4, 9, 9, 3}, {3, 4, 9, 9}};
  for (auto& x : r) {
    for (auto& v : x) v /= 100.0;
  }
  return JointPmf::from_rows(r);
}

Pmf ternary_source() { return Pmf({4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0}); }

std::vector<ReproRow> guessing_table(const Pmf& pmf, double rho,
                                     const std::vector<double>& ref, bool finite_sum) {
  const SupremizeOptions opts = options_from_environment();
  const BoundReport lb = lb_guessing(pmf, rho, LogBase::nats, opts);
  std::vector<ReproRow> rows = {
      row("lower_bound_arikan", ref[0], 3, lb_arikan(pmf, rho)),
      row("lower_bound_improved", ref[1], 3, lb.value),
      row("exact", ref[2], 3, exact_moment_value(pmf, rho).scaled()),
      row("upper_bound_large_rho", ref[3], 3, ub_large_rho(pmf, rho).scaled()),
      row("upper_bound_two_term", ref[4], 3, ub_two_term(pmf, rho).scaled()),
      row("upper_bound_arikan", ref[5], 3, ub_arikan(pmf, rho).scaled()),
      row("optimizer_beta", lb.optimizer_beta.value_or(0.0)),
  };
  if (finite_sum) {
    rows.push_back(row("lower_bound_finite_sum",
                       lb_guessing_finite_sum(pmf, rho, LogBase::nats, opts).value));
  }
  return rows;
}

std::vector<ReproRow> table1() {
  return guessing_table(Pmf::geometric(0.9, 32), 3.0,
                        {1.864, 2.593, 2.609, 2.920, 2.939, 3.360}, false);
}

std::vector<ReproRow> table2() {
  return guessing_table(Pmf::geometric(0.9, 16), 20.0,
                        {1.439, 2.602, 2.606, 2.662, 2.657, 2.767}, true);
}

std::vector<ReproRow> fig1() {
  const Pmf pmf = Pmf::geometric(24.0 / 25.0, 128);
  const BoundReport lb = lb_guessing(pmf, 6.0, LogBase::nats, options_from_environment());
  return {
      row("exact", 4.084, 3, exact_moment_value(pmf, 6.0).scaled()),
      row("lower_bound_arikan", 2.953, 3, lb_arikan(pmf, 6.0)),
      row("lower_bound_improved", 4.078, 3, lb.value),
      row("optimizer_beta", -2.85, 2, lb.optimizer_beta.value_or(0.0)),
  };
}

std::vector<ReproRow> example5() {
  const JointPmf joint = diagonal_4x4();
  std::vector<ReproRow> rows = {row("map_error", 3.0 / 13.0, -1, map_error(joint))};
  for (double rho : {0.5, 1.0, 2.0, 5.0}) {
    const double closed =
        (10.0 + std::pow(2.0, rho) + std::pow(3.0, rho) + std::pow(4.0, rho)) / 13.0;
    rows.push_back(row(tag("exact_conditional_moment rho", rho), closed, -1,
                       exact_conditional_moment(joint, rho)));
    rows.push_back(row(tag("locus_upper rho", rho), closed, -1,
                       locus_bounds(3.0 / 13.0, 4, rho).upper));
  }
  return rows;
}

std::vector<ReproRow> table4() {
  const JointPmf joint = circulant_4x4();
  const SupremizeOptions opts = options_from_environment();
  std::vector<ReproRow> rows = {row("map_error", 16.0 / 25.0, -1, map_error(joint)),
                                row("map_error_recovered", 16.0 / 25.0, -1,
                                    recover_map_error(moment_derivatives(joint)))};
  const std::vector<std::pair<double, double>> moments = {
      {-1.0, 0.463}, {-0.5, 0.475}, {-0.25, 0.482}, {0.2, 0.494}, {0.5, 0.502}, {0.8, 0.510}};
  for (const auto& [alpha, ref] : moments) {
    rows.push_back(row(tag("error_lb_from_moments alpha", alpha), ref, 3,
                       error_lb_from_moments(joint, alpha, opts).value));
  }
  const std::vector<std::pair<double, double>> baselines = {
      {-1.0, 0.447}, {-0.5, 0.355}, {-0.25, 0.206}, {0.2, 0.523}, {0.5, 0.530}, {0.8, 0.536}};
  for (const auto& [alpha, ref] : baselines) {
    const double v = alpha < 0.0 ? holder_error_lb(joint, alpha) : fano_error_lb(joint, alpha);
    rows.push_back(row(tag(alpha < 0.0 ? "holder alpha" : "fano alpha", alpha), ref, 3, v));
  }
  return rows;
}

std::vector<ReproRow> example8_shannon() {
  const JointPmf joint = circulant_4x4();
  const BoundReport b = error_lb_from_moments(joint, 0.99, options_from_environment());
  return {
      row("error_lb_from_moments alpha=0.99", 0.515, 3, b.value),
      row("fano alpha=0.99", 0.540, 3, fano_error_lb(joint, 0.99)),
      row("shannon", 0.146, 3, shannon_error_lb(joint)),
      row("optimizer_rho", b.optimizer_beta.value_or(0.0)),
  };
}

std::vector<ReproRow> fig2() {
  std::vector<ReproRow> rows;
  for (std::size_t m : {8u, 64u}) {
    const double mm = static_cast<double>(m);
    for (double eps : linspace(0.0, 1.0 - 1.0 / mm, 50)) {
      const double k = std::floor(1.0 / (1.0 - eps) + 1e-12);
      const double lo = 1.0 + k * (1.0 + eps) / 2.0 - (1.0 - eps) * k * k / 2.0;
      const double hi = 1.0 + mm * eps / 2.0;
      const LocusBounds b = locus_bounds(eps, m, 1.0);
      const std::string p = "M=" + std::to_string(m) + " " + tag("eps", eps);
      rows.push_back(row(p + " log_lower", std::log(lo), -1, std::log(b.lower)));
      rows.push_back(row(p + " log_upper", std::log(hi), -1, std::log(b.upper)));
    }
  }
  return rows;
}

std::vector<ReproRow> fig3() {
  const Pmf source = ternary_source();
  const SupremizeOptions opts = options_from_environment();
  std::vector<ReproRow> rows;
  for (std::size_t n : {10u, 100u}) {
    const double nn = static_cast<double>(n);
    const double slack = std::log2(nn * std::log2(3.0) + std::log2(1.0 + std::pow(3.0, -nn))) / nn;
    for (double rho : linspace(0.1, 4.0, 50)) {
      const std::string p = "n=" + std::to_string(n) + " " + tag("rho", rho);
      const CumulantBounds b = product_cumulant_bounds(source, n, rho, LogBase::bits, opts);
      const double h = renyi_entropy(source, 1.0 / (1.0 + rho), LogBase::bits);
      rows.push_back(row(p + " lower", b.lower.value / rho));
      rows.push_back(row(p + " upper", *b.upper / rho));
      rows.push_back(row(p + " looser_lower", h - slack));
      rows.push_back(row(p + " looser_upper", h));
      if (n == 10) {
        rows.push_back(row(p + " exact",
                           exact_product_cumulant(source, n, rho, LogBase::bits) / rho));
      }
    }
  }
  return rows;
}

std::vector<ReproRow> fig4() {
  const Pmf source = ternary_source();
  const SupremizeOptions opts = options_from_environment();
  const double h = renyi_entropy(source, Order::one(), LogBase::bits);
  const double top = std::log2(3.0);
  std::vector<ReproRow> rows;
  for (std::size_t n : {10u, 100u}) {
    for (int i = 1; i <= 50; ++i) {
      const double r = h + (top - h) * i / 51.0;
      const std::string p = "n=" + std::to_string(n) + " " + tag("R", r);
      const ReliabilityReport rep = reliability_lb(source, n, r, LogBase::bits, opts);
      rows.push_back(row(p + " improved", rep.improved.value));
      rows.push_back(row(p + " baseline", rep.baseline.value));
      if (n == 10) {
        rows.push_back(row(p + " exact",
                           exact_product_reliability(source, n, r, LogBase::bits)));
      }
    }
  }
  return rows;
}

std::vector<ReproRow> fig5() {
  const Pmf unit({0.4, 0.3, 0.2, 0.1});
  const SupremizeOptions opts = options_from_environment();
  std::vector<ReproRow> rows;
  for (std::size_t n : {1u, 100u}) {
    const Pmf x = convolved_sum(unit, n);
    for (double eps : {0.01, 0.0}) {
      for (double rho : linspace(0.1, 5.0, 50)) {
        const std::string p =
            "n=" + std::to_string(n) + " " + tag("eps", eps) + " " + tag("rho", rho);
        const SmoothReferenceBounds ref = smooth_reference_bounds(x, eps, rho, LogBase::bits);
        rows.push_back(row(p + " combined",
                           combined_cumulant_lb(x, eps, rho, LogBase::bits, opts).value));
        rows.push_back(row(p + " prefix_reference", ref.prefix));
        rows.push_back(row(p + " nonprefix_beta_one", ref.nonprefix));
      }
    }
  }
  return rows;
}

const std::map<std::string, std::function<std::vector<ReproRow>()>>& tables() {
  static const std::map<std::string, std::function<std::vector<ReproRow>()>> t = {
      {"table1", table1}, {"table2", table2}, {"table4", table4},
      {"fig1", fig1},     {"fig2", fig2},     {"fig3", fig3},
      {"fig4", fig4},     {"fig5", fig5},     {"example5", example5},
      {"example8_shannon", example8_shannon}};
  return t;
}

// ---------------------------------------------------------------------------
// bound and oracle sweeps

struct Inputs {
  std::optional<Pmf> pmf;
  std::optional<JointPmf> joint;
  std::vector<double> g;
  double rho = 1.0;
  Order alpha = Order(0.5);
  double eps = 0.0;
  double r = 0.0;
  std::size_t n = 1;
  std::size_t m = 0;
  double step = 0.01;
  LogBase base = LogBase::nats;
  SupremizeOptions opts;

  const Pmf& need_pmf() const {
    if (!pmf) throw ValidationError("this command needs a pmf (--pmf, --geometric, ...)");
    return *pmf;
  }
  const JointPmf& need_joint() const {
    if (!joint) throw ValidationError("this command needs --matrix");
    return *joint;
  }
};

struct Value {
  double value;
  std::optional<double> beta;
};

Value of(const BoundReport& r) { return {r.value, r.optimizer_beta}; }
Value of(double v) { return {v, std::nullopt}; }

using BoundFn = std::function<Value(const Inputs&)>;

const std::map<std::string, BoundFn>& bound_table() {
  static const std::map<std::string, BoundFn> t = {
      // measures
      {"renyi-entropy", [](const Inputs& in) { return of(renyi_entropy(in.need_pmf(), in.alpha, in.base)); }},
      {"smooth-entropy", [](const Inputs& in) {
         return of(smooth_renyi_entropy(in.need_pmf(), in.eps, in.alpha.value(), in.base));
       }},
      {"arimoto-entropy", [](const Inputs& in) {
         return of(arimoto_conditional_entropy(in.need_joint(), in.alpha, in.base));
       }},
      // guessing
      {"lb-arikan", [](const Inputs& in) { return of(lb_arikan(in.need_pmf(), in.rho, in.base)); }},
      {"lb-guessing", [](const Inputs& in) {
         return of(lb_guessing(in.need_pmf(), in.rho, in.base, in.opts));
       }},
      {"lb-guessing-finite-sum", [](const Inputs& in) {
         return of(lb_guessing_finite_sum(in.need_pmf(), in.rho, in.base, in.opts));
       }},
      {"ub-arikan", [](const Inputs& in) { return of(ub_arikan(in.need_pmf(), in.rho).scaled(in.base)); }},
      {"ub-two-term", [](const Inputs& in) { return of(ub_two_term(in.need_pmf(), in.rho).scaled(in.base)); }},
      {"ub-small-rho", [](const Inputs& in) { return of(ub_small_rho(in.need_pmf(), in.rho).scaled(in.base)); }},
      {"ub-large-rho", [](const Inputs& in) { return of(ub_large_rho(in.need_pmf(), in.rho).scaled(in.base)); }},
      {"ub-best", [](const Inputs& in) { return of(ub_best(in.need_pmf(), in.rho).scaled(in.base)); }},
      {"key-bound-lower", [](const Inputs& in) {
         return of(key_bound(in.need_pmf(), in.g, in.rho, Side::lower, in.base, in.opts));
       }},
      {"key-bound-upper", [](const Inputs& in) {
         return of(key_bound(in.need_pmf(), in.g, in.rho, Side::upper, in.base, in.opts));
       }},
      {"lb-arikan-conditional", [](const Inputs& in) {
         return of(lb_arikan_conditional(in.need_joint(), in.rho, in.base));
       }},
      {"lb-guessing-conditional", [](const Inputs& in) {
         return of(lb_guessing_conditional(in.need_joint(), in.rho, in.base, in.opts));
       }},
      {"ub-two-term-conditional", [](const Inputs& in) {
         return of(ub_two_term_conditional(in.need_joint(), in.rho).scaled(in.base));
       }},
      {"ub-conditional", [](const Inputs& in) {
         return of(ub_conditional(in.need_joint(), in.rho).scaled(in.base));
       }},
      // hypothesis testing
      {"map-error", [](const Inputs& in) { return of(map_error(in.need_joint())); }},
      {"recover-error", [](const Inputs& in) {
         return of(recover_map_error(moment_derivatives(in.need_joint())));
       }},
      {"locus-lower", [](const Inputs& in) { return of(locus_bounds(in.eps, in.m, in.rho).lower); }},
      {"locus-upper", [](const Inputs& in) { return of(locus_bounds(in.eps, in.m, in.rho).upper); }},
      {"error-lb", [](const Inputs& in) {
         return of(error_lb_from_moments(in.need_joint(), in.alpha.value(), in.opts));
       }},
      {"fano", [](const Inputs& in) { return of(fano_error_lb(in.need_joint(), in.alpha.value())); }},
      {"holder", [](const Inputs& in) { return of(holder_error_lb(in.need_joint(), in.alpha.value())); }},
      {"shannon", [](const Inputs& in) { return of(shannon_error_lb(in.need_joint())); }},
      // lossless coding
      {"cumulant-lower", [](const Inputs& in) {
         return of(cumulant_bounds(in.need_pmf(), in.rho, in.base, in.opts).lower);
       }},
      {"cumulant-upper", [](const Inputs& in) {
         const auto b = cumulant_bounds(in.need_pmf(), in.rho, in.base, in.opts);
         if (!b.upper) throw DomainError("cumulant-upper: rho must be positive");
         return of(*b.upper);
       }},
      {"cumulant-reference-lower", [](const Inputs& in) {
         return of(reference_cumulant_bounds(in.need_pmf(), in.rho, in.base).first);
       }},
      {"cumulant-reference-upper", [](const Inputs& in) {
         return of(reference_cumulant_bounds(in.need_pmf(), in.rho, in.base).second);
       }},
      {"tail", [](const Inputs& in) { return of(tail_lb(in.need_pmf(), in.r, in.base, in.opts)); }},
      {"product-cumulant-lower", [](const Inputs& in) {
         return of(product_cumulant_bounds(in.need_pmf(), in.n, in.rho, in.base, in.opts).lower);
       }},
      {"product-cumulant-upper", [](const Inputs& in) {
         return of(*product_cumulant_bounds(in.need_pmf(), in.n, in.rho, in.base, in.opts).upper);
       }},
      {"reliability", [](const Inputs& in) {
         return of(reliability_lb(in.need_pmf(), in.n, in.r, in.base, in.opts).improved);
       }},
      {"reliability-baseline", [](const Inputs& in) {
         return of(reliability_lb(in.need_pmf(), in.n, in.r, in.base, in.opts).baseline);
       }},
      // coding with errors
      {"smooth-avg", [](const Inputs& in) {
         return of(avg_error_cumulant_lb(in.need_pmf(), in.eps, in.rho, in.base, in.opts));
       }},
      {"smooth-max", [](const Inputs& in) {
         return of(max_error_cumulant_lb(in.need_pmf(), in.eps, in.rho, in.base, in.opts));
       }},
      {"smooth-combined", [](const Inputs& in) {
         return of(combined_cumulant_lb(in.need_pmf(), in.eps, in.rho, in.base, in.opts));
       }},
      {"smooth-prefix-reference", [](const Inputs& in) {
         return of(smooth_reference_bounds(in.need_pmf(), in.eps, in.rho, in.base).prefix);
       }},
      {"smooth-nonprefix-reference", [](const Inputs& in) {
         return of(smooth_reference_bounds(in.need_pmf(), in.eps, in.rho, in.base).nonprefix);
       }},
  };
  return t;
}

bool defaults_to_bits(const std::string& name) {
  static const std::vector<std::string> prefixes = {"cumulant", "tail", "product", "reliability",
                                                    "smooth-avg", "smooth-max", "smooth-combined",
                                                    "smooth-prefix", "smooth-nonprefix"};
  return std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) {
    return name.rfind(p, 0) == 0;
  });
}

const std::map<std::string, BoundFn>& oracle_table() {
  static const std::map<std::string, BoundFn> t = {
      {"exact-moment", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         return of(to_base(std::log(oracle::guessing_moment(p, in.rho)) / in.rho, in.base));
       }},
      {"exact-conditional-moment", [](const Inputs& in) {
         const JointPmf& j = in.need_joint();
         oracle::Matrix rows(j.rows(), std::vector<double>(j.cols()));
         for (std::size_t x = 0; x < j.rows(); ++x) {
           for (std::size_t y = 0; y < j.cols(); ++y) rows[x][y] = j(x, y);
         }
         return of(to_base(std::log(oracle::conditional_guessing_moment(rows, in.rho)) / in.rho,
                           in.base));
       }},
      {"exact-cumulant-product", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         return of(to_base(oracle::product_cumulant(p, in.n, in.rho), in.base));
       }},
      {"exact-reliability-product", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         const double bits = from_base(in.r, in.base) / std::log(2.0);
         return of(to_base(from_base(oracle::product_reliability(p, in.n, bits), LogBase::bits),
                           in.base));
       }},
      {"tail", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         return of(oracle::tail_probability(p, from_base(in.r, in.base) / std::log(2.0)));
       }},
      {"smooth-grid", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         return of(to_base(oracle::smooth_entropy_grid(p, in.eps, in.alpha.value(), in.step).value,
                           in.base));
       }},
      {"encoder-enum", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         const auto e = oracle::encoder_enumeration(p, in.eps, in.rho);
         return of(to_base(from_base(e.average_error, LogBase::bits), in.base));
       }},
      {"encoder-enum-lossless", [](const Inputs& in) {
         const auto p = in.need_pmf().masses();
         const auto e = oracle::encoder_enumeration(p, in.eps, in.rho);
         return of(to_base(from_base(e.maximal_error, LogBase::bits), in.base));
       }},
      {"zeta", [](const Inputs& in) {
         const auto b = oracle::zeta_partial_sum(in.rho, 10000000);
         return of(0.5 * (b.lo + b.hi));
       }},
      {"vandermonde", [](const Inputs& in) { return of(oracle::log_vandermonde_determinant(in.m)); }},
  };
  return t;
}

std::string names_of(const std::map<std::string, BoundFn>& t) {
  std::string s;
  for (const auto& [k, v] : t) s += (s.empty() ? "" : ", ") + k;
  return s;
}

struct Flags {
  std::string pmf, geometric, matrix, g, base;
  std::vector<std::string> convolved;
  std::size_t equiprobable = 0;
  std::string rho, alpha, eps, r;
  std::string rho_grid, alpha_grid, eps_grid, r_grid;
  std::size_t n = 1;
  std::size_t m = 0;
  double step = 0.01;
};

void add_input_flags(CLI::App* app, Flags& f) {
  app->add_option("--pmf", f.pmf, "pmf file or inline list such as 4/7,2/7,1/7");
  app->add_option("--geometric", f.geometric, "truncated geometric pmf: a=0.9,M=32");
  app->add_option("--equiprobable", f.equiprobable, "equiprobable pmf on M points");
  app->add_option("--convolved-sum", f.convolved, "pmf of a sum of n i.i.d. copies: FILE n=K")
      ->expected(2);
  app->add_option("--matrix", f.matrix, "joint pmf: builtin name, CSV file, or rows joined by ';'");
  app->add_option("--g", f.g, "guessing function values, inline list (default: the ranking)");
  app->add_option("--rho", f.rho, "rho, or a grid lo:hi:k");
  app->add_option("--alpha", f.alpha, "Renyi order, or a grid lo:hi:k");
  app->add_option("--eps", f.eps, "error probability, or a grid lo:hi:k");
  app->add_option("--R", f.r, "rate in the output base, or a grid lo:hi:k");
  app->add_option("--rho-grid", f.rho_grid, "grid lo:hi:k");
  app->add_option("--alpha-grid", f.alpha_grid, "grid lo:hi:k");
  app->add_option("--eps-grid", f.eps_grid, "grid lo:hi:k");
  app->add_option("--R-grid", f.r_grid, "grid lo:hi:k");
  app->add_option("--n", f.n, "block length");
  app->add_option("--M", f.m, "alphabet size (locus bounds, vandermonde)");
  app->add_option("--step", f.step, "grid step for smooth-grid");
  app->add_option("--base", f.base, "bits, nats or dits");
}

std::size_t parse_count(const std::string& s, const std::string& key) {
  const std::string t = trim(s);
  const std::string prefix = key + "=";
  const std::string digits = t.rfind(prefix, 0) == 0 ? t.substr(prefix.size()) : t;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(digits, &used);
    if (used != digits.size() || v < 1) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ValidationError("expected " + key + "=<positive integer>, got " + s);
  }
}

struct Sweep {
  std::string name = "param";
  std::vector<double> values{0.0};
  std::function<void(Inputs&, double)> apply = [](Inputs&, double) {};
};

Inputs build_inputs(const Flags& f, const std::string& command, Sweep& sweep) {
  Inputs in;
  in.opts = options_from_environment();
  int sources = 0;
  if (!f.pmf.empty()) { in.pmf = parse_pmf(f.pmf); ++sources; }
  if (!f.geometric.empty()) { in.pmf = parse_geometric(f.geometric); ++sources; }
  if (f.equiprobable > 0) { in.pmf = Pmf::equiprobable(f.equiprobable); ++sources; }
  if (!f.convolved.empty()) {
    in.pmf = convolved_sum(parse_pmf(f.convolved[0]), parse_count(f.convolved[1], "n"));
    ++sources;
  }
  if (sources > 1) throw ValidationError("give at most one pmf source");
  if (!f.matrix.empty()) in.joint = parse_matrix(f.matrix);
  if (!f.g.empty()) {
    in.g = parse_masses(split(f.g, ','));
  } else if (in.pmf) {
    const Ranking rk = ranking(*in.pmf);
    for (std::size_t i : rk.guess_of) in.g.push_back(static_cast<double>(i));
  }
  in.n = f.n;
  in.m = f.m;
  if (in.m == 0 && in.joint) in.m = in.joint->rows();
  in.step = f.step;
  in.base = f.base.empty() ? (defaults_to_bits(command) ? LogBase::bits : LogBase::nats)
                           : parse_log_base(f.base);

  struct Param {
    std::string name;
    std::string scalar;
    std::string grid;
    std::function<void(Inputs&, double)> set;
  };
  const std::vector<Param> params = {
      {"rho", f.rho, f.rho_grid, [](Inputs& i, double v) { i.rho = v; }},
      {"alpha", f.alpha, f.alpha_grid, [](Inputs& i, double v) { i.alpha = Order(v); }},
      {"eps", f.eps, f.eps_grid, [](Inputs& i, double v) { i.eps = v; }},
      {"R", f.r, f.r_grid, [](Inputs& i, double v) { i.r = v; }},
  };
  bool swept = false;
  for (const Param& p : params) {
    std::vector<double> values;
    if (!p.grid.empty()) {
      values = parse_grid(p.grid);
    } else if (!p.scalar.empty()) {
      values = parse_grid(p.scalar);
    } else {
      continue;
    }
    if (values.size() == 1 && p.grid.empty()) {
      p.set(in, values[0]);
      if (!swept && sweep.name == "param") sweep = {p.name, values, p.set};
      continue;
    }
    if (swept) throw ValidationError("only one parameter may be swept");
    swept = true;
    sweep = {p.name, values, p.set};
  }
  return in;
}

int run_sweep(const std::string& command, const std::map<std::string, BoundFn>& table,
              const Flags& f, std::ostream& out) {
  const auto it = table.find(command);
  if (it == table.end()) {
    throw CLI::ValidationError("unknown name '" + command + "'; expected one of: " +
                               names_of(table));
  }
  Sweep sweep;
  Inputs in = build_inputs(f, command, sweep);
  std::ostringstream buf;
  buf << sweep.name << ",value,optimizer_beta\n";
  for (double v : sweep.values) {
    sweep.apply(in, v);
    Value r;
    try {
      r = it->second(in);
    } catch (const UndefinedBound& e) {
      throw UndefinedBound(command + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError(command + ": " + e.what());
    }
    buf << format_number(v) << ',' << format_number(r.value) << ','
        << (r.beta ? format_number(*r.beta) : "") << '\n';
  }
  out << buf.str();
  return kOk;
}

int run_reproduce(const std::string& id, std::ostream& out, std::ostream& err) {
  const std::vector<ReproRow> rows = reproduce(id);
  out << "quantity,paper_value,computed,abs_diff\n";
  int bad = 0;
  for (const ReproRow& r : rows) {
    out << r.quantity << ',';
    if (r.has_reference()) {
      char ref[64];
      if (r.decimals >= 0) {
        std::snprintf(ref, sizeof ref, "%.*f", r.decimals, *r.reference);
      } else {
        std::snprintf(ref, sizeof ref, "%s", format_number(*r.reference).c_str());
      }
      out << ref << ',' << format_number(r.computed) << ','
          << format_number(std::abs(r.computed - *r.reference)) << '\n';
      if (!r.ok()) {
        ++bad;
        err << "mismatch: " << r.quantity << " computed " << format_number(r.computed)
            << ", reference " << ref << '\n';
      }
    } else {
      out << ',' << format_number(r.computed) << ",\n";
    }
  }
  return bad > 0 ? kMismatch : kOk;
}

}  // namespace

double ReproRow::tolerance() const {
  if (decimals < 0) return 1e-9 * std::max(1.0, std::abs(reference.value_or(0.0)));
  return 0.5 * std::pow(10.0, -decimals) + 1e-12;
}

bool ReproRow::ok() const {
  if (!reference) return !std::isnan(computed);
  return std::abs(computed - *reference) <= tolerance();
}

std::vector<std::string> reproduce_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : tables()) ids.push_back(k);
  return ids;
}

std::vector<ReproRow> reproduce(const std::string& id) {
  const auto it = tables().find(id);
  if (it == tables().end()) throw ValidationError("unknown reproduction id: " + id);
  return it->second();
}

double parse_number(const std::string& text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  auto one = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw ValidationError("not a number: " + text);
    }
    if (used != t.size()) throw ValidationError("not a number: " + text);
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return one(s);
  const double den = one(trim(s.substr(slash + 1)));
  if (den == 0.0) throw ValidationError("zero denominator: " + text);
  return one(trim(s.substr(0, slash))) / den;
}

std::vector<double> parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) throw ValidationError("grid must look like lo:hi:k, got " + text);
  const double lo = parse_number(parts[0]);
  const double hi = parse_number(parts[1]);
  const double k = parse_number(parts[2]);
  if (!(k >= 1.0) || k != std::floor(k) || k > 1e6) {
    throw ValidationError("grid point count must be a positive integer: " + text);
  }
  return linspace(lo, hi, static_cast<std::size_t>(k));
}

// Files, pipes and /dev/fd paths all count; directories do not.
static bool is_readable_path(const std::string& spec) {
  std::error_code ec;
  return std::filesystem::exists(spec, ec) && !std::filesystem::is_directory(spec, ec);
}

Pmf parse_pmf(const std::string& spec) {
  std::vector<double> masses;
  if (is_readable_path(spec)) {
    std::vector<std::string> items;
    for (const auto& line : read_lines(spec)) {
      for (const auto& cell : split(line, ',')) items.push_back(cell);
    }
    masses = parse_masses(items);
  } else {
    masses = parse_masses(split(spec, ','));
  }
  if (masses.empty()) throw ValidationError("empty pmf: " + spec);
  double total = 0.0;
  for (double v : masses) total += v;
  check_total(total);
  return Pmf::from_weights(masses);
}

Pmf parse_geometric(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ',');
  if (parts.size() != 2) throw ValidationError("expected a=<a>,M=<M>, got " + spec);
  std::string a = parts[0];
  if (a.rfind("a=", 0) == 0) a = a.substr(2);
  return Pmf::geometric(parse_number(a), parse_count(parts[1], "M"));
}

JointPmf parse_matrix(const std::string& spec) {
  if (spec == "diagonal-4x4") return diagonal_4x4();
  if (spec == "circulant-4x4") return circulant_4x4();
  std::vector<std::string> lines;
  if (is_readable_path(spec)) {
    lines = read_lines(spec);
  } else {
    lines = split(spec, ';');
  }
  std::vector<std::vector<double>> rows;
  double total = 0.0;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    rows.push_back(parse_masses(split(line, ',')));
    for (double v : rows.back()) total += v;
  }
  if (rows.empty()) throw ValidationError("empty matrix: " + spec);
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw ValidationError("ragged matrix: " + spec);
  }
  check_total(total);
  for (auto& r : rows) {
    for (auto& v : r) v /= total;
  }
  return JointPmf::from_rows(rows);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi-entropy bounds on guessing, hypothesis testing and lossless coding"};
  app.name("renyi");
  app.require_subcommand(1);

  std::string id;
  auto* rep = app.add_subcommand("reproduce", "print a reproduction table as CSV");
  rep->add_option("id", id, "one of: table1 table2 table4 fig1..fig5 example5 example8_shannon")
      ->required();

  std::string bound_name;
  Flags bound_flags;
  auto* bnd = app.add_subcommand("bound", "evaluate a bound over a parameter grid");
  bnd->add_option("name", bound_name, "bound name")->required();
  add_input_flags(bnd, bound_flags);

  std::string oracle_name;
  Flags oracle_flags;
  auto* orc = app.add_subcommand("oracle", "brute-force reference computations");
  orc->add_option("name", oracle_name, "oracle name")->required();
  add_input_flags(orc, oracle_flags);

  std::ostringstream help_out;
  std::ostringstream help_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rep->parsed()) return run_reproduce(id, out, err);
    if (bnd->parsed()) return run_sweep(bound_name, bound_table(), bound_flags, out);
    if (orc->parsed()) return run_sweep(oracle_name, oracle_table(), oracle_flags, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return rep->parsed() ? kUsage : kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const UndefinedBound& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

}  // namespace renyi::cli
