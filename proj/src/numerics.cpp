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

#include "renyi/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointNudge = 1e-9;

// B_{2k} / (2k)!
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

struct Point {
  double x;
  int side;
};

}  // namespace

double log_sum_exp(std::span<const double> xs) {
  double m = -kInf;
  for (double x : xs) m = std::max(m, x);
  if (m == -kInf) return -kInf;
  if (m == kInf) return kInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double log_power_sum(std::span<const double> masses, double exponent) {
  std::vector<double> logs;
  logs.reserve(masses.size());
  for (double p : masses) {
    if (p > 0.0) logs.push_back(exponent * std::log(p));
  }
  return log_sum_exp(logs);
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw DomainError("riemann_zeta: need s > 1");
  constexpr int n = 16;
  double sum = 0.0;
  for (int k = n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double nn = n;
  sum += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
  // Falling powers s (s+1) ... (s+2k-2) times N^{-s-2k+1}.
  double rising = s;
  double npow = std::pow(nn, -s - 1.0);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    sum += kBernoulliOverFactorial[k] * rising * npow;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    npow /= nn * nn;
  }
  return sum;
}

double harmonic_envelope_u(double beta, std::size_t m) {
  if (m == 0) throw DomainError("harmonic_envelope_u: need M >= 1");
  if (!std::isfinite(beta)) throw DomainError("harmonic_envelope_u: beta");
  const double mm = static_cast<double>(m);
  const double u1 = std::log(mm) + kEulerGamma + 0.5 / mm -
                    5.0 / (6.0 * (10.0 * mm * mm + 1.0));
  if (beta == 1.0) return u1;
  if (beta > 1.0) {
    const double tail = std::pow(mm + 1.0, 1.0 - beta) / (beta - 1.0) +
                        0.5 * std::pow(mm + 1.0, -beta);
    return std::min(riemann_zeta(beta) - tail, u1);
  }
  if (beta > -1.0) {
    const double e = 1.0 - beta;
    return 1.0 + (std::pow(mm + 0.5, e) - std::pow(1.5, e)) / e;
  }
  const double e = 1.0 - beta;
  return (std::pow(mm, e) - 1.0) / e + 0.5 * (1.0 + std::pow(mm, -beta));
}

double log_harmonic_envelope_u(double beta, std::size_t m) {
  if (beta > -1.0) return std::log(harmonic_envelope_u(beta, m));
  if (m == 0) throw DomainError("harmonic_envelope_u: need M >= 1");
  const double lm = std::log(static_cast<double>(m));
  const double e = 1.0 - beta;
  const double lead =
      m == 1 ? -kInf : e * lm - std::log(e) + std::log1p(-std::exp(-e * lm));
  const double half = std::log(0.5) + log_add_exp(0.0, -beta * lm);
  return log_add_exp(lead, half);
}

double log_power_partial_sum(double beta, std::size_t m) {
  if (m == 0) throw DomainError("log_power_partial_sum: need M >= 1");
  // Largest term sits at i = 1 for beta >= 0 and at i = M otherwise.
  const double top = beta >= 0.0 ? 0.0 : -beta * std::log(static_cast<double>(m));
  double s = 0.0;
  for (std::size_t i = m; i >= 1; --i) {
    s += std::exp(-beta * std::log(static_cast<double>(i)) - top);
  }
  return top + std::log(s);
}

int default_grid_points() {
  const char* env = std::getenv("RENYI_GRID_POINTS");
  if (env == nullptr) return 400;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 2 || v > 1000000) return 400;
  return static_cast<int>(v);
}

SupremizeOptions options_from_environment() {
  SupremizeOptions o;
  o.grid_points = default_grid_points();
  return o;
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto eval = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? -kInf : v;
  };
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < 500; ++it) {
    if (std::abs(b - a) <= tol * std::max(1.0, std::abs(0.5 * (a + b)))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = eval(d);
    }
  }
  return fc >= fd ? c : d;
}

double bisect_root(const std::function<double(double)>& g, double a, double b,
                   double tol) {
  double ga = g(a);
  double gb = g(b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  if ((ga > 0) == (gb > 0)) throw DomainError("bisect_root: no sign change");
  for (int it = 0; it < 400 && b - a > tol; ++it) {
    const double mid = 0.5 * (a + b);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0) == (ga > 0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

BoundReport supremize(const std::function<double(double)>& f,
                      const Interval& interval,
                      const SupremizeOptions& options) {
  if (!(interval.lo < interval.hi)) {
    throw DomainError("supremize: empty interval");
  }
  if (options.grid_points < 2) throw DomainError("supremize: grid too small");

  // One-signed parts as (sign, near magnitude, far magnitude).
  struct Side {
    int sign;
    double near_mag;
    double far_mag;
  };
  std::vector<Side> sides;
  auto far_of = [&](double end) {
    if (!std::isfinite(end)) return options.max_magnitude;
    return std::min(std::abs(end) * (1.0 - kEndpointNudge), options.max_magnitude);
  };
  auto near_of = [&](double end) {
    if (end == 0.0) return options.min_magnitude;
    return std::abs(end) * (1.0 + kEndpointNudge);
  };
  if (interval.lo < 0.0) {
    const double near_end = std::min(interval.hi, 0.0);
    sides.push_back({-1, near_of(near_end), far_of(interval.lo)});
  }
  if (interval.hi > 0.0) {
    const double near_end = std::max(interval.lo, 0.0);
    sides.push_back({+1, near_of(near_end), far_of(interval.hi)});
  }

  std::vector<std::vector<double>> grids;
  for (const Side& s : sides) {
    std::vector<double> g;
    const int n = options.grid_points;
    if (s.near_mag >= s.far_mag) {
      g.push_back(s.sign * s.near_mag);
    } else {
      const double la = std::log(s.near_mag);
      const double lb = std::log(s.far_mag);
      for (int i = 0; i < n; ++i) {
        g.push_back(s.sign * std::exp(la + (lb - la) * i / (n - 1)));
      }
    }
    for (double a : options.anchors) {
      if (a > interval.lo && a < interval.hi && a != 0.0 &&
          (a > 0) == (s.sign > 0)) {
        g.push_back(a);
      }
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    grids.push_back(std::move(g));
  }
  if (!interval.punctured_at_zero && interval.lo < 0.0 && interval.hi > 0.0) {
    grids.push_back({0.0});
  }

  // Evaluate, scanning in ascending abscissa so ties keep the smallest.
  std::vector<Point> pts;
  for (std::size_t s = 0; s < grids.size(); ++s) {
    for (double x : grids[s]) pts.push_back({x, static_cast<int>(s)});
  }
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });

  BoundReport report;
  report.grid_points = static_cast<int>(pts.size());
  double best_x = 0.0;
  double best_v = -kInf;
  int best_side = -1;
  bool found = false;
  for (const Point& p : pts) {
    const double v = f(p.x);
    if (std::isnan(v) || v == -kInf) continue;
    if (!found || v > best_v) {
      found = true;
      best_v = v;
      best_x = p.x;
      best_side = p.side;
    }
  }
  if (!found) throw UndefinedBound("supremize: objective non-finite everywhere");
  if (best_v == kInf) {
    report.value = kInf;
    report.optimizer_beta = best_x;
    return report;
  }

  const std::vector<double>& g = grids[static_cast<std::size_t>(best_side)];
  const auto it = std::lower_bound(g.begin(), g.end(), best_x);
  const std::size_t i = static_cast<std::size_t>(it - g.begin());
  const double a = i > 0 ? g[i - 1] : g[i];
  const double b = i + 1 < g.size() ? g[i + 1] : g[i];
  if (a < b) {
    report.refined = true;
    const double xr = golden_section_max(f, a, b, options.refine_tol);
    const double vr = f(xr);
    if (!std::isnan(vr) && vr > best_v) {
      best_v = vr;
      best_x = xr;
    }
  }
  report.value = best_v;
  report.optimizer_beta = best_x;
  return report;
}

BoundReport infimize(const std::function<double(double)>& f,
                     const Interval& interval,
                     const SupremizeOptions& options) {
  BoundReport r = supremize([&](double x) { return -f(x); }, interval, options);
  r.value = -r.value;
  return r;
}

}  // namespace renyi
