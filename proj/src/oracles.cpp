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

#include "renyi/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace renyi::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

unsigned floor_log2(std::uint64_t k) {
  unsigned l = 0;
  while (k >>= 1) ++l;
  return l;
}

std::vector<double> descending(std::span<const double> p) {
  std::vector<double> s(p.begin(), p.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

double guessing_moment(std::span<const double> p, double rho) {
  const std::vector<double> s = descending(p);
  long double sum = 0.0L;
  for (std::size_t k = 0; k < s.size(); ++k) {
    sum += static_cast<long double>(s[k]) *
           std::pow(static_cast<long double>(k + 1), static_cast<long double>(rho));
  }
  return static_cast<double>(sum);
}

double conditional_guessing_moment(const Matrix& joint, double rho) {
  const std::size_t cols = joint.empty() ? 0 : joint[0].size();
  double total = 0.0;
  for (std::size_t y = 0; y < cols; ++y) {
    std::vector<double> col;
    for (const auto& row : joint) col.push_back(row[y]);
    // P(x, y) summed against guess numbers is P_Y(y) E[g^rho | y].
    total += guessing_moment(col, rho);
  }
  return total;
}

double map_error(const Matrix& joint) {
  const std::size_t cols = joint.empty() ? 0 : joint[0].size();
  double hit = 0.0;
  for (std::size_t y = 0; y < cols; ++y) {
    double best = 0.0;
    for (const auto& row : joint) best = std::max(best, row[y]);
    hit += best;
  }
  return 1.0 - hit;
}

double renyi_entropy(std::span<const double> p, double alpha) {
  long double s = 0.0L;
  if (alpha == 1.0) {
    for (double v : p) {
      if (v > 0.0) s -= v * std::log(static_cast<long double>(v));
    }
    return static_cast<double>(s);
  }
  for (double v : p) {
    if (v > 0.0) s += std::pow(static_cast<long double>(v), static_cast<long double>(alpha));
  }
  return static_cast<double>(std::log(s) / (1.0L - alpha));
}

Bracket zeta_partial_sum(double s, std::uint64_t n) {
  if (!(s > 1.0)) throw std::domain_error("zeta_partial_sum: need s > 1");
  long double head = 0.0L;
  for (std::uint64_t k = n; k >= 1; --k) {
    head += std::pow(static_cast<long double>(k), -static_cast<long double>(s));
  }
  // int_{n+1}^inf x^-s dx <= tail <= int_n^inf x^-s dx
  const double lo = std::pow(static_cast<double>(n + 1), 1.0 - s) / (s - 1.0);
  const double hi = std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
  return {static_cast<double>(head) + lo, static_cast<double>(head) + hi};
}

double harmonic_sum(double beta, std::uint64_t m) {
  long double s = 0.0L;
  for (std::uint64_t i = m; i >= 1; --i) {
    s += std::pow(static_cast<long double>(i), -static_cast<long double>(beta));
  }
  return static_cast<double>(s);
}

double codeword_sum(double beta, std::uint64_t m) {
  long double s = 0.0L;
  for (std::uint64_t k = 1; k <= m; ++k) {
    s += std::pow(2.0L, -static_cast<long double>(beta) * floor_log2(k));
  }
  return static_cast<double>(s);
}

double cumulant(std::span<const double> p, double rho) {
  const std::vector<double> s = descending(p);
  long double e = 0.0L;
  for (std::size_t k = 0; k < s.size(); ++k) {
    e += s[k] * std::pow(2.0L, static_cast<long double>(rho) * floor_log2(k + 1));
  }
  return static_cast<double>(std::log(e));
}

std::vector<double> product_probabilities(std::span<const double> single,
                                          std::size_t n) {
  std::vector<double> out{1.0};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> next;
    next.reserve(out.size() * single.size());
    for (double a : out) {
      for (double b : single) next.push_back(a * b);
    }
    out.swap(next);
  }
  return out;
}

double product_cumulant(std::span<const double> single, std::size_t n,
                        double rho) {
  const std::vector<double> all = product_probabilities(single, n);
  return cumulant(all, rho) / static_cast<double>(n);
}

double product_reliability(std::span<const double> single, std::size_t n,
                           double r_bits) {
  const std::vector<double> s = descending(product_probabilities(single, n));
  const double need = static_cast<double>(n) * r_bits - 1e-9;
  long double mass = 0.0L;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (static_cast<double>(floor_log2(k + 1)) >= need) mass += s[k];
  }
  if (mass <= 0.0L) return kInf;
  return static_cast<double>(-std::log2(mass)) / static_cast<double>(n);
}

double tail_probability(std::span<const double> p, double r_bits) {
  const std::vector<double> s = descending(p);
  double mass = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (static_cast<double>(floor_log2(k + 1)) > r_bits) mass += s[k];
  }
  return mass;
}

SmoothGridResult smooth_entropy_grid(std::span<const double> p, double eps,
                                     double alpha, double step) {
  const std::size_t m = p.size();
  std::vector<std::vector<double>> levels(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (double v = 0.0; v < p[x]; v += step) levels[x].push_back(v);
    levels[x].push_back(p[x]);
  }
  SmoothGridResult best{kInf, {}};
  double best_log = kInf;
  std::vector<double> mu(m, 0.0);
  std::function<void(std::size_t, double)> walk = [&](std::size_t x, double total) {
    if (x == m) {
      if (total < 1.0 - eps - 1e-12) return;
      long double s = 0.0L;
      for (double v : mu) {
        if (v > 0.0) s += std::pow(static_cast<long double>(v), static_cast<long double>(alpha));
      }
      const double l = static_cast<double>(std::log(s));
      if (l < best_log) {
        best_log = l;
        best = {l / (1.0 - alpha), mu};
      }
      return;
    }
    for (double v : levels[x]) {
      mu[x] = v;
      walk(x + 1, total + v);
    }
  };
  walk(0, 0.0);
  return best;
}

EncoderOptimum encoder_enumeration(std::span<const double> p, double eps,
                                   double rho) {
  const std::size_t m = p.size();
  if (m == 0 || m > 10) throw std::domain_error("encoder_enumeration: need 1 <= M <= 10");
  EncoderOptimum out{kInf, kInf, 0};
  // Restricted growth strings list each set partition once.
  std::vector<std::size_t> block(m, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i,
                                                           std::size_t used) {
    if (i == m) {
      ++out.partitions;
      std::vector<double> mass(used, 0.0);
      std::vector<double> top(used, 0.0);
      std::vector<std::size_t> positive(used, 0);
      for (std::size_t x = 0; x < m; ++x) {
        mass[block[x]] += p[x];
        top[block[x]] = std::max(top[block[x]], p[x]);
        if (p[x] > 0.0) ++positive[block[x]];
      }
      double error = 0.0;
      bool lossless = true;
      for (std::size_t b = 0; b < used; ++b) {
        error += mass[b] - top[b];
        if (positive[b] > 1) lossless = false;
      }
      std::sort(mass.begin(), mass.end(), std::greater<>());
      long double e = 0.0L;
      for (std::size_t k = 0; k < used; ++k) {
        e += mass[k] * std::pow(2.0L, static_cast<long double>(rho) * floor_log2(k + 1));
      }
      const double v = static_cast<double>(std::log2(e)) / rho;
      if (error <= eps + 1e-12) out.average_error = std::min(out.average_error, v);
      if (lossless) out.maximal_error = std::min(out.maximal_error, v);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      walk(i + 1, std::max(used, b + 1));
    }
  };
  walk(0, 0);
  return out;
}

double log_vandermonde_determinant(std::size_t m) {
  if (m == 0 || m > 12) throw std::domain_error("log_vandermonde_determinant: need 1 <= m <= 12");
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      a[k][i] = std::pow(std::log(static_cast<long double>(i + 1)),
                         static_cast<long double>(k));
    }
  }
  long double det = 1.0L;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      const long double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return static_cast<double>(det);
}

double boztas_first_moment(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) s += std::sqrt(v);
  return 0.5 * (s * s + 1.0);
}

double boztas_second_moment(std::span<const double> p) {
  double half = 0.0;
  double third = 0.0;
  for (double v : p) {
    half += std::sqrt(v);
    third += std::cbrt(v);
  }
  return third * third * third / 3.0 + half * half / 2.0 + 1.0 / 6.0;
}

}  // namespace renyi::oracle
