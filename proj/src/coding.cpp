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

#include "renyi/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "renyi/measures.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExactRankLimit = 9007199254740992.0;  // 2^53
const double kLn2 = std::log(2.0);

BoundReport in_base(BoundReport r, LogBase base) {
  r.value = to_base(r.value, base);
  return r;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

// Walks the ranks of an i.i.d. source type class by type class:
// visit(log_prob, first_rank, count) with 1-based ranks.
void walk_ranks(const Pmf& single, std::size_t n,
                const std::function<void(double, std::uint64_t, std::uint64_t)>& visit) {
  if (std::pow(static_cast<double>(single.support_size()),
               static_cast<double>(n)) > kExactRankLimit) {
    throw DomainError("type-class enumeration: |A|^n exceeds 2^53");
  }
  std::uint64_t next = 1;
  for (const TypeClass& t : type_classes(single, n)) {
    const auto c = static_cast<std::uint64_t>(std::llround(t.size));
    visit(t.log_prob, next, c);
    next += c;
  }
}

// Number of ranks k in [first, first + count) with floor(log2 k) == level.
std::uint64_t ranks_at_level(std::uint64_t first, std::uint64_t count,
                             unsigned level) {
  const std::uint64_t lo = std::max<std::uint64_t>(first, std::uint64_t{1} << level);
  const std::uint64_t hi =
      std::min<std::uint64_t>(first + count - 1, (std::uint64_t{2} << level) - 1);
  return hi >= lo ? hi - lo + 1 : 0;
}

unsigned floor_log2(std::uint64_t k) {
  return static_cast<unsigned>(std::bit_width(k) - 1);
}

// log((1/(1+rho)) [1 - e^{-n rho h1}] + e^{n[(rho-1)^+ hr - rho h1]}).
double log_correction(double rho, double h1, double hr, double n) {
  const double first = std::log(-std::expm1(-n * rho * h1)) - std::log1p(rho);
  return log_add_exp(first, n * (std::max(rho - 1.0, 0.0) * hr - rho * h1));
}

double entropy_at(const Pmf& p, double alpha) {
  return renyi_entropy_nats(p.masses(), alpha);
}

}  // namespace

CodeLengthLaw code_length_law(std::uint64_t alphabet_size) {
  if (alphabet_size == 0) throw DomainError("code_length_law: empty alphabet");
  if (alphabet_size == std::numeric_limits<std::uint64_t>::max()) {
    return {64.0, 0.0};
  }
  const std::uint64_t s = alphabet_size + 1;
  const double m = static_cast<double>(std::bit_width(s) - 1);
  // s / 2^m lies in [1, 2), so m is exact even when log2(s) would round up.
  const double frac = static_cast<double>(s) / std::exp2(m);
  return {m, std::clamp(std::log2(frac), 0.0, std::nextafter(1.0, 0.0))};
}

CodeLengthLaw product_code_length_law(std::size_t letters, std::size_t n) {
  if (letters == 0 || n == 0) throw DomainError("product_code_length_law: empty");
  const double bits = static_cast<double>(n) * std::log2(static_cast<double>(letters));
  if (bits < 62.0) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= letters;
    return code_length_law(size);
  }
  // 1 + |A|^n = |A|^n (1 + |A|^{-n}); the correction is below 2^-62.
  const double total = bits + std::log2(1.0 + std::exp2(-bits));
  const double m = std::floor(total);
  return {m, total - m};
}

std::vector<unsigned> codeword_lengths(std::size_t alphabet_size) {
  std::vector<unsigned> out(alphabet_size);
  for (std::size_t k = 1; k <= alphabet_size; ++k) out[k - 1] = floor_log2(k);
  return out;
}

double log_codeword_sum_t(double beta, const CodeLengthLaw& law) {
  require_finite(beta, "log_codeword_sum_t: beta");
  const double m = law.m;
  const double head = std::expm1(law.delta * kLn2);  // 2^delta - 1
  if (beta == 1.0) return std::log(m + head);
  const double x = (1.0 - beta) * kLn2;  // log s_beta
  if (x > 0.0) {
    return m * x + std::log(head - std::expm1(-m * x) / std::expm1(x));
  }
  return std::log(head * std::exp(m * x) + std::expm1(m * x) / std::expm1(x));
}

double codeword_sum_t(double beta, std::uint64_t alphabet_size) {
  return std::exp(log_codeword_sum_t(beta, code_length_law(alphabet_size)));
}

double exact_cumulant(const Pmf& pmf, double rho, LogBase base) {
  require_finite(rho, "exact_cumulant: rho");
  const std::vector<double> p = pmf.sorted_descending();
  std::vector<double> terms;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    if (p[k - 1] <= 0.0) break;
    terms.push_back(std::log(p[k - 1]) + rho * floor_log2(k) * kLn2);
  }
  return to_base(log_sum_exp(terms), base);
}

std::vector<TypeClass> type_classes(const Pmf& single, std::size_t n) {
  if (n == 0) throw DomainError("type_classes: n must be positive");
  std::vector<double> logp;
  for (double p : single.masses()) {
    if (p > 0.0) logp.push_back(std::log(p));
  }
  const std::size_t k = logp.size();
  std::vector<TypeClass> out;
  std::vector<unsigned> counts(k, 0);
  const double log_nfact = std::lgamma(static_cast<double>(n) + 1.0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t left) {
    if (i + 1 == k) {
      counts[i] = static_cast<unsigned>(left);
      TypeClass t;
      t.counts = counts;
      double lsize = log_nfact;
      std::uint64_t exact = 1;
      std::size_t placed = 0;
      bool fits = true;
      for (std::size_t a = 0; a < k; ++a) {
        t.log_prob += counts[a] * logp[a];
        lsize -= std::lgamma(static_cast<double>(counts[a]) + 1.0);
        // Running product of binomials C(placed + c, c), exact while small.
        for (unsigned j = 1; j <= counts[a] && fits; ++j) {
          // exact * (placed + j) / j is an integer, so j / g divides placed + j.
          const std::uint64_t g = std::gcd(exact, std::uint64_t{j});
          if (__builtin_mul_overflow(exact / g, (placed + j) / (j / g), &exact)) {
            fits = false;
          }
        }
        placed += counts[a];
      }
      t.size = fits ? static_cast<double>(exact) : std::exp(lsize);
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[i] = static_cast<unsigned>(c);
      rec(i + 1, left - c);
    }
  };
  rec(0, n);
  std::stable_sort(out.begin(), out.end(), [](const TypeClass& a, const TypeClass& b) {
    return a.log_prob > b.log_prob;
  });
  return out;
}

double exact_product_cumulant(const Pmf& single, std::size_t n, double rho,
                              LogBase base) {
  require_finite(rho, "exact_product_cumulant: rho");
  std::vector<double> terms;
  walk_ranks(single, n, [&](double lp, std::uint64_t first, std::uint64_t count) {
    const unsigned lo = floor_log2(first);
    const unsigned hi = floor_log2(first + count - 1);
    for (unsigned level = lo; level <= hi; ++level) {
      const std::uint64_t c = ranks_at_level(first, count, level);
      if (c == 0) continue;
      terms.push_back(lp + std::log(static_cast<double>(c)) + rho * level * kLn2);
    }
  });
  return to_base(log_sum_exp(terms) / static_cast<double>(n), base);
}

double exact_product_reliability(const Pmf& single, std::size_t n, double r,
                                 LogBase base) {
  require_finite(r, "exact_product_reliability: R");
  // l >= n R (R converted to bits) <=> floor(log2 k) >= ceil(n R_bits).
  const double need = std::ceil(static_cast<double>(n) * from_base(r, base) / kLn2 - 1e-12);
  std::vector<double> terms;
  walk_ranks(single, n, [&](double lp, std::uint64_t first, std::uint64_t count) {
    const unsigned hi = floor_log2(first + count - 1);
    for (unsigned level = floor_log2(first); level <= hi; ++level) {
      if (static_cast<double>(level) < need) continue;
      const std::uint64_t c = ranks_at_level(first, count, level);
      if (c > 0) terms.push_back(lp + std::log(static_cast<double>(c)));
    }
  });
  const double lp = log_sum_exp(terms);
  if (lp == -kInf) return kInf;
  return to_base(-lp / static_cast<double>(n), base);
}

double exact_tail_probability(const Pmf& pmf, double r, LogBase base) {
  require_finite(r, "exact_tail_probability: R");
  const double bits = from_base(r, base) / kLn2;
  const std::vector<double> p = pmf.sorted_descending();
  double tail = 0.0;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    if (static_cast<double>(floor_log2(k)) > bits) tail += p[k - 1];
  }
  return tail;
}

CumulantBounds cumulant_bounds(const Pmf& pmf, double rho, LogBase base,
                               const SupremizeOptions& opts) {
  if (rho == 0.0 || !std::isfinite(rho)) {
    throw DomainError("cumulant_bounds: rho must be a non-zero real");
  }
  const Pmf support = pmf.support_restriction();
  const CodeLengthLaw law = code_length_law(support.size());
  auto objective = [&](double beta) {
    return (entropy_at(support, beta / (beta + rho)) -
            log_codeword_sum_t(beta, law)) / beta;
  };
  SupremizeOptions o = opts;
  o.anchors.push_back(1.0);
  CumulantBounds out;
  out.lower = in_base(supremize(objective, Interval{-rho, kInf, true}, o), base);
  if (rho > 0.0) {
    const double h1 = entropy_at(support, 1.0 / (1.0 + rho));
    const double hr = rho > 1.0 ? entropy_at(support, 1.0 / rho) : 0.0;
    out.upper = to_base(h1 + log_correction(rho, h1, hr, 1.0) / rho, base);
  }
  return out;
}

std::pair<double, double> reference_cumulant_bounds(const Pmf& pmf, double rho,
                                                    LogBase base) {
  if (rho == 0.0 || !std::isfinite(rho)) {
    throw DomainError("reference_cumulant_bounds: rho must be a non-zero real");
  }
  const double slack =
      std::log(std::log2(1.0 + static_cast<double>(pmf.size())));
  if (rho > -1.0) {
    const double h = entropy_at(pmf, 1.0 / (1.0 + rho));
    return {to_base(h - slack, base), to_base(h, base)};
  }
  // H_inf - slack <= -Lambda <= H_inf, divided by rho < 0.
  const double h = entropy_at(pmf, Order::infinity().value());
  return {to_base(-(h - slack) / rho, base), to_base(-h / rho, base)};
}

BoundReport tail_lb(const Pmf& pmf, double r, LogBase base,
                    const SupremizeOptions& opts) {
  require_finite(r, "tail_lb: R");
  const double rn = from_base(r, base);
  if (!(rn < std::log(static_cast<double>(pmf.size())))) {
    throw DomainError("tail_lb: R must be below log M");
  }
  if (pmf.is_deterministic()) {
    BoundReport out;
    out.value = kInf;
    out.warning = "deterministic source: the tail is empty";
    return out;
  }
  auto objective = [&](double rho) {
    const double h1 = entropy_at(pmf, 1.0 / (1.0 + rho));
    const double hr = rho > 1.0 ? entropy_at(pmf, 1.0 / rho) : 0.0;
    return rho * rn - rho * h1 - log_correction(rho, h1, hr, 1.0);
  };
  return in_base(supremize(objective, Interval{0.0, kInf, true}, opts), base);
}

CumulantBounds product_cumulant_bounds(const Pmf& single, std::size_t n,
                                       double rho, LogBase base,
                                       const SupremizeOptions& opts) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("product_cumulant_bounds: rho must be positive");
  }
  if (n == 0) throw DomainError("product_cumulant_bounds: n must be positive");
  const Pmf support = single.support_restriction();
  const CodeLengthLaw law = product_code_length_law(support.size(), n);
  const double nn = static_cast<double>(n);
  auto objective = [&](double beta) {
    return rho / beta *
           (entropy_at(support, beta / (beta + rho)) -
            log_codeword_sum_t(beta, law) / nn);
  };
  SupremizeOptions o = opts;
  o.anchors.push_back(1.0);
  CumulantBounds out;
  out.lower = in_base(supremize(objective, Interval{-rho, kInf, true}, o), base);
  const double h1 = entropy_at(support, 1.0 / (1.0 + rho));
  const double hr = rho > 1.0 ? entropy_at(support, 1.0 / rho) : 0.0;
  out.upper = to_base(rho * h1 + log_correction(rho, h1, hr, nn) / nn, base);
  return out;
}

ReliabilityReport reliability_lb(const Pmf& single, std::size_t n, double r,
                                 LogBase base, const SupremizeOptions& opts) {
  require_finite(r, "reliability_lb: R");
  if (n == 0) throw DomainError("reliability_lb: n must be positive");
  const double rn = from_base(r, base);
  if (!(rn < std::log(static_cast<double>(single.size())))) {
    throw DomainError("reliability_lb: R must be below log |A|");
  }
  ReliabilityReport out;
  if (single.is_deterministic()) {
    out.improved.value = kInf;
    out.baseline.value = kInf;
    out.improved.warning = "deterministic source";
    out.scaled_divergence = kInf;
    return out;
  }
  const double nn = static_cast<double>(n);
  auto baseline = [&](double rho) {
    return rho * (rn - entropy_at(single, 1.0 / (1.0 + rho)));
  };
  auto improved = [&](double rho) {
    const double h1 = entropy_at(single, 1.0 / (1.0 + rho));
    const double hr = rho > 1.0 ? entropy_at(single, 1.0 / rho) : 0.0;
    return rho * (rn - h1) - log_correction(rho, h1, hr, nn) / nn;
  };
  const Interval positive{0.0, kInf, true};
  out.baseline = supremize(baseline, positive, opts);
  SupremizeOptions o = opts;
  o.anchors.push_back(*out.baseline.optimizer_beta);
  out.improved = supremize(improved, positive, o);

  const double alpha = 1.0 / (1.0 + *out.baseline.optimizer_beta);
  out.scaled_divergence =
      to_base(renyi_divergence(scaled_pmf(single, alpha), single, Order::one()), base);
  out.baseline = in_base(out.baseline, base);
  out.improved = in_base(out.improved, base);
  return out;
}

}  // namespace renyi
