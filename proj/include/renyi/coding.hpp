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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "renyi/core.hpp"
#include "renyi/numerics.hpp"

namespace renyi {

// Optimal one-to-one binary codes (no prefix condition): the k-th most
// likely outcome gets a codeword of floor(log2 k) bits.

/// m = floor(log2(1 + M)) and delta = log2(1 + M) - m for an alphabet of
/// size M. The product form never builds |A|^n.
struct CodeLengthLaw {
  double m = 0.0;
  double delta = 0.0;
};

CodeLengthLaw code_length_law(std::uint64_t alphabet_size);
CodeLengthLaw product_code_length_law(std::size_t letters, std::size_t n);

/// floor(log2 k) for k = 1..M.
std::vector<unsigned> codeword_lengths(std::size_t alphabet_size);

/// t(beta, M) = sum_x 2^{-beta l(x)} for the optimal code.
double codeword_sum_t(double beta, std::uint64_t alphabet_size);
/// log t in nats, evaluated from the law alone.
double log_codeword_sum_t(double beta, const CodeLengthLaw& law);

/// Lambda(rho) = log E[2^{rho l(X)}] for the optimal code.
double exact_cumulant(const Pmf& pmf, double rho, LogBase base = LogBase::nats);

/// A type class of length-n strings: letter counts, the probability of
/// each member and the number of members.
struct TypeClass {
  std::vector<unsigned> counts;
  double log_prob = 0.0;
  double size = 0.0;
};

/// Type classes of positive probability, most likely first.
std::vector<TypeClass> type_classes(const Pmf& single, std::size_t n);

/// (1/n) log E[2^{rho l(X^n)}] for an i.i.d. source, summed over type
/// classes. Needs |A|^n <= 2^53.
double exact_product_cumulant(const Pmf& single, std::size_t n, double rho,
                              LogBase base = LogBase::nats);

/// (1/n) log 1/P[l(X^n)/n >= R] with R in the given base; +inf if the
/// event is empty. Needs |A|^n <= 2^53.
double exact_product_reliability(const Pmf& single, std::size_t n, double r,
                                 LogBase base = LogBase::nats);

/// P[l(X) > R] with R in the given base.
double exact_tail_probability(const Pmf& pmf, double r,
                              LogBase base = LogBase::nats);

struct CumulantBounds {
  BoundReport lower;
  std::optional<double> upper;  // only for rho > 0
};

/// Sandwich of Lambda(rho)/rho. The lower side holds for every rho != 0.
CumulantBounds cumulant_bounds(const Pmf& pmf, double rho,
                               LogBase base = LogBase::nats,
                               const SupremizeOptions& opts = {});

/// Earlier reference sandwich of Lambda(rho)/rho:
/// H_{1/(1+rho)} - log log2(1+M) and H_{1/(1+rho)}, with the
/// H_inf form for rho <= -1.
std::pair<double, double> reference_cumulant_bounds(const Pmf& pmf, double rho,
                                                    LogBase base = LogBase::nats);

/// Lower bound on log 1/P[l(X) > R] for R < log M.
BoundReport tail_lb(const Pmf& pmf, double r, LogBase base = LogBase::nats,
                    const SupremizeOptions& opts = {});

/// Bounds on the normalized cumulant Lambda_n(rho) of an i.i.d. source.
CumulantBounds product_cumulant_bounds(const Pmf& single, std::size_t n,
                                       double rho, LogBase base = LogBase::nats,
                                       const SupremizeOptions& opts = {});

struct ReliabilityReport {
  BoundReport improved;
  BoundReport baseline;        // sup_rho {rho R - rho H_{1/(1+rho)}}
  double scaled_divergence;    // D(X_alpha || X) at the baseline optimizer
};

/// Lower bounds on E_n(R) for R < log |A|; +inf for a deterministic source.
ReliabilityReport reliability_lb(const Pmf& single, std::size_t n, double r,
                                 LogBase base = LogBase::nats,
                                 const SupremizeOptions& opts = {});

}  // namespace renyi
