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

// Brute-force reference computations. Deliberately naive: plain sums,
// explicit enumeration, no log-domain tricks. Nothing here calls into the
// bound code, so the two can be checked against each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace renyi::oracle {

using Matrix = std::vector<std::vector<double>>;  // rows = x, columns = y

/// E[g^rho] for the ranking guesser, by sorting and summing.
double guessing_moment(std::span<const double> p, double rho);
/// sum_y P_Y(y) E[g^rho | Y = y]; rows index x.
double conditional_guessing_moment(const Matrix& joint, double rho);
double map_error(const Matrix& joint);

/// Renyi entropy in nats from the defining sum over the support.
/// alpha = 1 gives the Shannon entropy.
double renyi_entropy(std::span<const double> p, double alpha);

struct Bracket {
  double lo;
  double hi;
};

/// zeta(s) bracketed by the first n terms plus integral tail bounds.
Bracket zeta_partial_sum(double s, std::uint64_t n);

/// sum_{i=1}^m i^{-beta}.
double harmonic_sum(double beta, std::uint64_t m);

/// sum_{k=1}^m 2^{-beta floor(log2 k)}.
double codeword_sum(double beta, std::uint64_t m);

/// log E[2^{rho floor(log2 K)}] in nats, K the probability rank.
double cumulant(std::span<const double> p, double rho);

/// Every string of length n, probabilities in lexicographic order.
std::vector<double> product_probabilities(std::span<const double> single,
                                          std::size_t n);

/// (1/n) log E[2^{rho l(X^n)}] in nats by listing all |A|^n strings.
double product_cumulant(std::span<const double> single, std::size_t n,
                        double rho);

/// (1/n) log2 1/P[l(X^n) >= n r_bits]; +inf for an empty event.
double product_reliability(std::span<const double> single, std::size_t n,
                           double r_bits);

/// P[l(X) > r_bits].
double tail_probability(std::span<const double> p, double r_bits);

/// (1/(1-alpha)) min log sum mu^alpha, the min taken over a grid of
/// sub-probability vectors: mu(x) in {0, step, 2 step, ...} plus P(x) itself, with
/// sum mu >= 1 - eps. Exhaustive, so keep M small.
struct SmoothGridResult {
  double value;
  std::vector<double> mu;
};
SmoothGridResult smooth_entropy_grid(std::span<const double> p, double eps,
                                     double alpha, double step);

/// Minimum of (1/rho) log2 E[2^{rho l}] over all deterministic encoders,
/// found by listing set partitions of the alphabet. Each block shares one
/// codeword and decodes to its most likely member. M <= 10.
struct EncoderOptimum {
  double average_error;  // feasible: P[error] <= eps
  double maximal_error;  // feasible: no error on the support
  std::size_t partitions = 0;
};
EncoderOptimum encoder_enumeration(std::span<const double> p, double eps,
                                   double rho);

/// det of the matrix with entries ln^k(i) (k = 0..m-1, i = 1..m), by
/// long double elimination. m <= 12.
double log_vandermonde_determinant(std::size_t m);

/// First and second moment upper bounds of Boztas, closed forms.
double boztas_first_moment(std::span<const double> p);
double boztas_second_moment(std::span<const double> p);

}  // namespace renyi::oracle
