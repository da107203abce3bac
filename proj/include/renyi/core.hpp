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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace renyi {

/// Malformed input: bad masses, wrong sizes, non-finite numbers.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The objective of a bound is non-finite over the whole search interval.
class UndefinedBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LogBase { bits, nats, dits };

double log_of_base(LogBase base);
/// Converts a value in nats to the requested base.
double to_base(double nats, LogBase base);
/// Converts a value in the given base to nats.
double from_base(double value, LogBase base);
LogBase parse_log_base(const std::string& name);
std::string log_base_name(LogBase base);

/// Order of an information measure. Finite reals plus the tagged
/// points 0, 1 and +/-infinity, which use their limiting formulas.
class Order {
 public:
  enum class Tag { finite, zero, one, plus_infinity, minus_infinity };

  Order(double value);  // NOLINT: implicit on purpose

  static Order zero() { return Order(0.0); }
  static Order one() { return Order(1.0); }
  static Order infinity();
  static Order minus_infinity();

  Tag tag() const { return tag_; }
  double value() const { return value_; }
  bool is_special() const { return tag_ != Tag::finite; }

 private:
  double value_;
  Tag tag_;
};

/// Probability mass function on {0, ..., M-1}.
/// Totals within 1e-12 of one are renormalized; anything else is rejected.
class Pmf {
 public:
  explicit Pmf(std::vector<double> masses);

  static Pmf from_weights(std::vector<double> weights);
  static Pmf equiprobable(std::size_t m);
  static Pmf deterministic(std::size_t m, std::size_t at = 0);
  /// P(k) proportional to a^(k-1), k = 1..M.
  static Pmf geometric(double a, std::size_t m);

  std::size_t size() const { return masses_.size(); }
  double operator[](std::size_t i) const { return masses_[i]; }
  std::span<const double> masses() const { return masses_; }

  double p_max() const;
  double p_min_positive() const;
  std::size_t support_size() const;
  bool has_zero_mass() const { return support_size() < size(); }
  bool is_deterministic() const { return support_size() == 1; }
  /// Masses in non-increasing order.
  std::vector<double> sorted_descending() const;
  /// The pmf restricted to its support (order kept).
  Pmf support_restriction() const;

 private:
  std::vector<double> masses_;
};

/// Pmf of U_1 + ... + U_n for i.i.d. U_i on {0, ..., |A|-1}.
Pmf convolved_sum(const Pmf& single, std::size_t n);

/// Pmf of the n-fold product, in lexicographic order. Refuses more than
/// 2^24 outcomes.
Pmf product_pmf(const Pmf& single, std::size_t n);

/// Joint pmf P_XY stored with rows indexed by x and columns by y.
class JointPmf {
 public:
  JointPmf(std::size_t rows, std::size_t cols, std::vector<double> masses);
  static JointPmf from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t x, std::size_t y) const {
    return masses_[x * cols_ + y];
  }

  Pmf marginal_x() const;
  /// Column sums. Zero entries are allowed here.
  std::vector<double> marginal_y() const;
  /// P(. | Y = y). Throws DomainError on a zero-probability column.
  Pmf conditional(std::size_t y) const;
  /// Number of x with P(x, y) > 0.
  std::size_t slice_support(std::size_t y) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> masses_;
};

/// A guessing order. guess_of[x] is the 1-based guess at which x is tried.
struct Ranking {
  std::vector<std::size_t> guess_of;
  std::vector<std::size_t> order;  // order[k-1] = outcome guessed k-th
};

/// Non-increasing mass order, ties broken by smaller index.
Ranking ranking(const Pmf& pmf);

/// Result of a supremization-based bound.
struct BoundReport {
  double value = 0.0;
  std::optional<double> optimizer_beta;
  int grid_points = 0;
  bool refined = false;
  std::optional<std::string> warning;
};

}  // namespace renyi
