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

#include "renyi/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace renyi {

namespace {

constexpr double kTotalTolerance = 1e-12;

void check_masses(const std::vector<double>& masses, const char* what) {
  if (masses.empty()) throw ValidationError(std::string(what) + ": empty");
  for (double m : masses) {
    if (!std::isfinite(m)) {
      throw ValidationError(std::string(what) + ": non-finite mass");
    }
    if (m < 0.0) throw ValidationError(std::string(what) + ": negative mass");
  }
}

double normalize(std::vector<double>& masses, const char* what) {
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (std::abs(total - 1.0) > kTotalTolerance) {
    throw ValidationError(std::string(what) + ": masses sum to " +
                          std::to_string(total));
  }
  for (double& m : masses) m /= total;
  return total;
}

}  // namespace

double log_of_base(LogBase base) {
  switch (base) {
    case LogBase::bits:
      return std::log(2.0);
    case LogBase::nats:
      return 1.0;
    case LogBase::dits:
      return std::log(10.0);
  }
  return 1.0;
}

double to_base(double nats, LogBase base) { return nats / log_of_base(base); }

double from_base(double value, LogBase base) {
  return value * log_of_base(base);
}

LogBase parse_log_base(const std::string& name) {
  if (name == "bits" || name == "2") return LogBase::bits;
  if (name == "nats" || name == "e") return LogBase::nats;
  if (name == "dits" || name == "10") return LogBase::dits;
  throw ValidationError("unknown log base '" + name + "'");
}

std::string log_base_name(LogBase base) {
  switch (base) {
    case LogBase::bits:
      return "bits";
    case LogBase::nats:
      return "nats";
    case LogBase::dits:
      return "dits";
  }
  return "nats";
}

Order::Order(double value) : value_(value), tag_(Tag::finite) {
  if (std::isnan(value)) throw ValidationError("order is NaN");
  if (value == 0.0) {
    tag_ = Tag::zero;
  } else if (value == 1.0) {
    tag_ = Tag::one;
  } else if (std::isinf(value)) {
    tag_ = value > 0 ? Tag::plus_infinity : Tag::minus_infinity;
  }
}

Order Order::infinity() {
  return Order(std::numeric_limits<double>::infinity());
}

Order Order::minus_infinity() {
  return Order(-std::numeric_limits<double>::infinity());
}

Pmf::Pmf(std::vector<double> masses) : masses_(std::move(masses)) {
  check_masses(masses_, "pmf");
  normalize(masses_, "pmf");
}

Pmf Pmf::from_weights(std::vector<double> weights) {
  check_masses(weights, "weights");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw ValidationError("weights: zero total");
  for (double& w : weights) w /= total;
  return Pmf(std::move(weights));
}

Pmf Pmf::equiprobable(std::size_t m) {
  if (m == 0) throw ValidationError("equiprobable: M must be positive");
  return Pmf(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Pmf Pmf::deterministic(std::size_t m, std::size_t at) {
  if (m == 0 || at >= m) throw ValidationError("deterministic: bad index");
  std::vector<double> v(m, 0.0);
  v[at] = 1.0;
  return Pmf(std::move(v));
}

Pmf Pmf::geometric(double a, std::size_t m) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ValidationError("geometric: need a > 0");
  }
  if (m == 0) throw ValidationError("geometric: M must be positive");
  std::vector<double> w(m);
  double p = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    w[k] = p;
    p *= a;
  }
  return from_weights(std::move(w));
}

double Pmf::p_max() const {
  return *std::max_element(masses_.begin(), masses_.end());
}

double Pmf::p_min_positive() const {
  double best = std::numeric_limits<double>::infinity();
  for (double m : masses_) {
    if (m > 0.0) best = std::min(best, m);
  }
  return best;
}

std::size_t Pmf::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(masses_.begin(), masses_.end(),
                    [](double m) { return m > 0.0; }));
}

std::vector<double> Pmf::sorted_descending() const {
  std::vector<double> v = masses_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Pmf Pmf::support_restriction() const {
  std::vector<double> v;
  v.reserve(masses_.size());
  for (double m : masses_) {
    if (m > 0.0) v.push_back(m);
  }
  return from_weights(std::move(v));
}

Pmf convolved_sum(const Pmf& single, std::size_t n) {
  if (n == 0) throw ValidationError("convolved_sum: n must be positive");
  std::vector<double> acc(single.masses().begin(), single.masses().end());
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<double> next(acc.size() + single.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < single.size(); ++j) {
        next[i + j] += acc[i] * single[j];
      }
    }
    acc = std::move(next);
  }
  return Pmf::from_weights(std::move(acc));
}

Pmf product_pmf(const Pmf& single, std::size_t n) {
  if (n == 0) throw ValidationError("product_pmf: n must be positive");
  const double outcomes =
      std::pow(static_cast<double>(single.size()), static_cast<double>(n));
  if (outcomes > static_cast<double>(1u << 24)) {
    throw DomainError("product_pmf: too many outcomes to materialize");
  }
  std::vector<double> acc{1.0};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next;
    next.reserve(acc.size() * single.size());
    for (double a : acc) {
      for (double s : single.masses()) next.push_back(a * s);
    }
    acc = std::move(next);
  }
  return Pmf::from_weights(std::move(acc));
}

JointPmf::JointPmf(std::size_t rows, std::size_t cols,
                   std::vector<double> masses)
    : rows_(rows), cols_(cols), masses_(std::move(masses)) {
  if (rows == 0 || cols == 0) throw ValidationError("joint: empty matrix");
  if (masses_.size() != rows * cols) {
    throw ValidationError("joint: size does not match rows x cols");
  }
  check_masses(masses_, "joint");
  normalize(masses_, "joint");
}

JointPmf JointPmf::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("joint: no rows");
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ValidationError("joint: ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return JointPmf(rows.size(), cols, std::move(flat));
}

Pmf JointPmf::marginal_x() const {
  std::vector<double> px(rows_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) px[x] += (*this)(x, y);
  }
  return Pmf::from_weights(std::move(px));
}

std::vector<double> JointPmf::marginal_y() const {
  std::vector<double> py(cols_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) py[y] += (*this)(x, y);
  }
  return py;
}

Pmf JointPmf::conditional(std::size_t y) const {
  if (y >= cols_) throw ValidationError("joint: column out of range");
  std::vector<double> slice(rows_);
  for (std::size_t x = 0; x < rows_; ++x) slice[x] = (*this)(x, y);
  const double total = std::accumulate(slice.begin(), slice.end(), 0.0);
  if (!(total > 0.0)) {
    throw DomainError("joint: conditional on a zero-probability column");
  }
  return Pmf::from_weights(std::move(slice));
}

std::size_t JointPmf::slice_support(std::size_t y) const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < rows_; ++x) n += (*this)(x, y) > 0.0;
  return n;
}

Ranking ranking(const Pmf& pmf) {
  Ranking r;
  r.order.resize(pmf.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return pmf[a] > pmf[b]; });
  r.guess_of.resize(pmf.size());
  for (std::size_t k = 0; k < r.order.size(); ++k) r.guess_of[r.order[k]] = k + 1;
  return r;
}

}  // namespace renyi
