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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "renyi/core.hpp"

namespace renyi::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,
  kMismatch = 3,
};

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// One line of a reproduction table. Reference values carry the number of
/// printed decimals; the check tolerance is half a unit in the last one.
/// decimals < 0 marks a closed-form reference checked to 1e-9.
struct ReproRow {
  std::string quantity;
  std::optional<double> reference;
  int decimals = 3;
  double computed = 0.0;

  bool has_reference() const { return reference.has_value(); }
  double tolerance() const;
  bool ok() const;
};

std::vector<std::string> reproduce_ids();
/// Throws ValidationError on an unknown id.
std::vector<ReproRow> reproduce(const std::string& id);

// Input helpers, exposed for tests.

/// "0.25", "1/4", "inf", "-inf".
double parse_number(const std::string& text);
/// "lo:hi:k" gives k evenly spaced points; a plain number gives one.
std::vector<double> parse_grid(const std::string& text);
/// An existing file (one mass per line, '#' comments) or an inline list
/// "4/7,2/7,1/7". Totals more than 1e-9 away from 1 are rejected.
Pmf parse_pmf(const std::string& spec);
/// "a=0.9,M=32" or "0.9,32".
Pmf parse_geometric(const std::string& spec);
/// A builtin name (diagonal-4x4, circulant-4x4), a CSV file, or inline
/// rows separated by ';'.
JointPmf parse_matrix(const std::string& spec);

std::string format_number(double v);

}  // namespace renyi::cli
