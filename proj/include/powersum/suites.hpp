/*
   Copyright 2026 The Powersum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/powersums.hpp"
#include "powersum/report.hpp"

namespace powersum {

/// Parses "a..b" (inclusive), "a,b,c" or a mix such as "1,4..6". Values are
/// returned sorted and de-duplicated. Throws std::invalid_argument on
/// malformed or empty input and on a..b with a > b.
std::vector<long> parse_range(std::string_view text);

/// Named axes of a parameter grid, each a sorted list of values.
using Grid = std::map<std::string, std::vector<long>>;

/// A verification suite: the axes it reads, their default values, an
/// optional filter on points, and the per-point check.
struct Suite {
    std::string name;
    std::vector<std::string> axes;
    Grid defaults;
    std::function<bool(const std::vector<long>&)> accepts;
    std::function<VerificationReport(const std::vector<long>&)> check;
};

const std::vector<Suite>& verification_suites();
const Suite* find_suite(std::string_view name);

/// The multiple-sum conjecture as a suite over (m, k, n), odd m only.
Suite conjecture_suite(std::uint64_t cap);

struct PointResult {
    Params params;
    VerificationReport report;
    /// Set when the check threw instead of returning.
    std::optional<std::string> error;

    [[nodiscard]] bool passed() const { return !error && report.passed(); }
};

/// Points of the grid in lexicographic order of the suite's axes, after the
/// suite's filter. Axes missing from `grid` take the suite default.
std::vector<std::vector<long>> expand_grid(const Suite& suite, const Grid& grid);

/// Runs the suite over the points on `workers` threads. Results come back in
/// point order whatever the worker count. Error(instance_too_large) is
/// rethrown; other exceptions are recorded on the point.
std::vector<PointResult> run_suite(const Suite& suite, const std::vector<std::vector<long>>& points, unsigned workers);

/// Folds point results into one report named after the suite.
VerificationReport summarize(const Suite& suite, const std::vector<PointResult>& results);

}  // namespace powersum
