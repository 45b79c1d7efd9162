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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Named integer parameters of one grid point, in declaration order.
using Params = std::vector<std::pair<std::string, long>>;

std::string format_params(const Params& params);

/// Outcome of checking one identity over a set of parameter points. The
/// report passes iff no failure was recorded. Left- and right-hand sides are
/// kept as exact canonical strings.
struct VerificationReport {
    struct Failure {
        std::string check;
        Params params;
        std::string lhs;
        std::string rhs;
    };

    std::string identity;
    std::string grid;
    std::size_t pass_count = 0;
    std::vector<Failure> failures;
    /// Findings that are reported but do not fail the identity.
    std::vector<std::string> notes;

    VerificationReport() = default;
    explicit VerificationReport(std::string name) : identity(std::move(name)) {}

    [[nodiscard]] bool passed() const { return failures.empty(); }
    [[nodiscard]] std::size_t total() const { return pass_count + failures.size(); }

    /// Records lhs == rhs as one check.
    template <class T>
    bool expect_equal(const std::string& check, const Params& params, const T& lhs, const T& rhs) {
        if (lhs == rhs) {
            ++pass_count;
            return true;
        }
        failures.push_back({check, params, stringify(lhs), stringify(rhs)});
        return false;
    }

    bool expect_true(const std::string& check, const Params& params, bool condition, const std::string& detail = {});

    void merge(const VerificationReport& other);

  private:
    static std::string stringify(const Rational& v) { return v.to_string(); }
    static std::string stringify(const Integer& v) { return v.get_str(); }
    static std::string stringify(long v) { return std::to_string(v); }
    static std::string stringify(int v) { return std::to_string(v); }
    static std::string stringify(const std::string& v) { return v; }
    template <class T>
    static std::string stringify(const T& v) {
        return v.to_json();
    }
};

}  // namespace powersum
