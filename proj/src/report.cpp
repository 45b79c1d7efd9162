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

#include "powersum/report.hpp"

namespace powersum {

std::string format_params(const Params& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ' ';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

bool VerificationReport::expect_true(const std::string& check, const Params& params, bool condition, const std::string& detail) {
    if (condition) {
        ++pass_count;
        return true;
    }
    failures.push_back({check, params, detail.empty() ? "false" : detail, "true"});
    return false;
}

void VerificationReport::merge(const VerificationReport& other) {
    pass_count += other.pass_count;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace powersum
