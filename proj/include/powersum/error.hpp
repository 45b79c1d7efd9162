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

#include <stdexcept>
#include <string>
#include <string_view>

namespace powersum {

enum class Errc {
    not_representable,
    singular,
    inconsistent,
    interpolation_inconsistent,
    non_unit_divisor,
    non_integer,
    form_mismatch,
    instance_too_large,
    not_tabulated,
    denominator_not_cleared,
    negative_exponent,
    zero_polynomial,
    division_by_zero,
    evaluation_at_zero,
};

std::string_view to_string(Errc code) noexcept;

// Mathematical failure with a stable, machine-checkable code. Precondition
// violations on plain arguments throw std::invalid_argument instead.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)), code_(code) {}
    explicit Error(Errc code) : Error(code, "") {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace powersum
