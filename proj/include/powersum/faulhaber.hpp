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

#include <optional>

#include "powersum/polynomial.hpp"

namespace powersum {

/// A polynomial p(z) rewritten in w = z(z+1):
///   odd case:  p(z) = g(w)
///   even case: p(z) = (2z + 1) g(w)
struct FaulhaberForm {
    enum class Kind { odd_case, even_case };

    Kind kind;
    Polynomial w_polynomial;

    /// Re-expands the form as a polynomial in z.
    [[nodiscard]] Polynomial expand() const;
};

/// w = z(z+1) as a polynomial in z.
Polynomial faulhaber_w();

/// Tries the odd case first, then the even case. Throws
/// Error(not_representable) when neither holds and std::invalid_argument on
/// the zero polynomial.
FaulhaberForm to_faulhaber_form(const Polynomial& p);

/// g with p(z) = g(z(z+1)), if one exists.
std::optional<Polynomial> as_polynomial_in_w(const Polynomial& p);

}  // namespace powersum
