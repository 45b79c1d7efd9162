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

#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination on a square system A x = b.
/// Throws Error(singular) when A is not invertible, std::invalid_argument on
/// shape mismatch.
std::vector<Rational> solve_linear_system(Matrix rows, std::vector<Rational> rhs);

/// Exact solution of an overdetermined system (rows >= columns).
/// Error(singular) when the columns are dependent (solution not unique),
/// Error(inconsistent) when no exact solution exists.
std::vector<Rational> solve_consistent_system(Matrix rows, std::vector<Rational> rhs);

}  // namespace powersum
