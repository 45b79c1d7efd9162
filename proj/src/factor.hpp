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

#include <map>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum::detail {

// Prime factorization of |n| (n != 0) as prime -> exponent.
std::map<Integer, unsigned> factorize(const Integer& n);

// All positive divisors of |n|, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace powersum::detail
