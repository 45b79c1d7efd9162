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

#include "powersum/faulhaber.hpp"

#include <stdexcept>
#include <vector>

#include "powersum/error.hpp"

namespace powersum {

Polynomial faulhaber_w() { return Polynomial{0, 1, 1}; }

Polynomial FaulhaberForm::expand() const {
    Polynomial g = compose(w_polynomial, faulhaber_w());
    if (kind == Kind::even_case) g *= Polynomial::linear(2, 1);
    return g;
}

std::optional<Polynomial> as_polynomial_in_w(const Polynomial& p) {
    // Peel off one digit per step in the basis {1, w, w^2, ...}: the
    // remainder mod z(z+1) must be a constant.
    const Polynomial w = faulhaber_w();
    std::vector<Rational> digits;
    Polynomial rest = p;
    while (!rest.is_zero()) {
        auto [quot, rem] = divmod(rest, w);
        if (rem.degree() >= 1) return std::nullopt;
        digits.push_back(rem.coefficient(0));
        rest = std::move(quot);
    }
    return Polynomial(std::move(digits));
}

FaulhaberForm to_faulhaber_form(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("to_faulhaber_form: zero polynomial");
    if (auto g = as_polynomial_in_w(p)) return {FaulhaberForm::Kind::odd_case, std::move(*g)};
    auto [quot, rem] = divmod(p, Polynomial::linear(2, 1));
    if (rem.is_zero()) {
        if (auto g = as_polynomial_in_w(quot)) return {FaulhaberForm::Kind::even_case, std::move(*g)};
    }
    throw Error(Errc::not_representable, "neither g(z(z+1)) nor (2z+1) g(z(z+1))");
}

}  // namespace powersum
