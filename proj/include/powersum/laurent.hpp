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
#include <optional>
#include <string>
#include <string_view>

#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"

namespace powersum {

/// Finite-support Laurent polynomial in one variable; exponents may be
/// negative. Zero coefficients are never stored.
class LaurentPolynomial {
  public:
    using Terms = std::map<int, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Terms& terms);
    explicit LaurentPolynomial(const Polynomial& p);

    static LaurentPolynomial monomial(const Rational& c, int exponent);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(int exponent) const;
    /// Lowest and highest stored exponents; nullopt for zero.
    [[nodiscard]] std::optional<int> min_exponent() const;
    [[nodiscard]] std::optional<int> max_exponent() const;

    /// Throws Error(evaluation_at_zero) for x = 0, even if no negative
    /// exponent is present.
    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// Multiply by x^shift.
    [[nodiscard]] LaurentPolynomial shifted(int shift) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const Rational& c);

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
    friend LaurentPolynomial operator*(LaurentPolynomial lhs, const Rational& c) { return lhs *= c; }
    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial rhs) { return rhs *= c; }
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    [[nodiscard]] std::string to_text(std::string_view variable = "w") const;

  private:
    void add_term(int exponent, const Rational& c);

    Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& a, unsigned exponent);

/// Substitutes the variable by the polynomial `wpoly`. Requires every
/// exponent to be non-negative; otherwise throws Error(negative_exponent).
Polynomial substitute(const LaurentPolynomial& a, const Polynomial& wpoly);

}  // namespace powersum
