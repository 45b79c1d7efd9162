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

#include <array>
#include <map>
#include <string>

#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"

namespace powersum {

/// Sparse polynomial in x, y, z. Zero coefficients are never stored.
class TrivariatePolynomial {
  public:
    using Exponents = std::array<unsigned, 3>;
    using Terms = std::map<Exponents, Rational>;

    TrivariatePolynomial() = default;

    static TrivariatePolynomial constant(const Rational& c);
    static TrivariatePolynomial monomial(const Rational& c, Exponents exponents);
    /// The coordinate polynomial x (0), y (1) or z (2).
    static TrivariatePolynomial variable(unsigned index);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Exponents& exponents) const;

    [[nodiscard]] Rational operator()(const Rational& x, const Rational& y, const Rational& z) const;

    /// Substitutes z -> z + shift.
    [[nodiscard]] TrivariatePolynomial shift_z(const Rational& shift) const;
    /// Reorders variables: result(v0, v1, v2) = this(v[order[0]], v[order[1]], v[order[2]]).
    [[nodiscard]] TrivariatePolynomial permuted(const std::array<unsigned, 3>& order) const;
    /// Fixes x and y, leaving a polynomial in z.
    [[nodiscard]] Polynomial specialize_xy(const Rational& x, const Rational& y) const;

    TrivariatePolynomial& operator+=(const TrivariatePolynomial& rhs);
    TrivariatePolynomial& operator-=(const TrivariatePolynomial& rhs);
    friend TrivariatePolynomial operator+(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a += b; }
    friend TrivariatePolynomial operator-(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a -= b; }
    friend TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b);
    friend bool operator==(const TrivariatePolynomial&, const TrivariatePolynomial&) = default;

    [[nodiscard]] std::string to_text() const;

  private:
    void add_term(const Exponents& e, const Rational& c);

    Terms terms_;
};

}  // namespace powersum
