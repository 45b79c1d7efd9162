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
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Dense univariate polynomial over the rationals. Index i of the coefficient
/// list holds the coefficient of x^i; the leading coefficient is never zero
/// (the zero polynomial has no coefficients).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// The identity polynomial x.
    static Polynomial identity();
    /// a*x + b
    static Polynomial linear(const Rational& a, const Rational& b);

    /// Parses the JSON coefficient-array form produced by to_json().
    static Polynomial from_json(std::string_view text);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rational coefficient(std::size_t i) const;
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

    [[nodiscard]] Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator/(Polynomial lhs, const Rational& c) { return lhs /= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// JSON array of canonical rational strings, index = exponent. The zero
    /// polynomial serializes as [].
    [[nodiscard]] std::string to_json() const;
    /// Human-readable form, highest power first, e.g. "2*k^2 + 3*k + 1".
    [[nodiscard]] std::string to_text(std::string_view variable = "z") const;

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// p(q(x)), by Horner's scheme over polynomials.
Polynomial compose(const Polynomial& p, const Polynomial& q);

Polynomial derivative(const Polynomial& p);

/// Euclidean division; throws Error(division_by_zero) for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Largest m such that (x - root)^m divides p, by repeated synthetic division.
/// Throws Error(zero_polynomial) for p = 0.
int root_multiplicity(const Polynomial& p, const Rational& root);

/// Every rational root of p, by the rational-root theorem on the primitive
/// integer polynomial. Throws Error(zero_polynomial) for p = 0.
std::set<Rational> rational_roots(const Polynomial& p);

/// C(k(z+1), q) as a polynomial of degree q in z.
Polynomial binomial_poly(long k, long q);

/// C(k(z+1) - 1, k - 1) as a polynomial of degree k - 1 in z; requires k >= 1.
Polynomial central_binomial_poly(long k);

/// C(x + m, m) as a polynomial of degree m in x.
Polynomial rising_binomial_poly(long m);

}  // namespace powersum
