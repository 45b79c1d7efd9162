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
#include <string>
#include <utility>

#include "powersum/laurent.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"
#include "powersum/report.hpp"

namespace powersum {

/// F(w, k) = sum_j c_j(w) k^j with Laurent coefficients c_j in w.
struct BivariateF {
    unsigned r = 0;
    std::map<unsigned, LaurentPolynomial> coefficients;

    /// The Laurent polynomial in w obtained by fixing k.
    [[nodiscard]] LaurentPolynomial at_k(const Rational& k) const;
    /// The polynomial in k obtained by fixing w (w != 0).
    [[nodiscard]] Polynomial at_w(const Rational& w) const;
    [[nodiscard]] Rational operator()(const Rational& w, const Rational& k) const;
    /// -1 for the zero function.
    [[nodiscard]] int degree_in_k() const;
    /// Lowest w-exponent over all coefficients; 0 for the zero function.
    [[nodiscard]] int min_w_exponent() const;
    [[nodiscard]] std::string to_text() const;

    friend bool operator==(const BivariateF&, const BivariateF&) = default;
};

/// Coefficients F^{(q)}_{r,j}, keyed by (q, j).
using AnsatzCoefficients = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Builds sum_q w^{-q} sum_j F^{(q)}_{r,j} ((w+1)/w)^{r-j-3q-1} k^j.
/// Throws std::invalid_argument for a key outside 0 <= j <= r-3q-1.
BivariateF from_ansatz(unsigned r, const AnsatzCoefficients& coefficients);

/// The six published F_r(w, k), in ansatz form. Error(not_tabulated) for r
/// outside 1..6.
AnsatzCoefficients tabulated_ansatz(unsigned r);
BivariateF tabulated_F(unsigned r);

/// (-w/2)^{r+1} F(w, -k) k^2 C(k(z+1)-1, k-1) with w = z(z+1). Throws
/// Error(denominator_not_cleared) if a negative power of w survives.
Polynomial eq36_rhs(const BivariateF& f, unsigned k);

/// Compares eq36_rhs(f, k) with binomial_sum_poly(2r+1, k), and F(2, k)
/// with the Gandhi polynomial at k.
VerificationReport eq36_check(const BivariateF& f, unsigned k);

/// eq36_check of tabulated_F(r) for k = 1..k_max, plus the structural
/// invariants (degree r-1 in k, w-exponents >= -(r-1)).
VerificationReport eq36_verify(unsigned r, unsigned k_max);

struct Reconstruction {
    unsigned r = 0;
    AnsatzCoefficients coefficients;
    BivariateF f;
    /// Fitting used k = 1..fit_k_max.
    unsigned fit_k_max = 0;
    unsigned check_k_max = 0;
    /// Exact comparison for k = 1..check_k_max.
    VerificationReport verification;
};

/// Solves for the ansatz coefficients by equating z-coefficients of both
/// sides of eq36_rhs for k = 1, 2, ..., adding values of k until
/// the system has a unique solution. Throws Error(inconsistent) when the
/// ansatz admits no solution and Error(singular) if no unique solution is
/// found within r + 8 values of k. The result is checked for every k up to
/// max(check_bound, fit_k_max + 2).
Reconstruction eq36_reconstruct(unsigned r, unsigned check_bound = 10);

}  // namespace powersum
