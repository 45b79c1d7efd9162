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

#include <cstdint>
#include <vector>

#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"
#include "powersum/report.hpp"

namespace powersum {

/// Default bound on the number of k-tuples a multiple sum may enumerate.
inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

// ---------------------------------------------------------------------------
// Sums

/// S_m(n) = 1^m + ... + n^m.
Integer power_sum(unsigned m, unsigned n);

/// Faulhaber's k-fold sums: S^0_m(n) = n^m, S^k_m(n) = sum_{q=1}^n S^{k-1}_m(q).
Integer iterated_sum(unsigned k, unsigned m, unsigned n);

/// S_m^{(k)}(n) = sum_q C(k, q)_n (k + q)^m, the t^m/m! coefficient of
/// (e^t + ... + e^{nt})^k.
Integer power_sum_high(unsigned m, unsigned k, unsigned n);

/// The same value through successive binomial convolutions
/// S_m^{(k)} = sum_q C(m, q) S_q^{(k-1)} S_{m-q}, seeded with S^{(1)} = S.
Integer power_sum_high_convolution(unsigned m, unsigned k, unsigned n);

/// sum_{q=0}^{k-1} C(k(n+1), q) S_m^{(k-q)}(n).
Integer binomial_sum(unsigned m, unsigned k, unsigned n);

/// The n = 1 case, sum_{q=0}^{k-1} C(2k, q) (k - q)^m. Zero for k = 0.
Integer binomial_sum_at_1(unsigned m, unsigned k);

// ---------------------------------------------------------------------------
// Polynomials in z

/// Bernoulli's form (1/(m+1)) sum_q (-1)^q C(m+1, q) B_q z^{m+1-q}.
Polynomial power_sum_poly(unsigned m);

/// (1/C(m+k,k)) sum_q (-1)^q C(m+k,q) B_q^{(k)} S(m+k-q,k) z^{m+k-q}, using
/// the Nörlund recurrence chain and the Stirling table.
Polynomial power_sum_high_poly_stirling_form(unsigned m, unsigned k);

/// z^k sum_q (-1)^q C(m,q) B_q^{(k)} B_{m-q}^{(-k)} z^{m-q}, using Nörlund
/// polynomials at k and -k.
Polynomial power_sum_high_poly_convolution_form(unsigned m, unsigned k);

/// Both forms above, cross-checked; Error(form_mismatch) if they differ.
Polynomial power_sum_high_poly(unsigned m, unsigned k);

/// Q_m^{(k)}(z), with z^k Q_m^{(k)} = power_sum_high_poly(m, k).
Polynomial q_poly(unsigned m, unsigned k);

/// sum_{q=0}^{k-1} C(k(z+1), q) power_sum_high_poly(m, k - q).
Polynomial binomial_sum_poly(unsigned m, unsigned k);

// ---------------------------------------------------------------------------
// Multiple sums over 1 <= q_1 <= ... <= q_k <= kn

/// c_q(k, n) for q = 1..kn, stored at index q - 1.
struct MultipleSumCoefficients {
    unsigned k = 0;
    unsigned n = 0;
    std::vector<Integer> c;

    [[nodiscard]] const Integer& operator[](unsigned q) const { return c.at(q - 1); }
    /// sum_q c_q q^m
    [[nodiscard]] Integer evaluate(unsigned m) const;
};

/// Number of tuples enumerated for (k, n): C(kn + k - 1, k).
Integer multiple_sum_tuple_count(unsigned k, unsigned n);

/// sum over tuples of sum_j (q_j - (j-1)n)^m for odd m; a zero base adds 0.
/// Error(instance_too_large) when the tuple count exceeds `cap`.
Integer multiple_sum_bruteforce(unsigned m, unsigned k, unsigned n, std::uint64_t cap = kDefaultEnumerationCap);

MultipleSumCoefficients multiple_sum_coefficients(unsigned k, unsigned n, std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Identity checks

/// Both sides of the Stirling-weighted recurrence for S_q^{(r)}(n), r <= k,
/// and its r = k specialization (-1)^m S(k+m, k) n^{m+k}.
VerificationReport recurrence_id_check(unsigned m, unsigned k, unsigned r, unsigned n);

/// Closed-form polynomial vs. direct sum vs. convolution vs. series oracle.
VerificationReport theorem1_consistency_check(unsigned m, unsigned k, unsigned n);

/// Multiplicity of z = -1 in Q_m^{(k)}: 1 for even m and m = 1, 2 for odd
/// m >= 3. Also checks Q'(-1) = -k B_m and, for m = 2, 3, the displayed
/// factorizations and their second rational root.
VerificationReport theorem2_report(unsigned m, unsigned k);

/// The first- and second-derivative convolution identities at z = -1, in
/// piecewise form and in their sign-unified forms.
VerificationReport lemma1_check(unsigned m, unsigned k);

/// Rational roots of S_m(z) lie in {0, -1, -1/2}; -1/2 is a simple root
/// exactly for even m.
VerificationReport kimura_root_check(unsigned m);

/// Multiple sum vs. binomial sum for odd m. Non-positive c_q(k, n) are
/// reported as notes only.
VerificationReport conjecture_relationsh_check(unsigned m, unsigned k, unsigned n, std::uint64_t cap = kDefaultEnumerationCap);

VerificationReport eq23_check(unsigned m, unsigned k);
VerificationReport eq241_check(unsigned m, unsigned k);
VerificationReport eq251_check(unsigned r, unsigned k);

/// binomial_sum_poly(1, k) == z(z+1)/2 * k * C(k(z+1)-1, k-1).
VerificationReport prop32_check(unsigned k);

/// C(k(z+1)-1, k-1) == (1/k) sum_q (k-q) C(k(z+1), q) z^{k-q-1}.
VerificationReport lemma2_check(unsigned k);

/// Odd m gives the odd case, even m >= 2 the even case, and re-expansion
/// reproduces S_m(z).
VerificationReport faulhaber_form_check(unsigned m);

/// F_r(0) = |G_{2r}|, G_{2r} against the series oracle, the P_r relation and
/// the Dumont-Foata specialization at x = y = 1.
VerificationReport gandhi_genocchi_check(unsigned r);

/// Symmetry of F_r(x, y, z) under all permutations of the variables.
VerificationReport dumont_foata_symmetry_check(unsigned r);

}  // namespace powersum
