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
#include <mutex>
#include <utility>
#include <vector>

#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"
#include "powersum/report.hpp"
#include "powersum/trivariate.hpp"

namespace powersum {

/// Memo tables for the recurrence-defined families. Lookups return copies, so
/// callers never see a partially built table. Entries are never evicted.
class SequenceCache {
  public:
    SequenceCache() = default;
    SequenceCache(const SequenceCache&) = delete;
    SequenceCache& operator=(const SequenceCache&) = delete;

    /// Process-wide instance used by the free functions below.
    static SequenceCache& shared();

    Rational bernoulli(unsigned m);
    Integer stirling2(unsigned n, unsigned k);
    Polynomial norlund_poly(unsigned m);
    /// C(k, q)_n for q = 0..k(n-1).
    std::vector<Integer> poly_coefficient_row(unsigned k, unsigned n);

  private:
    std::mutex bernoulli_mutex_;
    std::vector<Rational> bernoulli_;
    std::mutex stirling_mutex_;
    std::vector<std::vector<Integer>> stirling_;
    std::mutex norlund_mutex_;
    std::map<unsigned, Polynomial> norlund_;
    std::mutex rows_mutex_;
    std::map<std::pair<unsigned, unsigned>, std::vector<Integer>> rows_;
};

/// Classical Bernoulli numbers from sum_{q<=m} C(m+1, q) B_q = [m == 0];
/// B_1 = -1/2.
Rational bernoulli(unsigned m);

/// B_m^{(k)} for k >= 1 by the Nörlund recurrence in k, seeded with the
/// classical numbers at k = 1. Uncached; the reference for norlund_poly.
Rational bernoulli_high_chain(unsigned m, unsigned k);

/// B_m^{(k)} for any integer k, as the value of the Nörlund polynomial.
Rational bernoulli_high(unsigned m, long k);

/// Degree-m polynomial in k interpolating B_m^{(k)} at k = 1..m+1, with a
/// post-check at k = m+2, m+3 (Error(interpolation_inconsistent) on failure).
Polynomial norlund_poly(unsigned m);

/// Stirling numbers of the second kind; S(0,0) = 1, zero outside 0 <= k <= n.
/// Negative arguments give 0.
Integer stirling2(long n, long k);

/// f_m(k) = C(m+k, m) B_m^{(-k)}, the polynomial with f_m(k) = S(m+k, k).
Polynomial stirling_poly(unsigned m);

/// Coefficient of t^{k+q} in (t + t^2 + ... + t^n)^k; zero outside
/// 0 <= q <= k(n-1).
Integer poly_coefficient(unsigned k, long q, unsigned n);
std::vector<Integer> poly_coefficient_row(unsigned k, unsigned n);

/// G_{2r} = 2(1 - 4^r) B_{2r}; Error(non_integer) if that is not an integer.
Integer genocchi(unsigned r);

/// Gandhi polynomials F_{r+1}(k) = (k+1)^2 F_r(k+1) - k^2 F_r(k), F_1 = 1.
Polynomial gandhi_poly(unsigned r);

/// Dumont-Foata polynomials
/// F_{r+1}(x,y,z) = (z+x)(z+y) F_r(x,y,z+1) - z^2 F_r(x,y,z), F_1 = 1.
TrivariatePolynomial dumont_foata(unsigned r);

/// P_{r+1}(k) = k^2 P_r(k) - k(k-1) P_r(k-1), P_0 = 1.
Polynomial p_poly(unsigned r);

/// sum_q C(m+k, q) S(m+k-q, k) B_q = (m+k)/k S(m+k-1, k-1), k >= 1.
VerificationReport recurrence_rel1_check(unsigned m, unsigned k);

/// The higher-order version with B_q^{(r)}, r <= k, plus its binomial
/// convolution form sum_q C(m,q) B_{m-q}^{(-k)} B_q^{(r)} = B_m^{(r-k)}.
VerificationReport impl1_check(unsigned m, unsigned k, unsigned r);

}  // namespace powersum
