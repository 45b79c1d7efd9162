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
#include <span>
#include <vector>

#include "powersum/rational.hpp"

// Truncated exponential generating series. These are the independent oracle
// for the sequence families: everything here is derived from products and
// quotients of e^{ct}, never from the closed forms being checked.
namespace powersum::series {

inline constexpr std::size_t kDefaultOrder = 24;

/// sum_{j=0}^{N} a_j t^j / j!, stored as the a_j (EGF normalization).
class TruncatedSeries {
  public:
    /// Zero series of order N.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    /// 1 + 0 t + ...
    static TruncatedSeries unit(std::size_t order);
    /// The series t, i.e. coefficient 1 at index 1.
    static TruncatedSeries variable(std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

    /// Divides by t^count, lowering the order by count. Throws
    /// std::invalid_argument if a dropped coefficient is nonzero or the order
    /// is too small.
    [[nodiscard]] TruncatedSeries shift_down(std::size_t count) const;
    [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Rational> coeffs_;
};

/// e^{ct}: coefficient c^j at index j.
TruncatedSeries exp_linear(long c, std::size_t order);

/// Binomial convolution, truncated at the smaller order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Exact quotient; throws Error(non_unit_divisor) when b[0] == 0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries pow(const TruncatedSeries& a, unsigned k);

/// S_q^{(k)}(n) for q = 0..order, from (e^t + ... + e^{nt})^k.
std::vector<Rational> egf_power_sum(long n, unsigned k, std::size_t order = kDefaultOrder);

/// B_q^{(k)} for q = 0..order, from (t / (e^t - 1))^k. Negative k is allowed
/// and expands ((e^t - 1) / t)^{|k|} directly.
std::vector<Rational> egf_bernoulli_high(long k, std::size_t order = kDefaultOrder);

/// S(q, k) for q = 0..order, from (e^t - 1)^k / k!.
std::vector<Rational> egf_stirling_column(unsigned k, std::size_t order = kDefaultOrder);

/// Coefficients of 2t / (e^t + 1) - t; index 2q holds G_{2q}.
std::vector<Rational> egf_genocchi(std::size_t order = kDefaultOrder);

}  // namespace powersum::series
