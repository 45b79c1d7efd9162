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

#include "powersum/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "powersum/error.hpp"

namespace powersum::series {

namespace {

std::vector<Rational> to_vector(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

// Row m of Pascal's triangle, reused across the convolution.
std::vector<Integer> pascal_row(std::size_t m) {
    std::vector<Integer> row(m + 1);
    row[0] = 1;
    for (std::size_t q = 1; q <= m; ++q) row[q] = row[q - 1] * static_cast<unsigned long>(m - q + 1) / static_cast<unsigned long>(q);
    return row;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::unit(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::shift_down(std::size_t count) const {
    if (count > order()) throw std::invalid_argument("shift_down: order too small");
    for (std::size_t j = 0; j < count; ++j) {
        if (!coeffs_[j].is_zero()) throw std::invalid_argument("shift_down: series is not divisible by t^" + std::to_string(count));
    }
    // a_{j+c} t^{j+c}/(j+c)!  =  [a_{j+c} j!/(j+c)!] t^j/j!
    std::vector<Rational> out(order() - count + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
        Integer falling = 1;
        for (std::size_t i = 1; i <= count; ++i) falling *= static_cast<unsigned long>(j + i);
        out[j] = coeffs_[j + count] / Rational(falling);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot raise the order");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out[j] = a[j] + b[j];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out[j] = a[j] - b[j];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
    auto out = to_vector(a);
    for (auto& v : out) v *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_linear(long c, std::size_t order) {
    std::vector<Rational> out(order + 1);
    Integer power = 1;
    for (std::size_t j = 0; j <= order; ++j) {
        out[j] = Rational(power);
        power *= c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        const auto row = pascal_row(m);
        Rational acc;
        for (std::size_t q = 0; q <= m; ++q) {
            if (a[q].is_zero() || b[m - q].is_zero()) continue;
            acc += Rational(row[q]) * a[q] * b[m - q];
        }
        out[m] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0].is_zero()) throw Error(Errc::non_unit_divisor, "shift out the leading power of t first");
    const std::size_t n = std::min(a.order(), b.order());
    // Solve q * b = a one coefficient at a time:
    //   a_m = sum_q C(m,q) q_q b_{m-q}  =>  q_m = (a_m - sum_{q<m} ...) / b_0
    std::vector<Rational> out(n + 1);
    const Rational inv = b[0].inverse();
    for (std::size_t m = 0; m <= n; ++m) {
        const auto row = pascal_row(m);
        Rational acc = a[m];
        for (std::size_t q = 0; q < m; ++q) {
            if (out[q].is_zero() || b[m - q].is_zero()) continue;
            acc -= Rational(row[q]) * out[q] * b[m - q];
        }
        out[m] = acc * inv;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries result = TruncatedSeries::unit(a.order());
    TruncatedSeries base = a;
    while (k != 0) {
        if ((k & 1U) != 0) result = mul(result, base);
        k >>= 1U;
        if (k != 0) base = mul(base, base);
    }
    return result;
}

std::vector<Rational> egf_power_sum(long n, unsigned k, std::size_t order) {
    TruncatedSeries g(order);
    for (long q = 1; q <= n; ++q) g = g + exp_linear(q, order);
    return to_vector(pow(g, k));
}

namespace {

// (e^t - 1) / t to the given order.
TruncatedSeries exp_minus_one_over_t(std::size_t order) {
    const auto e = exp_linear(1, order + 1) - TruncatedSeries::unit(order + 1);
    return e.shift_down(1);
}

}  // namespace

std::vector<Rational> egf_bernoulli_high(long k, std::size_t order) {
    const auto base = exp_minus_one_over_t(order);
    if (k >= 0) {
        const auto inverse = div(TruncatedSeries::unit(order), base);
        return to_vector(pow(inverse, static_cast<unsigned>(k)));
    }
    return to_vector(pow(base, static_cast<unsigned>(-k)));
}

std::vector<Rational> egf_stirling_column(unsigned k, std::size_t order) {
    const auto e = exp_linear(1, order) - TruncatedSeries::unit(order);
    const auto p = pow(e, k);
    return to_vector(p * Rational(factorial(k)).inverse());
}

std::vector<Rational> egf_genocchi(std::size_t order) {
    const auto two_t = TruncatedSeries::variable(order) * Rational(2);
    const auto denom = exp_linear(1, order) + TruncatedSeries::unit(order);
    return to_vector(div(two_t, denom) - TruncatedSeries::variable(order));
}

}  // namespace powersum::series
