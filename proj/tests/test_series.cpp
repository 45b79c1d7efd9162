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

#include <catch_amalgamated.hpp>

#include "powersum/error.hpp"
#include "powersum/powersums.hpp"
#include "powersum/sequences.hpp"
#include "powersum/series.hpp"

using namespace powersum;
using namespace powersum::series;

TEST_CASE("exp_linear", "[series]") {
    CHECK(exp_linear(0, 3) == TruncatedSeries({1, 0, 0, 0}));
    CHECK(exp_linear(1, 3) == TruncatedSeries({1, 1, 1, 1}));
    CHECK(exp_linear(2, 3) == TruncatedSeries({1, 2, 4, 8}));
}

TEST_CASE("mul is a binomial convolution", "[series]") {
    CHECK(mul(exp_linear(1, 5), exp_linear(1, 5)) == exp_linear(2, 5));
    const auto a = exp_linear(3, 6) + TruncatedSeries::variable(6);
    CHECK(mul(a, TruncatedSeries::unit(6)) == a);
    // (e^t + e^{2t})^2 = e^{2t} + 2e^{3t} + e^{4t}; index 2: 4 + 18 + 16.
    const auto g = exp_linear(1, 4) + exp_linear(2, 4);
    CHECK(mul(g, g)[2] == Rational(38));
    CHECK(mul(exp_linear(1, 8), exp_linear(1, 4)).order() == 4);
}

TEST_CASE("div", "[series]") {
    const auto a = exp_linear(3, 8) + exp_linear(-1, 8);
    CHECK(div(a, a) == TruncatedSeries::unit(8));
    CHECK(div(a, TruncatedSeries::unit(8)) == a);
    // t / (e^t - 1)
    const auto shifted = (exp_linear(1, 9) - TruncatedSeries::unit(9)).shift_down(1);
    const auto b = div(TruncatedSeries::unit(8), shifted);
    CHECK(b == TruncatedSeries({1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0, Rational(-1, 30)}));
    CHECK(mul(b, shifted) == TruncatedSeries::unit(8));
    try {
        div(a, TruncatedSeries::variable(8));
        FAIL("expected non_unit_divisor");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_unit_divisor);
    }
}

TEST_CASE("pow", "[series]") {
    const auto a = exp_linear(1, 6) + exp_linear(5, 6);
    CHECK(pow(a, 0) == TruncatedSeries::unit(6));
    CHECK(pow(a, 1) == a);
    for (long k = 1; k <= 4; ++k) {
        const auto p = pow(exp_linear(1, 6), static_cast<unsigned>(k));
        for (std::size_t j = 0; j <= 6; ++j) CHECK(p[j] == Rational(ipow(k, j)));
    }
}

TEST_CASE("egf_power_sum", "[series]") {
    CHECK(egf_power_sum(3, 1, 4)[2] == Rational(14));
    CHECK(egf_power_sum(2, 2, 4)[1] == Rational(12));
    CHECK(egf_power_sum(2, 2, 4)[2] == Rational(38));
}

TEST_CASE("egf_power_sum agrees with direct summation", "[series][oracle]") {
    for (unsigned k = 1; k <= 5; ++k) {
        for (unsigned n = 1; n <= 8; ++n) {
            const auto oracle = egf_power_sum(n, k, 10);
            for (unsigned m = 0; m <= 10; ++m) CHECK(oracle[m] == Rational(power_sum_high(m, k, n)));
        }
    }
}

TEST_CASE("egf_bernoulli_high", "[series]") {
    CHECK(egf_bernoulli_high(1)[2] == Rational(1, 6));
    for (long k = 1; k <= 5; ++k) CHECK(egf_bernoulli_high(k)[0] == Rational(1));
    CHECK(egf_bernoulli_high(2)[2] == Rational(5, 6));
    for (long k = 1; k <= 8; ++k) {
        const auto oracle = egf_bernoulli_high(k, 12);
        for (unsigned q = 0; q <= 12; ++q) CHECK(oracle[q] == bernoulli_high_chain(q, static_cast<unsigned>(k)));
    }
    // Negative order from ((e^t - 1)/t)^k against the Nörlund polynomial.
    for (long k = -6; k <= -1; ++k) {
        const auto oracle = egf_bernoulli_high(k, 10);
        for (unsigned q = 0; q <= 10; ++q) CHECK(oracle[q] == bernoulli_high(q, k));
    }
}

TEST_CASE("egf_stirling_column", "[series]") {
    CHECK(egf_stirling_column(0, 4) == std::vector<Rational>{1, 0, 0, 0, 0});
    const auto one = egf_stirling_column(1, 6);
    CHECK(one[0] == Rational(0));
    for (std::size_t q = 1; q <= 6; ++q) CHECK(one[q] == Rational(1));
    CHECK(egf_stirling_column(2, 4)[4] == Rational(7));
    for (unsigned k = 0; k <= 10; ++k) {
        const auto col = egf_stirling_column(k, 20);
        for (unsigned n = 0; n <= 20; ++n) CHECK(col[n] == Rational(stirling2(n, k)));
    }
}

TEST_CASE("egf_genocchi", "[series]") {
    const auto g = egf_genocchi(16);
    CHECK(g[2] == Rational(-1));
    CHECK(g[6] == Rational(-3));
    CHECK(g[8] == Rational(17));
    for (unsigned r = 1; r <= 8; ++r) CHECK(g[2 * r] == Rational(2 * (1 - ipow(4, r))) * bernoulli(2 * r));
}

TEST_CASE("div then mul recovers the dividend", "[series][property]") {
    for (long c = -3; c <= 3; ++c) {
        const auto a = exp_linear(c, 10) + TruncatedSeries::variable(10) * Rational(c);
        const auto b = exp_linear(c + 1, 10) + exp_linear(2, 10);
        CHECK(mul(div(a, b), b) == a);
    }
}
