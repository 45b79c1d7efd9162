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
#include "powersum/series.hpp"

using namespace powersum;

namespace {

const Polynomial z = Polynomial::identity();
const Polynomial z1 = Polynomial::linear(1, 1);

}  // namespace

TEST_CASE("power_sum", "[powersums]") {
    CHECK(power_sum(0, 5) == 5);
    CHECK(power_sum(1, 100) == 5050);
    CHECK(power_sum(2, 3) == 14);
}

TEST_CASE("iterated_sum", "[powersums]") {
    CHECK(iterated_sum(0, 3, 4) == 64);
    for (unsigned m = 0; m <= 5; ++m) CHECK(iterated_sum(1, m, 7) == power_sum(m, 7));
    CHECK(iterated_sum(2, 1, 3) == 10);
}

TEST_CASE("power_sum_high", "[powersums]") {
    for (unsigned m = 0; m <= 6; ++m) CHECK(power_sum_high(m, 1, 9) == power_sum(m, 9));
    CHECK(power_sum_high(1, 2, 2) == 12);
    CHECK(power_sum_high(2, 2, 2) == 38);
    // S_0^(k)(n) = n^k
    for (unsigned k = 1; k <= 5; ++k) CHECK(power_sum_high(0, k, 3) == ipow(3, k));
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned k = 1; k <= 5; ++k) {
            for (unsigned n = 1; n <= 8; ++n) CHECK(power_sum_high(m, k, n) == power_sum_high_convolution(m, k, n));
        }
    }
}

TEST_CASE("power_sum_poly", "[powersums]") {
    CHECK(power_sum_poly(0) == z);
    CHECK(power_sum_poly(1) == Polynomial{0, Rational(1, 2), Rational(1, 2)});
    CHECK(power_sum_poly(2) == Polynomial{0, Rational(1, 6), Rational(1, 2), Rational(1, 3)});
    for (unsigned m = 0; m <= 10; ++m) {
        for (long n = 1; n <= 10; ++n) CHECK(power_sum_poly(m)(Rational(n)) == Rational(power_sum(m, static_cast<unsigned>(n))));
    }
}

TEST_CASE("power_sum_high_poly", "[powersums]") {
    for (unsigned m = 0; m <= 8; ++m) CHECK(power_sum_high_poly(m, 1) == power_sum_poly(m));
    CHECK(power_sum_high_poly(1, 2) == Polynomial{0, 0, 1, 1});
    CHECK(power_sum_high_poly(2, 2)(Rational(2)) == Rational(38));
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned k = 1; k <= 5; ++k) {
            const Polynomial p = power_sum_high_poly(m, k);
            CHECK(p == power_sum_high_poly_stirling_form(m, k));
            for (long n = 1; n <= 12; ++n) CHECK(p(Rational(n)) == Rational(power_sum_high(m, k, static_cast<unsigned>(n))));
        }
    }
}

TEST_CASE("q_poly", "[powersums]") {
    CHECK(q_poly(2, 1) == Polynomial{1, 3, 2} * Rational(1, 6));
    CHECK(q_poly(3, 2) == z1 * z1 * Polynomial::linear(3, 1) * Rational(1, 2));
    for (long k = 1; k <= 6; ++k) CHECK(q_poly(1, static_cast<unsigned>(k)) == z1 * Rational(k, 2));
    for (unsigned m = 1; m <= 8; ++m) {
        for (unsigned k = 1; k <= 4; ++k) CHECK(Polynomial::monomial(1, k) * q_poly(m, k) == power_sum_high_poly(m, k));
    }
}

TEST_CASE("binomial_sum", "[powersums]") {
    for (unsigned m = 0; m <= 5; ++m) CHECK(binomial_sum(m, 1, 6) == power_sum(m, 6));
    CHECK(binomial_sum(1, 2, 1) == 6);
    // S_1^(2)(2) + C(6,1) S_1(2) = 12 + 18
    CHECK(binomial_sum(1, 2, 2) == 30);
    CHECK(binomial_sum_at_1(1, 2) == 6);
    CHECK(binomial_sum_at_1(3, 0) == 0);
    for (unsigned m = 0; m <= 7; ++m) {
        for (unsigned k = 1; k <= 5; ++k) CHECK(binomial_sum_at_1(m, k) == binomial_sum(m, k, 1));
    }
}

TEST_CASE("binomial_sum_poly", "[powersums]") {
    CHECK(binomial_sum_poly(3, 1) == power_sum_poly(3));
    CHECK(binomial_sum_poly(1, 2)(Rational(2)) == Rational(30));
    CHECK(binomial_sum_poly(1, 2)(Rational(3)) == Rational(84));
    CHECK(binomial_sum_poly(1, 2) == z * z1 * Polynomial::linear(2, 1));
    for (unsigned m = 0; m <= 5; ++m) {
        for (unsigned k = 1; k <= 4; ++k) {
            for (long n = 1; n <= 5; ++n) CHECK(binomial_sum_poly(m, k)(Rational(n)) == Rational(binomial_sum(m, k, static_cast<unsigned>(n))));
        }
    }
}

TEST_CASE("multiple sums", "[powersums]") {
    for (unsigned m = 1; m <= 7; m += 2) {
        for (unsigned n = 1; n <= 6; ++n) CHECK(multiple_sum_bruteforce(m, 1, n) == power_sum(m, n));
    }
    CHECK(multiple_sum_bruteforce(1, 2, 1) == 6);
    // c(2, 2) = (6, 7, 2, 1): 6 + 14 + 6 + 4
    CHECK(multiple_sum_bruteforce(1, 2, 2) == 30);
    CHECK(multiple_sum_tuple_count(4, 6) == 17550);
    CHECK_THROWS_AS(multiple_sum_bruteforce(2, 2, 2), std::invalid_argument);
}

TEST_CASE("multiple_sum_coefficients", "[powersums]") {
    const auto c21 = multiple_sum_coefficients(2, 1);
    CHECK(c21.c == std::vector<Integer>{4, 1});
    CHECK(multiple_sum_coefficients(2, 2).c == std::vector<Integer>{6, 7, 2, 1});
    // c_q(2, n) = 2n + q + 1 for q <= n, 2n - q + 1 above.
    for (unsigned n = 1; n <= 6; ++n) {
        const auto c = multiple_sum_coefficients(2, n);
        for (unsigned q = 1; q <= 2 * n; ++q) CHECK(c[q] == (q <= n ? 2 * n + q + 1 : 2 * n - q + 1));
    }
    for (unsigned n = 1; n <= 6; ++n) {
        const auto c = multiple_sum_coefficients(1, n);
        for (unsigned q = 1; q <= n; ++q) CHECK(c[q] == 1);
    }
    for (unsigned m = 1; m <= 9; m += 2) CHECK(multiple_sum_coefficients(3, 3).evaluate(m) == multiple_sum_bruteforce(m, 3, 3));
}

TEST_CASE("enumeration cap", "[powersums]") {
    try {
        multiple_sum_bruteforce(3, 6, 20);
        FAIL("expected instance_too_large");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::instance_too_large);
    }
    CHECK_THROWS_AS(multiple_sum_coefficients(4, 6, 100), Error);
    CHECK_NOTHROW(multiple_sum_coefficients(4, 6, 17550));
}
