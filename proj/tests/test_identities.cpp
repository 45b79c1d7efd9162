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

#include "powersum/powersums.hpp"
#include "powersum/sequences.hpp"

using namespace powersum;

TEST_CASE("recurrence identity", "[identities]") {
    CHECK(recurrence_id_check(0, 1, 1, 3).passed());
    CHECK(recurrence_id_check(2, 3, 2, 2).passed());
    // r = k = 2, m = 1, n = 2: the Stirling-weighted left side is -S(3,2) 2^3 = -24.
    Integer lhs;
    for (unsigned q = 0; q <= 1; ++q) {
        const Integer t = binomial(3, q) * stirling2(3 - q, 2) * power_sum_high(q, 2, 2);
        lhs += q % 2 == 0 ? t : Integer(-t);
    }
    CHECK(lhs == -24);
    const auto report = recurrence_id_check(1, 2, 2, 2);
    CHECK(report.passed());
    CHECK(report.pass_count == 2);
}

TEST_CASE("theorem2_report", "[identities]") {
    CHECK(theorem2_report(1, 5).passed());
    CHECK(theorem2_report(7, 3).passed());
    CHECK(theorem2_report(4, 1).passed());
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(theorem2_report(2, k).passed());
        CHECK(theorem2_report(3, k).passed());
    }
}

TEST_CASE("lemma1_check", "[identities]") {
    // m = 1, k = 4: B_0^(4) B_1^(-4) = 2 = -4 B_1
    CHECK(bernoulli_high(1, -4) == Rational(2));
    CHECK(lemma1_check(1, 4).passed());
    CHECK(lemma1_check(3, 2).passed());
    // m = 2, k = 1: the second identity's right side is 2/3.
    Rational lhs;
    lhs += Rational(binomial(2, 0) * 2 * 1) * bernoulli_high(0, 1) * bernoulli_high(2, -1);
    CHECK(lhs == Rational(2, 3));
    CHECK(lemma1_check(2, 1).passed());
}

TEST_CASE("kimura_root_check", "[identities]") {
    CHECK(rational_roots(power_sum_poly(2)) == std::set<Rational>{0, -1, Rational(-1, 2)});
    CHECK(rational_roots(power_sum_poly(3)) == std::set<Rational>{0, -1});
    CHECK(rational_roots(power_sum_poly(1)) == std::set<Rational>{0, -1});
    for (unsigned m = 1; m <= 15; ++m) CHECK(kimura_root_check(m).passed());
}

TEST_CASE("conjecture_relationsh_check", "[identities]") {
    CHECK(conjecture_relationsh_check(1, 2, 2).passed());
    CHECK(conjecture_relationsh_check(3, 2, 2).passed());
    for (unsigned m = 1; m <= 9; m += 2) {
        for (unsigned n = 1; n <= 10; ++n) CHECK(conjecture_relationsh_check(m, 1, n).passed());
    }
    const auto report = conjecture_relationsh_check(5, 3, 4);
    CHECK(report.passed());
    CHECK(report.notes.empty());
}

TEST_CASE("binomial sums at n = 1", "[identities]") {
    CHECK(binomial_sum_at_1(1, 2) == 6);
    CHECK(eq241_check(1, 2).passed());
    CHECK(binomial_sum_at_1(3, 2) == 12);
    CHECK(eq23_check(1, 1).passed());
    for (unsigned r = 0; r <= 5; ++r) {
        for (unsigned k = 1; k <= 8; ++k) CHECK(eq251_check(r, k).passed());
    }
}

TEST_CASE("prop32 and lemma2", "[identities]") {
    for (unsigned k : {1u, 2u, 5u}) CHECK(prop32_check(k).passed());
    for (unsigned k : {1u, 2u, 6u}) CHECK(lemma2_check(k).passed());
}

TEST_CASE("faulhaber, gandhi and Dumont-Foata reports", "[identities]") {
    for (unsigned m = 1; m <= 15; ++m) CHECK(faulhaber_form_check(m).passed());
    for (unsigned r = 1; r <= 8; ++r) CHECK(gandhi_genocchi_check(r).passed());
    for (unsigned r = 1; r <= 6; ++r) CHECK(dumont_foata_symmetry_check(r).passed());
}

TEST_CASE("a failing check records exact values", "[identities][report]") {
    VerificationReport report("demo");
    CHECK_FALSE(report.expect_equal("eq", {{"m", 3}}, Rational(1, 3), Rational(1, 2)));
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].lhs == "1/3");
    CHECK(report.failures[0].rhs == "1/2");
    CHECK(format_params(report.failures[0].params) == "m=3");
    CHECK_FALSE(report.passed());
}
