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

#include <random>

#include <catch_amalgamated.hpp>

#include "powersum/error.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/powersums.hpp"

using namespace powersum;

namespace {

const Polynomial z = Polynomial::identity();

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial and trimming", "[poly]") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial{1, 2, 0}.degree() == 1);
    CHECK(Polynomial().to_json() == "[]");
    CHECK(Polynomial{0, Rational(-1, 2)}.to_json() == R"(["0","-1/2"])");
    CHECK(Polynomial::from_json(R"(["0","-1/2"])") == Polynomial{0, Rational(-1, 2)});
    CHECK(Polynomial{1, 3, 2}.to_text("k") == "2*k^2 + 3*k + 1");
}

TEST_CASE("poly_mul", "[poly]") {
    CHECK(Polynomial::linear(1, 1) * Polynomial::linear(-1, 1) == Polynomial{1, 0, -1});
    CHECK((Polynomial{1, 2, 3} * Polynomial()).is_zero());
    // (z + z^2)^2 = z^2 + 2z^3 + z^4
    const Polynomial zz{0, 1, 1};
    CHECK(zz * zz == Polynomial{0, 0, 1, 2, 1});
}

TEST_CASE("poly_mul is commutative and associative", "[poly][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 20);
        const auto b = random_poly(rng, 20);
        const auto c = random_poly(rng, 20);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly_compose", "[poly]") {
    const Polynomial w{0, 1, 1};
    CHECK(compose(Polynomial{0, 0, 1}, w) == Polynomial{0, 0, 1, 2, 1});
    CHECK(compose(z, Polynomial::linear(-1, 0)) == Polynomial::linear(-1, 0));
    CHECK(compose(Polynomial::constant(Rational(7, 3)), w) == Polynomial::constant(Rational(7, 3)));
}

TEST_CASE("poly_derivative", "[poly]") {
    CHECK(derivative(Polynomial{0, 0, 1}) == Polynomial{0, 2});
    CHECK(derivative(Polynomial::constant(5)).is_zero());
    CHECK(derivative(q_poly(3, 1))(Rational(-1)) == Rational(0));
}

TEST_CASE("divmod", "[poly]") {
    const Polynomial a{-1, 0, 0, 1};
    const auto [q, r] = divmod(a, Polynomial::linear(1, -1));
    CHECK(q == Polynomial{1, 1, 1});
    CHECK(r.is_zero());
    try {
        divmod(a, Polynomial());
        FAIL("expected division_by_zero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::division_by_zero);
    }
}

TEST_CASE("root_multiplicity", "[poly]") {
    const Polynomial zp1 = Polynomial::linear(1, 1);
    CHECK(root_multiplicity(zp1 * zp1, Rational(-1)) == 2);
    CHECK(root_multiplicity(q_poly(2, 1), Rational(-1)) == 1);
    CHECK(root_multiplicity(q_poly(3, 2), Rational(-1)) == 2);
    CHECK(root_multiplicity(Polynomial{1, 1, 1}, Rational(-1)) == 0);
    try {
        root_multiplicity(Polynomial(), Rational(0));
        FAIL("expected zero_polynomial");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_polynomial);
    }
}

TEST_CASE("root_multiplicity agrees with synthetic division", "[poly][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = random_poly(rng, 5);
        if (p.is_zero()) continue;
        const Rational x0(trial % 5 - 2, 1 + trial % 3);
        const int extra = trial % 4;
        for (int i = 0; i < extra; ++i) p *= Polynomial::linear(1, -x0);
        const int m = root_multiplicity(p, x0);
        CHECK(m >= extra);
        Polynomial cur = p;
        for (int i = 0; i < m; ++i) {
            auto [q, r] = divmod(cur, Polynomial::linear(1, -x0));
            CHECK(r.is_zero());
            cur = q;
        }
        CHECK_FALSE(divmod(cur, Polynomial::linear(1, -x0)).second.is_zero());
    }
}

TEST_CASE("rational_roots", "[poly]") {
    const Polynomial p = z * Polynomial::linear(1, 1) * Polynomial::linear(2, 1);
    CHECK(rational_roots(p) == std::set<Rational>{0, -1, Rational(-1, 2)});
    CHECK(rational_roots(Polynomial{1, 0, 1}).empty());
    CHECK(rational_roots(Polynomial{Rational(-1, 4), 0, 1}) == std::set<Rational>{Rational(-1, 2), Rational(1, 2)});
    CHECK(rational_roots(Polynomial{Rational(1, 5)}).empty());
    for (const auto& root : rational_roots(power_sum_poly(4))) {
        CHECK((root == Rational(0) || root == Rational(-1) || root == Rational(-1, 2)));
    }
    CHECK_THROWS_AS(rational_roots(Polynomial()), Error);
}

TEST_CASE("binomial_poly", "[poly]") {
    CHECK(binomial_poly(3, 0) == Polynomial::constant(1));
    CHECK(binomial_poly(1, 1) == Polynomial{1, 1});
    // C(2(n+1), 2) at n = 1, 2, 3 is 6, 15, 28.
    const Polynomial p = binomial_poly(2, 2);
    CHECK(p(Rational(1)) == Rational(6));
    CHECK(p(Rational(2)) == Rational(15));
    CHECK(p(Rational(3)) == Rational(28));
    CHECK(p == Polynomial{1, 3, 2});
    for (long k = 1; k <= 4; ++k) {
        for (long q = 0; q <= 6; ++q) {
            for (long n = 0; n <= 4; ++n) CHECK(binomial_poly(k, q)(Rational(n)) == Rational(binomial(k * (n + 1), q)));
        }
    }
}

TEST_CASE("central_binomial_poly", "[poly]") {
    CHECK(central_binomial_poly(1) == Polynomial::constant(1));
    CHECK(central_binomial_poly(2)(Rational(1)) == Rational(3));
    CHECK(central_binomial_poly(2)(Rational(2)) == Rational(5));
    CHECK(central_binomial_poly(2) == Polynomial{1, 2});
    CHECK(central_binomial_poly(3)(Rational(1)) == Rational(10));
}
