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

#include "factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace powersum::detail {

namespace {

constexpr unsigned long kTrialLimit = 10000;

// Brent's variant of Pollard rho; n is odd, composite, and has no factor
// below the trial-division limit.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto step = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    const Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factorize(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Integer rest = abs(n);
    std::map<Integer, unsigned> out;
    for (unsigned long p = 2; p <= kTrialLimit && rest > 1; ++p) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++out[Integer(p)];
            rest /= p;
        }
    }
    factor_into(rest, out);
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divisors{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace powersum::detail
