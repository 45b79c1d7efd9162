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

#include "powersum/powersums.hpp"

#include <stdexcept>
#include <string>

#include "powersum/error.hpp"
#include "powersum/sequences.hpp"

namespace powersum {

namespace {

Rational sign(unsigned q) { return (q % 2 == 0) ? Rational(1) : Rational(-1); }

void require_positive(unsigned value, const char* what) {
    if (value == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Integer power_sum(unsigned m, unsigned n) {
    Integer acc;
    for (unsigned q = 1; q <= n; ++q) acc += ipow(q, m);
    return acc;
}

Integer iterated_sum(unsigned k, unsigned m, unsigned n) {
    // level[q-1] = S^{j}_m(q) for q = 1..n
    std::vector<Integer> level(n);
    for (unsigned q = 1; q <= n; ++q) level[q - 1] = ipow(q, m);
    for (unsigned j = 0; j < k; ++j) {
        Integer running;
        for (auto& v : level) {
            running += v;
            v = running;
        }
    }
    return n == 0 ? Integer(0) : level.back();
}

Integer power_sum_high(unsigned m, unsigned k, unsigned n) {
    require_positive(n, "n");
    const auto row = poly_coefficient_row(k, n);
    Integer acc;
    for (std::size_t q = 0; q < row.size(); ++q) acc += row[q] * ipow(static_cast<unsigned long>(k + q), m);
    return acc;
}

Integer power_sum_high_convolution(unsigned m, unsigned k, unsigned n) {
    require_positive(k, "k");
    std::vector<Integer> base(m + 1);
    for (unsigned q = 0; q <= m; ++q) base[q] = power_sum(q, n);
    std::vector<Integer> current = base;
    for (unsigned level = 2; level <= k; ++level) {
        std::vector<Integer> next(m + 1);
        for (unsigned j = 0; j <= m; ++j) {
            for (unsigned q = 0; q <= j; ++q) next[j] += binomial(j, q) * current[q] * base[j - q];
        }
        current = std::move(next);
    }
    return current[m];
}

Integer binomial_sum(unsigned m, unsigned k, unsigned n) {
    require_positive(k, "k");
    Integer acc;
    for (unsigned q = 0; q < k; ++q) acc += binomial(static_cast<long>(k) * (n + 1), q) * power_sum_high(m, k - q, n);
    return acc;
}

Integer binomial_sum_at_1(unsigned m, unsigned k) {
    Integer acc;
    for (unsigned q = 0; q < k; ++q) acc += binomial(2L * k, q) * ipow(k - q, m);
    return acc;
}

Polynomial power_sum_poly(unsigned m) {
    std::vector<Rational> coeffs(m + 2);
    for (unsigned q = 0; q <= m; ++q) coeffs[m + 1 - q] = sign(q) * Rational(binomial(m + 1, q)) * bernoulli(q);
    return Polynomial(std::move(coeffs)) / Rational(static_cast<long>(m) + 1);
}

Polynomial power_sum_high_poly_stirling_form(unsigned m, unsigned k) {
    require_positive(k, "k");
    const long mk = static_cast<long>(m + k);
    std::vector<Rational> coeffs(m + k + 1);
    for (unsigned q = 0; q <= m; ++q) {
        coeffs[mk - q] = sign(q) * Rational(binomial(mk, q) * stirling2(mk - q, k)) * bernoulli_high_chain(q, k);
    }
    return Polynomial(std::move(coeffs)) / Rational(binomial(mk, k));
}

Polynomial q_poly(unsigned m, unsigned k) {
    std::vector<Rational> coeffs(m + 1);
    const long kk = static_cast<long>(k);
    for (unsigned q = 0; q <= m; ++q) {
        coeffs[m - q] = sign(q) * Rational(binomial(m, q)) * bernoulli_high(q, kk) * bernoulli_high(m - q, -kk);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial power_sum_high_poly_convolution_form(unsigned m, unsigned k) {
    require_positive(k, "k");
    return Polynomial::monomial(1, k) * q_poly(m, k);
}

Polynomial power_sum_high_poly(unsigned m, unsigned k) {
    auto stirling_form = power_sum_high_poly_stirling_form(m, k);
    if (stirling_form != power_sum_high_poly_convolution_form(m, k)) {
        throw Error(Errc::form_mismatch, "m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
    return stirling_form;
}

Polynomial binomial_sum_poly(unsigned m, unsigned k) {
    require_positive(k, "k");
    Polynomial acc;
    for (unsigned q = 0; q < k; ++q) acc += binomial_poly(k, q) * power_sum_high_poly(m, k - q);
    return acc;
}

}  // namespace powersum
