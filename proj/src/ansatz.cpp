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

#include "powersum/ansatz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "powersum/error.hpp"
#include "powersum/faulhaber.hpp"
#include "powersum/linear_solve.hpp"
#include "powersum/powersums.hpp"
#include "powersum/sequences.hpp"

namespace powersum {

namespace {

// (w + 1)^e as a Laurent polynomial.
LaurentPolynomial w_plus_one_pow(unsigned e) { return pow(LaurentPolynomial(Polynomial::linear(1, 1)), e); }

int ansatz_exponent(unsigned r, unsigned q, unsigned j) {
    return static_cast<int>(r) - static_cast<int>(j) - 3 * static_cast<int>(q) - 1;
}

// Every admissible (q, j) for the given r, in (q, j) order.
std::vector<std::pair<unsigned, unsigned>> ansatz_keys(unsigned r) {
    std::vector<std::pair<unsigned, unsigned>> keys;
    for (unsigned q = 0; 3 * q + 1 <= r; ++q) {
        for (unsigned j = 0; j + 3 * q + 1 <= r; ++j) keys.emplace_back(q, j);
    }
    return keys;
}

Rational half_power(unsigned e) { return (e % 2 == 0 ? Rational(1) : Rational(-1)) / Rational(ipow(2, e)); }

}  // namespace

LaurentPolynomial BivariateF::at_k(const Rational& k) const {
    LaurentPolynomial out;
    for (const auto& [j, c] : coefficients) out += c * k.pow(j);
    return out;
}

Polynomial BivariateF::at_w(const Rational& w) const {
    std::vector<Rational> coeffs(coefficients.empty() ? 0 : coefficients.rbegin()->first + 1);
    for (const auto& [j, c] : coefficients) coeffs[j] = c(w);
    return Polynomial(std::move(coeffs));
}

Rational BivariateF::operator()(const Rational& w, const Rational& k) const { return at_w(w)(k); }

int BivariateF::degree_in_k() const {
    int degree = -1;
    for (const auto& [j, c] : coefficients) {
        if (!c.is_zero()) degree = std::max(degree, static_cast<int>(j));
    }
    return degree;
}

int BivariateF::min_w_exponent() const {
    int lowest = 0;
    for (const auto& [j, c] : coefficients) {
        if (const auto e = c.min_exponent()) lowest = std::min(lowest, *e);
    }
    return lowest;
}

std::string BivariateF::to_text() const {
    std::string out;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        if (it->second.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_text("w") + ")";
        if (it->first > 0) out += "*k^" + std::to_string(it->first);
    }
    return out.empty() ? "0" : out;
}

BivariateF from_ansatz(unsigned r, const AnsatzCoefficients& coefficients) {
    BivariateF f{r, {}};
    for (const auto& [key, value] : coefficients) {
        const auto [q, j] = key;
        const int e = ansatz_exponent(r, q, j);
        if (e < 0) {
            throw std::invalid_argument("ansatz index (q=" + std::to_string(q) + ", j=" + std::to_string(j) + ") outside r=" + std::to_string(r));
        }
        if (value.is_zero()) continue;
        // w^{-q} (w+1)^e / w^e
        auto term = w_plus_one_pow(static_cast<unsigned>(e)).shifted(-e - static_cast<int>(q)) * value;
        f.coefficients[j] += term;
    }
    std::erase_if(f.coefficients, [](const auto& entry) { return entry.second.is_zero(); });
    return f;
}

AnsatzCoefficients tabulated_ansatz(unsigned r) {
    using R = Rational;
    switch (r) {
        case 1:
            return {{{0, 0}, R(1)}};
        case 2:
            return {{{0, 1}, R(2)}, {{0, 0}, R(2, 3)}};
        case 3:
            return {{{0, 2}, R(6)}, {{0, 1}, R(16, 3)}, {{0, 0}, R(4, 3)}};
        case 4:
            return {{{0, 3}, R(24)}, {{0, 2}, R(40)}, {{0, 1}, R(24)}, {{0, 0}, R(24, 5)}, {{1, 0}, R(8, 5)}};
        case 5:
            return {{{0, 4}, R(120)},   {{0, 3}, R(320)},    {{0, 2}, R(1016, 3)}, {{0, 1}, R(160)},
                    {{1, 1}, R(32)},    {{0, 0}, R(80, 3)},  {{1, 0}, R(80, 3)}};
        case 6:
            return {{{0, 5}, R(720)},          {{0, 4}, R(2800)},         {{0, 3}, R(13664, 3)},
                    {{0, 2}, R(55936, 15)},    {{1, 2}, R(2544, 5)},      {{0, 1}, R(22112, 15)},
                    {{1, 1}, R(13664, 15)},    {{0, 0}, R(22112, 105)},   {{1, 0}, R(44224, 105)}};
        default:
            throw Error(Errc::not_tabulated, "r=" + std::to_string(r));
    }
}

BivariateF tabulated_F(unsigned r) { return from_ansatz(r, tabulated_ansatz(r)); }

Polynomial eq36_rhs(const BivariateF& f, unsigned k) {
    if (k == 0) throw std::invalid_argument("eq36_rhs: k must be positive");
    const LaurentPolynomial scaled = LaurentPolynomial::monomial(half_power(f.r + 1), static_cast<int>(f.r) + 1) * f.at_k(-Rational(static_cast<long>(k)));
    Polynomial in_z;
    try {
        in_z = substitute(scaled, faulhaber_w());
    } catch (const Error& e) {
        if (e.code() != Errc::negative_exponent) throw;
        throw Error(Errc::denominator_not_cleared, "r=" + std::to_string(f.r) + " k=" + std::to_string(k) + ": " + scaled.to_text("w"));
    }
    const Rational kk(static_cast<long>(k));
    return in_z * central_binomial_poly(k) * (kk * kk);
}

VerificationReport eq36_check(const BivariateF& f, unsigned k) {
    VerificationReport report("eq36");
    const Params params{{"r", f.r}, {"k", k}};
    try {
        report.expect_equal("eq36", params, eq36_rhs(f, k), binomial_sum_poly(2 * f.r + 1, k));
    } catch (const Error& e) {
        if (e.code() != Errc::denominator_not_cleared) throw;
        report.expect_true("eq36-denominators", params, false, e.what());
    }
    const Rational kk(static_cast<long>(k));
    report.expect_equal("F(2,k)=gandhi(k)", params, f(Rational(2), kk), gandhi_poly(f.r)(kk));
    return report;
}

VerificationReport eq36_verify(unsigned r, unsigned k_max) {
    const BivariateF f = tabulated_F(r);
    VerificationReport report("eq36");
    const Params params{{"r", r}};
    report.expect_equal("degree-in-k", params, f.degree_in_k(), static_cast<int>(r) - 1);
    report.expect_true("w-exponents", params, f.min_w_exponent() >= -(static_cast<int>(r) - 1), std::to_string(f.min_w_exponent()));
    for (unsigned k = 1; k <= k_max; ++k) report.merge(eq36_check(f, k));
    return report;
}

Reconstruction eq36_reconstruct(unsigned r, unsigned check_bound) {
    if (r == 0) throw std::invalid_argument("eq36_reconstruct: r must be positive");
    const auto keys = ansatz_keys(r);
    const Polynomial w = faulhaber_w();

    // basis[i] = w^{j+2q+2} (w+1)^e at w = z(z+1), the k-free shape of unknown i.
    std::vector<Polynomial> basis;
    basis.reserve(keys.size());
    for (const auto& [q, j] : keys) {
        const auto e = static_cast<unsigned>(ansatz_exponent(r, q, j));
        const Polynomial shape = Polynomial::monomial(1, j + 2 * q + 2) * pow(Polynomial::linear(1, 1), e);
        basis.push_back(compose(shape, w));
    }

    Matrix rows;
    std::vector<Rational> rhs;
    const unsigned k_limit = r + 8;
    std::vector<Rational> solution;
    unsigned fit_k_max = 0;
    for (unsigned k = 1; k <= k_limit; ++k) {
        const Rational kk(static_cast<long>(k));
        const Polynomial weight = central_binomial_poly(k) * (kk * kk * half_power(r + 1));
        std::vector<Polynomial> columns;
        columns.reserve(keys.size());
        std::size_t degree = 0;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            columns.push_back(basis[i] * weight * (-kk).pow(keys[i].second));
            degree = std::max<std::size_t>(degree, columns.back().coefficients().size());
        }
        const Polynomial target = binomial_sum_poly(2 * r + 1, k);
        degree = std::max<std::size_t>(degree, target.coefficients().size());
        for (std::size_t d = 0; d < degree; ++d) {
            std::vector<Rational> row(keys.size());
            for (std::size_t i = 0; i < keys.size(); ++i) row[i] = columns[i].coefficient(d);
            rows.push_back(std::move(row));
            rhs.push_back(target.coefficient(d));
        }
        if (k < std::min<unsigned>(r + 1, k_limit)) continue;
        try {
            solution = solve_consistent_system(rows, rhs);
            fit_k_max = k;
            break;
        } catch (const Error& e) {
            if (e.code() != Errc::singular) throw;
        }
    }
    if (fit_k_max == 0) throw Error(Errc::singular, "r=" + std::to_string(r) + ": no unique fit with k <= " + std::to_string(k_limit));

    Reconstruction out;
    out.r = r;
    for (std::size_t i = 0; i < keys.size(); ++i) out.coefficients[keys[i]] = solution[i];
    out.f = from_ansatz(r, out.coefficients);
    out.fit_k_max = fit_k_max;
    out.check_k_max = std::max(check_bound, fit_k_max + 2);
    out.verification = VerificationReport("eq36-reconstruct");
    for (unsigned k = 1; k <= out.check_k_max; ++k) {
        const Params params{{"r", r}, {"k", k}};
        out.verification.expect_equal("eq36", params, eq36_rhs(out.f, k), binomial_sum_poly(2 * r + 1, k));
    }
    return out;
}

}  // namespace powersum
