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

#include <array>
#include <algorithm>
#include <stdexcept>
#include <string>

#include "powersum/error.hpp"
#include "powersum/faulhaber.hpp"
#include "powersum/powersums.hpp"
#include "powersum/sequences.hpp"
#include "powersum/series.hpp"

namespace powersum {

namespace {

Rational sign(unsigned q) { return (q % 2 == 0) ? Rational(1) : Rational(-1); }

Rational R(const Integer& v) { return Rational(v); }

}  // namespace

VerificationReport recurrence_id_check(unsigned m, unsigned k, unsigned r, unsigned n) {
    if (r == 0 || r > k) throw std::invalid_argument("recurrence_id_check: requires 1 <= r <= k");
    if (n == 0) throw std::invalid_argument("recurrence_id_check: n must be positive");
    VerificationReport report("id");
    const Params params{{"m", m}, {"k", k}, {"r", r}, {"n", n}};
    const long mk = static_cast<long>(m + k);

    Integer lhs;
    for (unsigned q = 0; q <= m; ++q) {
        const Integer term = binomial(mk, q) * stirling2(mk - q, k) * power_sum_high(q, r, n);
        if (q % 2 == 0) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    Integer rhs_sum;
    for (unsigned j = 0; j <= m; ++j) {
        const long top = mk - static_cast<long>(r) - static_cast<long>(j);
        const Integer term = binomial(mk, top) * stirling2(top, k - r) * stirling2(r + j, r) * ipow(n, r + j);
        if (j % 2 == 0) {
            rhs_sum += term;
        } else {
            rhs_sum -= term;
        }
    }
    const Rational rhs = Rational(rhs_sum, binomial(k, r));
    report.expect_equal("id", params, R(lhs), rhs);
    if (r == k) {
        const Integer special = stirling2(mk, k) * ipow(n, m + k);
        report.expect_equal("id-r-equals-k", params, R(lhs), m % 2 == 0 ? R(special) : R(-special));
    }
    return report;
}

VerificationReport theorem1_consistency_check(unsigned m, unsigned k, unsigned n) {
    VerificationReport report("theorem1-consistency");
    const Params params{{"m", m}, {"k", k}, {"n", n}};
    const Rational at(static_cast<long>(n));
    const Rational direct = R(power_sum_high(m, k, n));
    report.expect_equal("stirling-form", params, power_sum_high_poly_stirling_form(m, k)(at), direct);
    report.expect_equal("convolution-form", params, power_sum_high_poly_convolution_form(m, k)(at), direct);
    report.expect_equal("binomial-convolution", params, R(power_sum_high_convolution(m, k, n)), direct);
    report.expect_equal("series-oracle", params, series::egf_power_sum(n, k, m)[m], direct);
    return report;
}

VerificationReport theorem2_report(unsigned m, unsigned k) {
    if (m == 0 || k == 0) throw std::invalid_argument("theorem2_report: m and k must be positive");
    VerificationReport report("theorem2");
    const Params params{{"m", m}, {"k", k}};
    const Polynomial q = q_poly(m, k);
    const int expected = (m % 2 == 0 || m == 1) ? 1 : 2;
    report.expect_equal("multiplicity-at-minus-1", params, root_multiplicity(q, Rational(-1)), expected);

    const Rational kk(static_cast<long>(k));
    report.expect_equal("first-derivative", params, derivative(q)(Rational(-1)), -kk * bernoulli(m));

    if (m == 2) {
        // (k/12)(z+1)((3k+1)z + 3k-1)
        const Polynomial display = Polynomial::linear(1, 1) * Polynomial::linear(3 * kk + 1, 3 * kk - 1) * (kk / Rational(12));
        report.expect_equal("q2-factorization", params, q, display);
        report.expect_equal("q2-root", params, q(-(3 * kk - 1) / (3 * kk + 1)), Rational(0));
    }
    if (m == 3) {
        // (k^2/8)(z+1)^2((k+1)z + k-1)
        const Polynomial z1 = Polynomial::linear(1, 1);
        const Polynomial display = z1 * z1 * Polynomial::linear(kk + 1, kk - 1) * (kk * kk / Rational(8));
        report.expect_equal("q3-factorization", params, q, display);
        if (k >= 2) report.expect_equal("q3-root", params, q(-(kk - 1) / (kk + 1)), Rational(0));
    }
    return report;
}

VerificationReport lemma1_check(unsigned m, unsigned k) {
    if (m == 0 || k == 0) throw std::invalid_argument("lemma1_check: m and k must be positive");
    VerificationReport report("lemma1");
    const Params params{{"m", m}, {"k", k}};
    const long kl = static_cast<long>(k);
    const Rational kk(kl);
    const Rational mm(static_cast<long>(m));

    Rational first;
    for (unsigned q = 0; q + 1 <= m; ++q) {
        first += Rational(binomial(m, q) * (m - q)) * bernoulli_high(q, kl) * bernoulli_high(m - q, -kl);
    }
    const Rational first_rhs = m == 1 ? -kk * bernoulli(1) : kk * bernoulli(m);
    report.expect_equal("eq191", params, first, first_rhs);
    report.expect_equal("eq191-unified", params, first, sign(m) * kk * bernoulli(m));

    if (m >= 2) {
        Rational second;
        for (unsigned q = 0; q + 2 <= m; ++q) {
            second += Rational(binomial(m, q) * (m - q) * (m - q - 1)) * bernoulli_high(q, kl) * bernoulli_high(m - q, -kl);
        }
        Rational second_rhs;
        if (m == 2) {
            second_rhs = -kk * (3 * kk - 1) * bernoulli(2) - 2 * kk * kk * bernoulli(1);
        } else {
            second_rhs = -kk * ((mm + 1) * kk - mm + 1) * bernoulli(m) + mm * kk * kk * bernoulli(m - 1);
        }
        report.expect_equal("eq1911", params, second, second_rhs);

        // Coefficient of t^m/m! in k^2 (A-1)^2 - k (A^2 - tA - 1), A(t) = t e^t/(e^t - 1).
        Rational inner;
        Rational full;
        for (unsigned q = 0; q <= m; ++q) {
            const Rational term = Rational(binomial(m, q)) * bernoulli(q) * bernoulli(m - q);
            full += term;
            if (q >= 1 && q + 1 <= m) inner += term;
        }
        const Rational unified = kk * kk * sign(m) * inner - kk * (sign(m) * full - mm * sign(m - 1) * bernoulli(m - 1));
        report.expect_equal("eq1911-unified", params, second, unified);
    }
    return report;
}

VerificationReport kimura_root_check(unsigned m) {
    if (m == 0) throw std::invalid_argument("kimura_root_check: m must be positive");
    VerificationReport report("kimura");
    const Params params{{"m", m}};
    const Polynomial s = power_sum_high_poly(m, 1);
    const auto roots = rational_roots(s);
    const std::array<Rational, 3> allowed{Rational(0), Rational(-1), Rational(-1, 2)};
    for (const auto& root : roots) {
        const bool ok = std::find(allowed.begin(), allowed.end(), root) != allowed.end();
        report.expect_true("root-in-{0,-1,-1/2}", params, ok, "root " + root.to_string());
    }
    const bool half_is_root = roots.contains(Rational(-1, 2));
    report.expect_equal("minus-half-root-iff-even", params, half_is_root ? 1 : 0, m % 2 == 0 ? 1 : 0);
    if (half_is_root) report.expect_equal("minus-half-simple", params, root_multiplicity(s, Rational(-1, 2)), 1);
    return report;
}

VerificationReport conjecture_relationsh_check(unsigned m, unsigned k, unsigned n, std::uint64_t cap) {
    VerificationReport report("conjecture");
    const Params params{{"m", m}, {"k", k}, {"n", n}};
    const Integer brute = multiple_sum_bruteforce(m, k, n, cap);
    const bool equal = report.expect_equal("multiple-sum-vs-binomial-sum", params, brute, binomial_sum(m, k, n));
    const auto coeffs = multiple_sum_coefficients(k, n, cap);
    report.expect_equal("coefficient-form", params, coeffs.evaluate(m), brute);
    if (equal) {
        for (unsigned q = 1; q <= k * n; ++q) {
            if (coeffs[q] <= 0) {
                report.notes.push_back(format_params(params) + ": c_" + std::to_string(q) + " = " + coeffs[q].get_str() + " is not positive");
            }
        }
    }
    return report;
}

VerificationReport eq23_check(unsigned m, unsigned k) {
    if (m % 2 == 0) throw std::invalid_argument("eq23_check: m must be odd");
    VerificationReport report("eq23");
    const Params params{{"m", m}, {"k", k}};
    Integer rhs;
    for (unsigned q = 0; q <= 2 * k; ++q) {
        const unsigned base = q > k ? q - k : k - q;
        rhs += binomial(2L * k, q) * ipow(base, m);
    }
    const Integer value = binomial_sum_at_1(m, k);
    report.expect_equal("eq23", params, Integer(2 * value), rhs);
    if (k >= 1) report.expect_equal("n=1-specialization", params, value, binomial_sum(m, k, 1));
    return report;
}

VerificationReport eq241_check(unsigned m, unsigned k) {
    if (k == 0) throw std::invalid_argument("eq241_check: k must be positive");
    VerificationReport report("eq241");
    const Params params{{"m", m}, {"k", k}};
    const Integer rhs = Integer(k * k) * binomial_sum_at_1(m, k) - Integer(2 * k * (2 * k - 1)) * binomial_sum_at_1(m, k - 1);
    report.expect_equal("eq241", params, binomial_sum_at_1(m + 2, k), rhs);
    return report;
}

VerificationReport eq251_check(unsigned r, unsigned k) {
    if (k == 0) throw std::invalid_argument("eq251_check: k must be positive");
    VerificationReport report("eq251");
    const Params params{{"r", r}, {"k", k}};
    const Rational kk(static_cast<long>(k));
    const Rational value = R(binomial_sum_at_1(2 * r + 1, k));
    report.expect_equal("eq251", params, value, p_poly(r)(kk) * kk / Rational(2) * R(binomial(2L * k, k)));
    if (r >= 1) {
        const Rational gandhi = sign(r + 1) * gandhi_poly(r)(-kk) * kk * kk * R(binomial(2L * k - 1, k - 1));
        report.expect_equal("gandhi-form", params, value, gandhi);
    }
    return report;
}

VerificationReport prop32_check(unsigned k) {
    if (k == 0) throw std::invalid_argument("prop32_check: k must be positive");
    VerificationReport report("prop32");
    const Polynomial half_w = Polynomial{0, Rational(1, 2), Rational(1, 2)};
    const Polynomial rhs = half_w * central_binomial_poly(k) * Rational(static_cast<long>(k));
    report.expect_equal("prop32", {{"k", k}}, binomial_sum_poly(1, k), rhs);
    return report;
}

VerificationReport lemma2_check(unsigned k) {
    if (k == 0) throw std::invalid_argument("lemma2_check: k must be positive");
    VerificationReport report("lemma2");
    Polynomial rhs;
    for (unsigned q = 0; q < k; ++q) {
        rhs += binomial_poly(k, q) * Polynomial::monomial(Rational(static_cast<long>(k - q)), k - q - 1);
    }
    rhs /= Rational(static_cast<long>(k));
    report.expect_equal("eq10", {{"k", k}}, central_binomial_poly(k), rhs);
    return report;
}

VerificationReport faulhaber_form_check(unsigned m) {
    if (m == 0) throw std::invalid_argument("faulhaber_form_check: m must be positive");
    VerificationReport report("faulhaber-form");
    const Params params{{"m", m}};
    const Polynomial s = power_sum_poly(m);
    try {
        const FaulhaberForm form = to_faulhaber_form(s);
        const auto expected = m % 2 == 1 ? FaulhaberForm::Kind::odd_case : FaulhaberForm::Kind::even_case;
        report.expect_true("kind", params, form.kind == expected,
                           form.kind == FaulhaberForm::Kind::odd_case ? "odd-case" : "even-case");
        report.expect_equal("round-trip", params, form.expand(), s);
    } catch (const Error& e) {
        report.expect_true("representable", params, false, e.what());
    }
    return report;
}

VerificationReport gandhi_genocchi_check(unsigned r) {
    if (r == 0) throw std::invalid_argument("gandhi_genocchi_check: r must be positive");
    VerificationReport report("gandhi-genocchi");
    const Params params{{"r", r}};
    const Polynomial f = gandhi_poly(r);
    const Integer g = genocchi(r);
    report.expect_equal("F_r(0)=|G_2r|", params, f(Rational(0)), R(abs(g)));
    report.expect_equal("genocchi-series", params, R(g), series::egf_genocchi(2 * r)[2 * r]);
    // P_r(k) = (-1)^{r+1} k F_r(-k)
    const Polynomial k = Polynomial::identity();
    report.expect_equal("p-relation", params, p_poly(r), k * compose(f, Polynomial::linear(-1, 0)) * sign(r + 1));
    report.expect_equal("dumont-foata-specialization", params, dumont_foata(r).specialize_xy(1, 1), f);
    report.expect_equal("F_r(1,1,1)=|G_2r+2|", params, dumont_foata(r)(1, 1, 1), R(abs(genocchi(r + 1))));
    return report;
}

VerificationReport dumont_foata_symmetry_check(unsigned r) {
    if (r == 0) throw std::invalid_argument("dumont_foata_symmetry_check: r must be positive");
    VerificationReport report("dumont-foata-symmetry");
    const Params params{{"r", r}};
    const auto f = dumont_foata(r);
    std::array<unsigned, 3> order{0, 1, 2};
    do {
        const auto permuted = f.permuted(order);
        report.expect_true("permutation " + std::to_string(order[0]) + std::to_string(order[1]) + std::to_string(order[2]), params,
                           permuted == f, permuted.to_text());
    } while (std::next_permutation(order.begin(), order.end()));
    return report;
}

}  // namespace powersum
