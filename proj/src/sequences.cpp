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

#include "powersum/sequences.hpp"

#include <stdexcept>
#include <string>

#include "powersum/error.hpp"
#include "powersum/linear_solve.hpp"

namespace powersum {

namespace {

// Table[k-1][n] = B_n^{(k)} for k = 1..max_k, n = 0..max_m.
std::vector<std::vector<Rational>> norlund_chain(unsigned max_m, unsigned max_k) {
    std::vector<std::vector<Rational>> table;
    table.reserve(max_k);
    std::vector<Rational> row(max_m + 1);
    for (unsigned n = 0; n <= max_m; ++n) row[n] = bernoulli(n);
    table.push_back(row);
    for (unsigned k = 1; k < max_k; ++k) {
        const auto& prev = table.back();
        std::vector<Rational> next(max_m + 1);
        for (unsigned n = 0; n <= max_m; ++n) {
            // B_n^{(k+1)} = (k - n)/k B_n^{(k)} - n B_{n-1}^{(k)}
            next[n] = Rational(static_cast<long>(k) - static_cast<long>(n), static_cast<long>(k)) * prev[n];
            if (n > 0) next[n] -= Rational(static_cast<long>(n)) * prev[n - 1];
        }
        table.push_back(std::move(next));
    }
    return table;
}

std::vector<Integer> ones_convolution_row(unsigned k, unsigned n) {
    // (1 + t + ... + t^{n-1})^k by repeated multiplication.
    std::vector<Integer> row{1};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Integer> next(row.size() + n - 1);
        for (std::size_t i = 0; i < row.size(); ++i) {
            for (unsigned j = 0; j < n; ++j) next[i + j] += row[i];
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Integer> window_recurrence_row(unsigned k, unsigned n) {
    // C(k, q)_n = sum_{i=0}^{n-1} C(k-1, q-i)_n, evaluated with prefix sums.
    std::vector<Integer> row{1};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Integer> prefix(row.size() + 1);
        for (std::size_t i = 0; i < row.size(); ++i) prefix[i + 1] = prefix[i] + row[i];
        const std::size_t len = row.size() + n - 1;
        std::vector<Integer> next(len);
        for (std::size_t q = 0; q < len; ++q) {
            const std::size_t hi = std::min(q + 1, row.size());
            const std::size_t lo = q + 1 >= n ? q + 1 - n : 0;
            if (lo < hi) next[q] = prefix[hi] - prefix[lo];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

SequenceCache& SequenceCache::shared() {
    static SequenceCache cache;
    return cache;
}

Rational SequenceCache::bernoulli(unsigned m) {
    std::lock_guard lock(bernoulli_mutex_);
    while (bernoulli_.size() <= m) {
        const auto next = static_cast<unsigned>(bernoulli_.size());
        if (next == 0) {
            bernoulli_.emplace_back(1);
            continue;
        }
        // sum_{q=0}^{next} C(next+1, q) B_q = 0, solved for B_next.
        Rational acc;
        for (unsigned q = 0; q < next; ++q) acc += Rational(binomial(next + 1, q)) * bernoulli_[q];
        bernoulli_.push_back(-acc / Rational(static_cast<long>(next) + 1));
    }
    return bernoulli_[m];
}

Integer SequenceCache::stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard lock(stirling_mutex_);
    while (stirling_.size() <= n) {
        const std::size_t row_index = stirling_.size();
        std::vector<Integer> row(row_index + 1);
        if (row_index == 0) {
            row[0] = 1;
        } else {
            const auto& prev = stirling_.back();
            for (std::size_t j = 1; j <= row_index; ++j) {
                // S(n, k) = S(n-1, k-1) + k S(n-1, k)
                row[j] = prev[j - 1];
                if (j < prev.size()) row[j] += prev[j] * static_cast<unsigned long>(j);
            }
        }
        stirling_.push_back(std::move(row));
    }
    return stirling_[n][k];
}

Polynomial SequenceCache::norlund_poly(unsigned m) {
    {
        std::lock_guard lock(norlund_mutex_);
        if (const auto it = norlund_.find(m); it != norlund_.end()) return it->second;
    }
    const unsigned nodes = m + 1;
    const auto chain = norlund_chain(m, nodes + 2);
    Matrix vandermonde(nodes, std::vector<Rational>(nodes));
    std::vector<Rational> values(nodes);
    for (unsigned i = 0; i < nodes; ++i) {
        const Rational k(static_cast<long>(i) + 1);
        for (unsigned j = 0; j < nodes; ++j) vandermonde[i][j] = k.pow(j);
        values[i] = chain[i][m];
    }
    Polynomial poly(solve_linear_system(std::move(vandermonde), std::move(values)));
    for (unsigned extra = nodes; extra < nodes + 2; ++extra) {
        const long k = static_cast<long>(extra) + 1;
        if (poly(Rational(k)) != chain[extra][m]) {
            throw Error(Errc::interpolation_inconsistent, "B_" + std::to_string(m) + " at k = " + std::to_string(k));
        }
    }
    std::lock_guard lock(norlund_mutex_);
    return norlund_.try_emplace(m, std::move(poly)).first->second;
}

std::vector<Integer> SequenceCache::poly_coefficient_row(unsigned k, unsigned n) {
    if (n == 0) throw std::invalid_argument("poly_coefficient: n must be positive");
    const auto key = std::make_pair(k, n);
    {
        std::lock_guard lock(rows_mutex_);
        if (const auto it = rows_.find(key); it != rows_.end()) return it->second;
    }
    auto row = ones_convolution_row(k, n);
    if (row != window_recurrence_row(k, n)) {
        throw std::logic_error("polynomial coefficient recurrences disagree at k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    std::lock_guard lock(rows_mutex_);
    return rows_.try_emplace(key, std::move(row)).first->second;
}

Rational bernoulli(unsigned m) { return SequenceCache::shared().bernoulli(m); }

Rational bernoulli_high_chain(unsigned m, unsigned k) {
    if (k == 0) throw std::invalid_argument("bernoulli_high_chain: k must be >= 1");
    return norlund_chain(m, k).back()[m];
}

Rational bernoulli_high(unsigned m, long k) { return norlund_poly(m)(Rational(k)); }

Polynomial norlund_poly(unsigned m) { return SequenceCache::shared().norlund_poly(m); }

Integer stirling2(long n, long k) {
    if (n < 0 || k < 0) return 0;
    return SequenceCache::shared().stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

Polynomial stirling_poly(unsigned m) {
    return rising_binomial_poly(m) * compose(norlund_poly(m), Polynomial::linear(-1, 0));
}

std::vector<Integer> poly_coefficient_row(unsigned k, unsigned n) { return SequenceCache::shared().poly_coefficient_row(k, n); }

Integer poly_coefficient(unsigned k, long q, unsigned n) {
    if (q < 0) return 0;
    const auto row = poly_coefficient_row(k, n);
    return static_cast<std::size_t>(q) < row.size() ? row[static_cast<std::size_t>(q)] : Integer(0);
}

Integer genocchi(unsigned r) {
    if (r == 0) throw std::invalid_argument("genocchi: r must be >= 1");
    const Rational g = Rational(2 * (1 - ipow(4, r))) * bernoulli(2 * r);
    if (!g.is_integer()) throw Error(Errc::non_integer, "G_" + std::to_string(2 * r) + " = " + g.to_string());
    return g.numerator();
}

Polynomial gandhi_poly(unsigned r) {
    if (r == 0) throw std::invalid_argument("gandhi_poly: r must be >= 1");
    const Polynomial k = Polynomial::identity();
    const Polynomial k_plus_1 = Polynomial::linear(1, 1);
    Polynomial f = Polynomial::constant(1);
    for (unsigned i = 1; i < r; ++i) f = k_plus_1 * k_plus_1 * compose(f, k_plus_1) - k * k * f;
    return f;
}

TrivariatePolynomial dumont_foata(unsigned r) {
    if (r == 0) throw std::invalid_argument("dumont_foata: r must be >= 1");
    const auto x = TrivariatePolynomial::variable(0);
    const auto y = TrivariatePolynomial::variable(1);
    const auto z = TrivariatePolynomial::variable(2);
    const auto weight = (z + x) * (z + y);
    const auto z2 = z * z;
    auto f = TrivariatePolynomial::constant(1);
    for (unsigned i = 1; i < r; ++i) f = weight * f.shift_z(1) - z2 * f;
    return f;
}

Polynomial p_poly(unsigned r) {
    const Polynomial k = Polynomial::identity();
    const Polynomial k_minus_1 = Polynomial::linear(1, -1);
    Polynomial p = Polynomial::constant(1);
    for (unsigned i = 0; i < r; ++i) p = k * k * p - k * k_minus_1 * compose(p, k_minus_1);
    return p;
}

VerificationReport recurrence_rel1_check(unsigned m, unsigned k) {
    if (k == 0) throw std::invalid_argument("recurrence_rel1_check: k must be >= 1");
    VerificationReport report("rec-rel1");
    const long mk = static_cast<long>(m + k);
    Rational lhs;
    for (unsigned q = 0; q <= m; ++q) lhs += Rational(binomial(mk, q) * stirling2(mk - q, k)) * bernoulli(q);
    const Rational rhs = Rational(mk, static_cast<long>(k)) * Rational(stirling2(mk - 1, k - 1));
    report.expect_equal("rec-rel1", {{"m", m}, {"k", k}}, lhs, rhs);
    return report;
}

VerificationReport impl1_check(unsigned m, unsigned k, unsigned r) {
    if (r == 0 || r > k) throw std::invalid_argument("impl1_check: requires 1 <= r <= k");
    VerificationReport report("impl1");
    const Params params{{"m", m}, {"k", k}, {"r", r}};
    const long mk = static_cast<long>(m + k);
    Rational lhs;
    for (unsigned q = 0; q <= m; ++q) lhs += Rational(binomial(mk, q) * stirling2(mk - q, k)) * bernoulli_high(q, r);
    const Rational rhs = Rational(binomial(mk, k), binomial(mk - r, k - r)) * Rational(stirling2(mk - r, k - r));
    report.expect_equal("impl1", params, lhs, rhs);

    Rational conv;
    for (unsigned q = 0; q <= m; ++q) {
        conv += Rational(binomial(m, q)) * bernoulli_high(m - q, -static_cast<long>(k)) * bernoulli_high(q, r);
    }
    report.expect_equal("impl1-convolution", params, conv, bernoulli_high(m, static_cast<long>(r) - static_cast<long>(k)));
    return report;
}

}  // namespace powersum
