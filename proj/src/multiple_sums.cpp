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

#include <stdexcept>
#include <string>

#include "powersum/error.hpp"
#include "powersum/powersums.hpp"

namespace powersum {

namespace {

void check_cap(unsigned k, unsigned n, std::uint64_t cap) {
    if (k == 0 || n == 0) throw std::invalid_argument("multiple sums need k >= 1 and n >= 1");
    const Integer count = multiple_sum_tuple_count(k, n);
    if (count > Integer(std::to_string(cap))) {
        throw Error(Errc::instance_too_large,
                    "k=" + std::to_string(k) + " n=" + std::to_string(n) + " needs " + count.get_str() + " tuples, cap is " + std::to_string(cap));
    }
}

// Calls visit(tuple) for every 1 <= q_1 <= ... <= q_k <= top.
template <class Visit>
void for_each_tuple(unsigned k, unsigned top, Visit&& visit) {
    std::vector<unsigned> q(k, 1);
    while (true) {
        visit(q);
        // Advance the rightmost position that can still grow, then reset the
        // tail to keep the tuple non-decreasing.
        std::size_t pos = k;
        while (pos > 0 && q[pos - 1] == top) --pos;
        if (pos == 0) return;
        const unsigned v = ++q[pos - 1];
        for (std::size_t i = pos; i < k; ++i) q[i] = v;
    }
}

}  // namespace

Integer MultipleSumCoefficients::evaluate(unsigned m) const {
    Integer acc;
    for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * ipow(static_cast<unsigned long>(i + 1), m);
    return acc;
}

Integer multiple_sum_tuple_count(unsigned k, unsigned n) { return binomial(static_cast<long>(k) * n + k - 1, k); }

Integer multiple_sum_bruteforce(unsigned m, unsigned k, unsigned n, std::uint64_t cap) {
    if (m % 2 == 0) throw std::invalid_argument("multiple sums are defined for odd m only");
    check_cap(k, n, cap);
    const long top = static_cast<long>(k) * n;
    // powers[b + top] = b^m; odd m keeps the sign of b, and 0 contributes 0.
    std::vector<Integer> powers(2 * static_cast<std::size_t>(top) + 1);
    for (long b = -top; b <= top; ++b) {
        const Integer mag = ipow(static_cast<unsigned long>(b < 0 ? -b : b), m);
        powers[static_cast<std::size_t>(b + top)] = b < 0 ? Integer(-mag) : mag;
    }
    Integer total;
    for_each_tuple(k, static_cast<unsigned>(top), [&](const std::vector<unsigned>& q) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            const long base = static_cast<long>(q[j]) - static_cast<long>(j) * n;
            total += powers[static_cast<std::size_t>(base + top)];
        }
    });
    return total;
}

MultipleSumCoefficients multiple_sum_coefficients(unsigned k, unsigned n, std::uint64_t cap) {
    check_cap(k, n, cap);
    const long top = static_cast<long>(k) * n;
    std::vector<long> counts(2 * static_cast<std::size_t>(top) + 1);
    for_each_tuple(k, static_cast<unsigned>(top), [&](const std::vector<unsigned>& q) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            const long base = static_cast<long>(q[j]) - static_cast<long>(j) * n;
            ++counts[static_cast<std::size_t>(base + top)];
        }
    });
    MultipleSumCoefficients out{k, n, std::vector<Integer>(static_cast<std::size_t>(top))};
    for (long q = 1; q <= top; ++q) {
        out.c[static_cast<std::size_t>(q - 1)] = Integer(counts[static_cast<std::size_t>(top + q)]) - counts[static_cast<std::size_t>(top - q)];
    }
    return out;
}

}  // namespace powersum
