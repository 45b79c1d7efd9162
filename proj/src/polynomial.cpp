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

#include "powersum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "factor.hpp"
#include "powersum/error.hpp"

namespace powersum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(1, 1); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial{b, a}; }

Polynomial Polynomial::from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c.is_zero()) throw Error(Errc::division_by_zero);
    for (auto& a : coeffs_) a /= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::string Polynomial::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != 0) out += ",";
        out += '"' + coeffs_[i].to_string() + '"';
    }
    return out + "]";
}

std::string Polynomial::to_text(std::string_view variable) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational& c = coeffs_[idx];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
        } else if (!first) {
            out += " + ";
        }
        const Rational mag = c.abs();
        const bool unit = mag == Rational(1);
        if (idx == 0 || !unit) {
            out += mag.to_string();
            if (idx != 0) out += "*";
        }
        if (idx >= 1) out += variable;
        if (idx >= 2) out += "^" + std::to_string(idx);
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    const auto coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= q;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    const auto coeffs = p.coefficients();
    if (coeffs.size() <= 1) return {};
    std::vector<Rational> out(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(Errc::division_by_zero, "polynomial divisor");
    if (dividend.degree() < divisor.degree()) return {Polynomial{}, dividend};
    std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    const auto div = divisor.coefficients();
    const std::size_t dn = div.size() - 1;
    std::vector<Rational> quot(rem.size() - dn);
    const Rational lead_inv = div.back().inverse();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational factor = rem[i + dn] * lead_inv;
        quot[i] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= factor * div[j];
    }
    rem.resize(dn);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Synthetic division by (x - root); returns quotient and remainder p(root).
std::pair<std::vector<Rational>, Rational> synthetic_division(std::span<const Rational> coeffs, const Rational& root) {
    std::vector<Rational> quot(coeffs.size() - 1);
    Rational carry;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        carry = carry * root + coeffs[i];
        if (i > 0) quot[i - 1] = carry;
    }
    return {std::move(quot), carry};
}

}  // namespace

int root_multiplicity(const Polynomial& p, const Rational& root) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "root multiplicity is undefined");
    std::vector<Rational> current(p.coefficients().begin(), p.coefficients().end());
    int multiplicity = 0;
    while (current.size() > 1) {
        auto [quot, rem] = synthetic_division(current, root);
        if (!rem.is_zero()) break;
        current = std::move(quot);
        ++multiplicity;
    }
    return multiplicity;
}

std::set<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "every rational is a root");
    // Clear denominators to a primitive integer polynomial.
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) ints.push_back(c.numerator() * (lcm / c.denominator()));

    std::set<Rational> roots;
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(low));
    if (ints.size() == 1) return roots;

    const Polynomial reduced([&] {
        std::vector<Rational> c;
        for (const auto& v : ints) c.emplace_back(v);
        return c;
    }());
    const auto numerators = detail::positive_divisors(ints.front());
    const auto denominators = detail::positive_divisors(ints.back());
    for (const auto& q : denominators) {
        for (const auto& num : numerators) {
            for (int s : {1, -1}) {
                const Rational candidate(num * s, q);
                if (roots.contains(candidate)) continue;
                if (reduced(candidate).is_zero()) roots.insert(candidate);
            }
        }
    }
    return roots;
}

Polynomial binomial_poly(long k, long q) {
    if (q < 0) throw std::invalid_argument("binomial_poly: negative q");
    Polynomial result = Polynomial::constant(1);
    for (long i = 0; i < q; ++i) result *= Polynomial::linear(k, k - i);
    return result / Rational(factorial(static_cast<unsigned long>(q)));
}

Polynomial central_binomial_poly(long k) {
    if (k < 1) throw std::invalid_argument("central_binomial_poly: k must be >= 1");
    Polynomial result = Polynomial::constant(1);
    for (long i = 1; i < k; ++i) result *= Polynomial::linear(k, k - i);
    return result / Rational(factorial(static_cast<unsigned long>(k - 1)));
}

Polynomial rising_binomial_poly(long m) {
    if (m < 0) throw std::invalid_argument("rising_binomial_poly: negative m");
    Polynomial result = Polynomial::constant(1);
    for (long i = 1; i <= m; ++i) result *= Polynomial::linear(1, i);
    return result / Rational(factorial(static_cast<unsigned long>(m)));
}

}  // namespace powersum
