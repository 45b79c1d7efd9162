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

#include "powersum/laurent.hpp"

#include "powersum/error.hpp"

namespace powersum {

LaurentPolynomial::LaurentPolynomial(const Terms& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial::LaurentPolynomial(const Polynomial& p) {
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) add_term(static_cast<int>(i), coeffs[i]);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int exponent) {
    LaurentPolynomial r;
    r.add_term(exponent, c);
    return r;
}

void LaurentPolynomial::add_term(int exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentPolynomial::coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<int> LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational LaurentPolynomial::operator()(const Rational& x) const {
    if (x.is_zero()) throw Error(Errc::evaluation_at_zero, "Laurent polynomials are evaluated only at nonzero points");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        const Rational power = e >= 0 ? x.pow(static_cast<unsigned>(e)) : x.inverse().pow(static_cast<unsigned>(-e));
        acc += c * power;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

std::string LaurentPolynomial::to_text(std::string_view variable) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += variable;
        if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return out;
}

LaurentPolynomial pow(const LaurentPolynomial& a, unsigned exponent) {
    LaurentPolynomial result = LaurentPolynomial::monomial(1, 0);
    for (unsigned i = 0; i < exponent; ++i) result = result * a;
    return result;
}

Polynomial substitute(const LaurentPolynomial& a, const Polynomial& wpoly) {
    if (const auto low = a.min_exponent(); low && *low < 0) {
        throw Error(Errc::negative_exponent, "exponent " + std::to_string(*low) + " present; clear the denominator first");
    }
    Polynomial result;
    Polynomial power = Polynomial::constant(1);
    int current = 0;
    for (const auto& [e, c] : a.terms()) {
        for (; current < e; ++current) power *= wpoly;
        result += power * c;
    }
    return result;
}

}  // namespace powersum
