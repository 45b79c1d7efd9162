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

#include "powersum/trivariate.hpp"

#include <stdexcept>
#include <vector>

namespace powersum {

TrivariatePolynomial TrivariatePolynomial::constant(const Rational& c) { return monomial(c, {0, 0, 0}); }

TrivariatePolynomial TrivariatePolynomial::monomial(const Rational& c, Exponents exponents) {
    TrivariatePolynomial p;
    p.add_term(exponents, c);
    return p;
}

TrivariatePolynomial TrivariatePolynomial::variable(unsigned index) {
    if (index > 2) throw std::invalid_argument("variable index must be 0, 1 or 2");
    Exponents e{0, 0, 0};
    e[index] = 1;
    return monomial(1, e);
}

void TrivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational TrivariatePolynomial::coefficient(const Exponents& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational() : it->second;
}

Rational TrivariatePolynomial::operator()(const Rational& x, const Rational& y, const Rational& z) const {
    Rational acc;
    for (const auto& [e, c] : terms_) acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
    return acc;
}

TrivariatePolynomial TrivariatePolynomial::shift_z(const Rational& shift) const {
    // (z + s)^e = sum_i C(e, i) s^{e-i} z^i
    TrivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        for (unsigned i = 0; i <= e[2]; ++i) {
            out.add_term({e[0], e[1], i}, c * Rational(binomial(e[2], i)) * shift.pow(e[2] - i));
        }
    }
    return out;
}

TrivariatePolynomial TrivariatePolynomial::permuted(const std::array<unsigned, 3>& order) const {
    TrivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        // The variable in slot i is replaced by variable order[i].
        Exponents moved{0, 0, 0};
        for (unsigned i = 0; i < 3; ++i) moved[order[i]] += e[i];
        out.add_term(moved, c);
    }
    return out;
}

Polynomial TrivariatePolynomial::specialize_xy(const Rational& x, const Rational& y) const {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : terms_) {
        if (coeffs.size() <= e[2]) coeffs.resize(e[2] + 1);
        coeffs[e[2]] += c * x.pow(e[0]) * y.pow(e[1]);
    }
    return Polynomial(std::move(coeffs));
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(const TrivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator-=(const TrivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
    TrivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
    return out;
}

std::string TrivariatePolynomial::to_text() const {
    if (terms_.empty()) return "0";
    static constexpr const char* kNames[] = {"x", "y", "z"};
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (unsigned i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const Rational mag = c.abs();
        if (mono.empty()) {
            out += mag.to_string();
        } else {
            out += (mag == Rational(1) ? "" : mag.to_string() + "*") + mono;
        }
    }
    return out;
}

}  // namespace powersum
