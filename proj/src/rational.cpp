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

#include "powersum/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "powersum/error.hpp"

namespace powersum {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::not_representable: return "not representable";
        case Errc::singular: return "singular";
        case Errc::inconsistent: return "inconsistent";
        case Errc::interpolation_inconsistent: return "interpolation inconsistent";
        case Errc::non_unit_divisor: return "non-unit divisor";
        case Errc::non_integer: return "non-integer";
        case Errc::form_mismatch: return "form mismatch";
        case Errc::instance_too_large: return "instance too large";
        case Errc::not_tabulated: return "not tabulated";
        case Errc::denominator_not_cleared: return "denominator not cleared";
        case Errc::negative_exponent: return "negative exponent";
        case Errc::zero_polynomial: return "zero polynomial";
        case Errc::division_by_zero: return "division by zero";
        case Errc::evaluation_at_zero: return "evaluation at zero";
    }
    return "unknown";
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_decimal_integer(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw Error(Errc::division_by_zero);
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero);
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(Errc::division_by_zero);
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

}  // namespace powersum
