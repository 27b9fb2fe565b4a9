/*
   Copyright 2026 The polydaehee Authors

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

#include "polydaehee/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace polydaehee {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 data model expected");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

} // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw ArithmeticError("division by zero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ArithmeticError("malformed rational '" + std::string(text) + "' (expected p/q)");
    }
    mpz_class num{std::string(num_text)};
    const mpz_class den{std::string(den_text)};
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational binom(std::uint64_t n, std::uint64_t j)
{
    if (j > n) {
        return Rational{0};
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return Rational(r);
}

Rational factorial(std::uint64_t n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

} // namespace polydaehee
