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

#include "polydaehee/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polydaehee {

namespace {

constexpr unsigned field_bits = 21;
constexpr std::uint64_t field_mask = (std::uint64_t{1} << field_bits) - 1;
constexpr std::uint32_t max_exponent = static_cast<std::uint32_t>(field_mask);

unsigned shift_of(Symbol s)
{
    switch (s) {
    case Symbol::gamma:
        return 2 * field_bits;
    case Symbol::eta:
        return field_bits;
    case Symbol::omega:
        return 0;
    }
    return 0;
}

std::uint32_t exponent_of(std::uint64_t key, Symbol s)
{
    return static_cast<std::uint32_t>((key >> shift_of(s)) & field_mask);
}

// Sorts by key and folds equal keys, dropping cancelled terms.
std::vector<MultiPoly::Term> canonicalize(std::vector<MultiPoly::Term> raw)
{
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    std::vector<MultiPoly::Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().key == t.key) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) {
                out.pop_back();
            }
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

std::string_view symbol_name(Symbol s)
{
    switch (s) {
    case Symbol::gamma:
        return "g";
    case Symbol::eta:
        return "e";
    case Symbol::omega:
        return "w";
    }
    return "?";
}

std::uint32_t Exponents::of(Symbol s) const
{
    switch (s) {
    case Symbol::gamma:
        return gamma;
    case Symbol::eta:
        return eta;
    case Symbol::omega:
        return omega;
    }
    return 0;
}

MultiPoly::MultiPoly(Rational constant)
{
    if (!constant.is_zero()) {
        terms_.push_back({0, std::move(constant)});
    }
}

MultiPoly MultiPoly::variable(Symbol s)
{
    Exponents e;
    switch (s) {
    case Symbol::gamma:
        e.gamma = 1;
        break;
    case Symbol::eta:
        e.eta = 1;
        break;
    case Symbol::omega:
        e.omega = 1;
        break;
    }
    return monomial(e, Rational{1});
}

MultiPoly MultiPoly::monomial(const Exponents& e, Rational coeff)
{
    MultiPoly p;
    if (!coeff.is_zero()) {
        p.terms_.push_back({pack(e), std::move(coeff)});
    }
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::pair<Exponents, Rational>> terms)
{
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (auto& [e, c] : terms) {
        raw.push_back({pack(e), std::move(c)});
    }
    MultiPoly p;
    p.terms_ = canonicalize(std::move(raw));
    return p;
}

std::uint64_t MultiPoly::pack(const Exponents& e)
{
    if (e.gamma > max_exponent || e.eta > max_exponent || e.omega > max_exponent) {
        throw std::overflow_error("monomial exponent out of range");
    }
    return (std::uint64_t{e.gamma} << shift_of(Symbol::gamma)) | (std::uint64_t{e.eta} << shift_of(Symbol::eta)) |
           std::uint64_t{e.omega};
}

Exponents MultiPoly::unpack(std::uint64_t key)
{
    return {exponent_of(key, Symbol::gamma), exponent_of(key, Symbol::eta), exponent_of(key, Symbol::omega)};
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().key == 0); }

Rational MultiPoly::constant_term() const
{
    if (!terms_.empty() && terms_.front().key == 0) {
        return terms_.front().coeff;
    }
    return Rational{0};
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
    const auto key = pack(e);
    const auto it =
        std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, std::uint64_t k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) {
        return it->coeff;
    }
    return Rational{0};
}

std::uint32_t MultiPoly::degree(Symbol s) const
{
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, exponent_of(t.key, s));
    }
    return d;
}

std::uint32_t MultiPoly::total_degree() const
{
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, unpack(t.key).total());
    }
    return d;
}

Rational MultiPoly::evaluate(const Assignment& at) const
{
    Rational sum;
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (const Symbol s : all_symbols) {
            const auto e = exponent_of(t.key, s);
            if (e == 0) {
                continue;
            }
            const auto it = at.find(s);
            if (it == at.end()) {
                throw EvaluationError("missing assignment for symbol '" + std::string(symbol_name(s)) + "'");
            }
            term *= it->second.pow(static_cast<int>(e));
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(Symbol s, const MultiPoly& replacement) const
{
    const auto top = degree(s);
    if (top == 0) {
        return *this;
    }
    std::vector<MultiPoly> powers{MultiPoly{1}};
    for (std::uint32_t e = 1; e <= top; ++e) {
        powers.push_back(powers.back() * replacement);
    }
    const std::uint64_t strip = ~(field_mask << shift_of(s));
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        const auto e = exponent_of(t.key, s);
        const auto rest = t.key & strip;
        for (const auto& r : powers[e].terms_) {
            const auto rest_e = unpack(rest);
            const auto r_e = unpack(r.key);
            raw.push_back({pack({rest_e.gamma + r_e.gamma, rest_e.eta + r_e.eta, rest_e.omega + r_e.omega}),
                           t.coeff * r.coeff});
        }
    }
    MultiPoly out;
    out.terms_ = canonicalize(std::move(raw));
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const
{
    MultiPoly result{1};
    MultiPoly base = *this;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

bool MultiPoly::is_canonical() const
{
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) {
            return false;
        }
        if (i > 0 && terms_[i - 1].key >= terms_[i].key) {
            return false;
        }
    }
    return true;
}

MultiPoly& MultiPoly::add_scaled(const MultiPoly& rhs, int sign)
{
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->key < b->key)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->key < a->key) {
            out.push_back({b->key, sign > 0 ? b->coeff : -b->coeff});
            ++b;
        } else {
            Rational c = std::move(a->coeff);
            if (sign > 0) {
                c += b->coeff;
            } else {
                c -= b->coeff;
            }
            if (!c.is_zero()) {
                out.push_back({a->key, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) { return add_scaled(rhs, 1); }

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return add_scaled(rhs, -1); }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coeff *= rhs;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    for (const Symbol s : all_symbols) {
        if (std::uint64_t{lhs.degree(s)} + rhs.degree(s) > max_exponent) {
            throw std::overflow_error("monomial exponent out of range");
        }
    }
    MultiPoly out;
    if (rhs.terms_.size() == 1 || lhs.terms_.size() == 1) {
        // Single-term factor: keys shift uniformly, order is preserved.
        const auto& single = rhs.terms_.size() == 1 ? rhs.terms_.front() : lhs.terms_.front();
        const auto& many = rhs.terms_.size() == 1 ? lhs.terms_ : rhs.terms_;
        out.terms_.reserve(many.size());
        for (const auto& t : many) {
            out.terms_.push_back({t.key + single.key, t.coeff * single.coeff});
        }
        return out;
    }
    std::vector<MultiPoly::Term> raw;
    raw.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            raw.push_back({a.key + b.key, a.coeff * b.coeff});
        }
    }
    out.terms_ = canonicalize(std::move(raw));
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs)
{
    if (lhs.terms_.size() != rhs.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
        if (lhs.terms_[i].key != rhs.terms_[i].key || lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

MultiPoly falling_factorial(Symbol s, std::uint32_t j) { return falling_factorial(MultiPoly::variable(s), j); }

MultiPoly falling_factorial(const MultiPoly& base, std::uint32_t j)
{
    MultiPoly result{1};
    for (std::uint32_t i = 0; i < j; ++i) {
        result *= base - MultiPoly{static_cast<std::int64_t>(i)};
    }
    return result;
}

} // namespace polydaehee
