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

#ifndef POLYDAEHEE_MULTIPOLY_HPP
#define POLYDAEHEE_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polydaehee/rational.hpp"

namespace polydaehee {

/// The three free parameters every family is polynomial in.
enum class Symbol : std::uint8_t { gamma = 0, eta = 1, omega = 2 };

inline constexpr std::array<Symbol, 3> all_symbols{Symbol::gamma, Symbol::eta, Symbol::omega};

/// Default short names used by the text renderer: g, e, w.
std::string_view symbol_name(Symbol s);

using Assignment = std::map<Symbol, Rational>;

/// Raised when a polynomial is evaluated without a value for one of its symbols.
class EvaluationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Exponents {
    std::uint32_t gamma = 0;
    std::uint32_t eta = 0;
    std::uint32_t omega = 0;

    [[nodiscard]] std::uint32_t of(Symbol s) const;
    [[nodiscard]] std::uint32_t total() const { return gamma + eta + omega; }

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Sparse polynomial over Rational in {gamma, eta, omega}.
///
/// Terms are kept sorted by a packed exponent key with no zero coefficients,
/// so structural equality is polynomial equality and the zero polynomial has
/// no terms.
class MultiPoly {
public:
    struct Term {
        std::uint64_t key;
        Rational coeff;
    };

    MultiPoly() = default;
    MultiPoly(Rational constant); // NOLINT(google-explicit-constructor)
    MultiPoly(std::int64_t constant) : MultiPoly(Rational{constant}) {} // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Symbol s);
    static MultiPoly monomial(const Exponents& e, Rational coeff);
    /// Sums duplicate exponents and drops zeros.
    static MultiPoly from_terms(std::vector<std::pair<Exponents, Rational>> terms);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Exponents& e) const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] std::uint32_t degree(Symbol s) const;
    [[nodiscard]] std::uint32_t total_degree() const;
    [[nodiscard]] bool contains(Symbol s) const { return degree(s) > 0; }

    /// Terms in storage order (ascending packed key).
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] static Exponents unpack(std::uint64_t key);
    [[nodiscard]] static std::uint64_t pack(const Exponents& e);

    /// Exact value at a point; every symbol that occurs must be assigned.
    [[nodiscard]] Rational evaluate(const Assignment& at) const;

    /// Polynomial composition: replaces `s` by `replacement` and re-expands.
    [[nodiscard]] MultiPoly substitute(Symbol s, const MultiPoly& replacement) const;

    [[nodiscard]] MultiPoly pow(std::uint32_t exponent) const;

    /// True when terms are sorted, unique, and nonzero.
    [[nodiscard]] bool is_canonical() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

private:
    std::vector<Term> terms_;

    MultiPoly& add_scaled(const MultiPoly& rhs, int sign);
};

/// (s)_j = s (s - 1) ... (s - j + 1); (s)_0 = 1.
MultiPoly falling_factorial(Symbol s, std::uint32_t j);

/// Falling factorial of an arbitrary polynomial argument.
MultiPoly falling_factorial(const MultiPoly& base, std::uint32_t j);

} // namespace polydaehee

#endif
