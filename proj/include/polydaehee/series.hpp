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

#ifndef POLYDAEHEE_SERIES_HPP
#define POLYDAEHEE_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "polydaehee/multipoly.hpp"

namespace polydaehee {

/// Construction, division and composition failures. The message names the
/// violated precondition ("zero divisor", "valuation mismatch", ...).
class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncated power series sum_{n=0}^{order} c_n x^n with MultiPoly
/// coefficients. Arithmetic results carry the smaller operand order.
class Series {
public:
    /// Throws SeriesError unless coeffs.size() == order + 1.
    static Series make(std::size_t order, std::vector<MultiPoly> coeffs);
    static Series from_rationals(std::size_t order, std::span<const Rational> coeffs);
    static Series constant(const MultiPoly& c, std::size_t order);
    static Series zero(std::size_t order) { return constant(MultiPoly{}, order); }
    /// x^power truncated at `order` (zero if power > order).
    static Series x_pow(std::size_t power, std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] std::span<const MultiPoly> coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient; empty when zero to the truncation.
    [[nodiscard]] std::optional<std::size_t> valuation() const;

    /// Throws SeriesError if new_order exceeds the current order.
    [[nodiscard]] Series truncated(std::size_t new_order) const;

    /// Extends with zero coefficients. Only the fault-injection path pads.
    [[nodiscard]] Series zero_padded(std::size_t new_order) const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(Series lhs, const Rational& c);
    friend Series operator*(Series lhs, const MultiPoly& c);
    Series operator-() const;

    friend bool operator==(const Series& lhs, const Series& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    explicit Series(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<MultiPoly> coeffs_;
};

/// Cauchy product truncated at min(f.order, g.order).
Series series_mul(const Series& f, const Series& g);

/// Reference Cauchy product; never threaded.
Series series_mul_serial(const Series& f, const Series& g);

/// Valuation-aware quotient h with f = g h. With v = val(g) the result has
/// order min(f.order, g.order) - v. Requires val(f) >= v and a nonzero
/// rational constant at g[v].
Series series_div(const Series& f, const Series& g);

/// f^a by repeated squaring; f^0 = 1.
Series series_pow(const Series& f, std::uint32_t a);

/// sum_j outer[j] g^j, truncated at g.order; g must have zero constant term.
Series series_compose(std::span<const Rational> outer, const Series& g);

/// [n! c_n for n = 0..order]: the family members encoded by an
/// exponential generating function.
std::vector<MultiPoly> extract_sequence(const Series& f);

} // namespace polydaehee

#endif
