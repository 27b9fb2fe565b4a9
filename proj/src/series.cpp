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

#include "polydaehee/series.hpp"

#include <algorithm>
#include <string>

#include "polydaehee/kernels.hpp"

namespace polydaehee {

Series Series::make(std::size_t order, std::vector<MultiPoly> coeffs)
{
    if (coeffs.size() != order + 1) {
        throw SeriesError("series of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    }
    return Series(std::move(coeffs));
}

Series Series::from_rationals(std::size_t order, std::span<const Rational> coeffs)
{
    std::vector<MultiPoly> polys;
    polys.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        polys.emplace_back(c);
    }
    return make(order, std::move(polys));
}

Series Series::constant(const MultiPoly& c, std::size_t order)
{
    std::vector<MultiPoly> coeffs(order + 1);
    coeffs[0] = c;
    return Series(std::move(coeffs));
}

Series Series::x_pow(std::size_t power, std::size_t order)
{
    std::vector<MultiPoly> coeffs(order + 1);
    if (power <= order) {
        coeffs[power] = MultiPoly{1};
    }
    return Series(std::move(coeffs));
}

std::optional<std::size_t> Series::valuation() const
{
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!coeffs_[n].is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

Series Series::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw SeriesError("cannot extend a series of order " + std::to_string(order()) + " to order " +
                          std::to_string(new_order));
    }
    return Series(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1));
}

Series Series::zero_padded(std::size_t new_order) const
{
    auto coeffs = coeffs_;
    coeffs.resize(std::max(new_order, order()) + 1);
    return Series(std::move(coeffs));
}

Series& Series::operator+=(const Series& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

Series& Series::operator-=(const Series& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

Series operator*(Series lhs, const Rational& c)
{
    for (auto& p : lhs.coeffs_) {
        p *= c;
    }
    return lhs;
}

Series operator*(Series lhs, const MultiPoly& c)
{
    for (auto& p : lhs.coeffs_) {
        p = p * c;
    }
    return lhs;
}

Series Series::operator-() const { return *this * Rational{-1}; }

Series series_mul(const Series& f, const Series& g)
{
    const auto order = std::min(f.order(), g.order());
    return Series::make(order, kernels::cauchy_product(f.coeffs(), g.coeffs(), order));
}

Series series_mul_serial(const Series& f, const Series& g)
{
    const auto order = std::min(f.order(), g.order());
    return Series::make(order, kernels::cauchy_product_serial(f.coeffs(), g.coeffs(), order));
}

Series series_div(const Series& f, const Series& g)
{
    const auto v = g.valuation();
    if (!v) {
        throw SeriesError("zero divisor");
    }
    const MultiPoly& lead = g[*v];
    if (!lead.is_constant()) {
        throw SeriesError("non-constant unit");
    }
    const auto fv = f.valuation();
    const auto top = std::min(f.order(), g.order());
    if ((fv && *fv < *v) || top < *v) {
        throw SeriesError("valuation mismatch");
    }
    const Rational inverse_lead = lead.constant_term().reciprocal();
    const auto out_order = top - *v;
    std::vector<MultiPoly> h(out_order + 1);
    for (std::size_t n = 0; n <= out_order; ++n) {
        MultiPoly acc = f[n + *v];
        for (std::size_t i = 1; i <= n; ++i) {
            if (!g[*v + i].is_zero() && !h[n - i].is_zero()) {
                acc -= g[*v + i] * h[n - i];
            }
        }
        h[n] = acc * inverse_lead;
    }
    return Series::make(out_order, std::move(h));
}

Series series_pow(const Series& f, std::uint32_t a)
{
    Series result = Series::constant(MultiPoly{1}, f.order());
    Series base = f;
    while (a > 0) {
        if ((a & 1U) != 0) {
            result = series_mul(result, base);
        }
        a >>= 1U;
        if (a > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

Series series_compose(std::span<const Rational> outer, const Series& g)
{
    if (!g[0].is_zero()) {
        throw SeriesError("composition requires zero constant term");
    }
    const auto order = g.order();
    if (outer.empty()) {
        return Series::zero(order);
    }
    // Horner; terms beyond g.order vanish because val(g^j) >= j.
    const auto top = std::min(outer.size() - 1, order);
    Series acc = Series::constant(MultiPoly{outer[top]}, order);
    for (std::size_t j = top; j-- > 0;) {
        acc = series_mul(acc, g) + Series::constant(MultiPoly{outer[j]}, order);
    }
    return acc;
}

std::vector<MultiPoly> extract_sequence(const Series& f)
{
    std::vector<MultiPoly> members;
    members.reserve(f.order() + 1);
    Rational fact{1};
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) {
            fact *= Rational{static_cast<std::int64_t>(n)};
        }
        members.push_back(f[n] * fact);
    }
    return members;
}

} // namespace polydaehee
