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

#ifndef POLYDAEHEE_TESTS_GENERATORS_HPP
#define POLYDAEHEE_TESTS_GENERATORS_HPP

// Seeded random values for the property tests.

#include <cstdint>
#include <random>

#include "polydaehee/multipoly.hpp"
#include "polydaehee/series.hpp"

namespace gen {

using polydaehee::Exponents;
using polydaehee::MultiPoly;
using polydaehee::Rational;

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational(std::int64_t bound = 9)
    {
        return Rational{integer(-bound, bound), integer(1, bound)};
    }

    Rational nonzero_rational(std::int64_t bound = 9)
    {
        Rational r;
        while (r.is_zero()) {
            r = rational(bound);
        }
        return r;
    }

    MultiPoly poly(std::uint32_t max_degree = 3, int max_terms = 4)
    {
        std::vector<std::pair<Exponents, Rational>> terms;
        const auto count = integer(0, max_terms);
        for (std::int64_t i = 0; i < count; ++i) {
            Exponents e;
            e.gamma = static_cast<std::uint32_t>(integer(0, max_degree));
            e.eta = static_cast<std::uint32_t>(integer(0, max_degree));
            e.omega = static_cast<std::uint32_t>(integer(0, max_degree));
            terms.emplace_back(e, rational());
        }
        return MultiPoly::from_terms(std::move(terms));
    }

    polydaehee::Series series(std::size_t order, std::uint32_t max_degree = 1)
    {
        std::vector<MultiPoly> coeffs;
        for (std::size_t i = 0; i <= order; ++i) {
            coeffs.push_back(poly(max_degree, 2));
        }
        return polydaehee::Series::make(order, std::move(coeffs));
    }

    polydaehee::Series unit_series(std::size_t order)
    {
        auto s = series(order, 1);
        auto coeffs = std::vector<MultiPoly>(s.coeffs().begin(), s.coeffs().end());
        coeffs[0] = nonzero_rational();
        return polydaehee::Series::make(order, std::move(coeffs));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace gen

#endif
