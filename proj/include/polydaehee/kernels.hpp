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

#ifndef POLYDAEHEE_KERNELS_HPP
#define POLYDAEHEE_KERNELS_HPP

// Exact convolution kernels. Each output coefficient is an independent sum,
// so the outer loop is split across OpenMP threads; the *_serial variants are
// the straight-line reference the parallel ones are tested against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polydaehee/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydaehee::kernels {

/// Below this many output coefficients the parallel kernels run serially.
inline constexpr std::size_t parallel_threshold = 8;

/// out[n] = sum_{i=0}^{n} f[i] g[n-i] for n = 0..order.
/// Requires f.size() and g.size() > order.
template <class T>
std::vector<T> cauchy_product_serial(std::span<const T> f, std::span<const T> g, std::size_t order)
{
    std::vector<T> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        T acc{};
        for (std::size_t i = 0; i <= n; ++i) {
            acc += f[i] * g[n - i];
        }
        out[n] = std::move(acc);
    }
    return out;
}

template <class T>
std::vector<T> cauchy_product(std::span<const T> f, std::span<const T> g, std::size_t order)
{
    std::vector<T> out(order + 1);
    const auto count = static_cast<std::int64_t>(order + 1);
    // High indices carry the most work; dynamic scheduling balances the triangle.
#pragma omp parallel for schedule(dynamic, 1) if (order + 1 >= parallel_threshold)
    for (std::int64_t idx = count - 1; idx >= 0; --idx) {
        const auto n = static_cast<std::size_t>(idx);
        T acc{};
        for (std::size_t i = 0; i <= n; ++i) {
            acc += f[i] * g[n - i];
        }
        out[n] = std::move(acc);
    }
    return out;
}

/// out[n] = sum_{j=0}^{n} C(n, j) a[n-j] b[j]: the coefficient rule for a
/// product of exponential generating functions.
template <class T>
std::vector<T> binomial_convolution_serial(std::span<const T> a, std::span<const T> b, std::size_t order)
{
    std::vector<T> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        T acc{};
        for (std::size_t j = 0; j <= n; ++j) {
            acc += (a[n - j] * b[j]) * binom(n, j);
        }
        out[n] = std::move(acc);
    }
    return out;
}

template <class T>
std::vector<T> binomial_convolution(std::span<const T> a, std::span<const T> b, std::size_t order)
{
    std::vector<T> out(order + 1);
    const auto count = static_cast<std::int64_t>(order + 1);
#pragma omp parallel for schedule(dynamic, 1) if (order + 1 >= parallel_threshold)
    for (std::int64_t idx = count - 1; idx >= 0; --idx) {
        const auto n = static_cast<std::size_t>(idx);
        T acc{};
        for (std::size_t j = 0; j <= n; ++j) {
            acc += (a[n - j] * b[j]) * binom(n, j);
        }
        out[n] = std::move(acc);
    }
    return out;
}

} // namespace polydaehee::kernels

#endif
