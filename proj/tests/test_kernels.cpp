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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "polydaehee/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polydaehee;

namespace {

struct Threads {
    explicit Threads(int n)
    {
#ifdef _OPENMP
        saved = omp_get_max_threads();
        omp_set_num_threads(n);
#else
        (void)n;
#endif
    }
    ~Threads()
    {
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
    }
    int saved = 1;
};

std::vector<MultiPoly> random_polys(gen::Source& src, std::size_t count)
{
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(src.poly(2, 3));
    }
    return out;
}

} // namespace

TEST_CASE("parallel kernels agree with the serial reference")
{
    const Threads threads(4);
    gen::Source src(2026);
    for (const std::size_t order : {0, 1, 5, 7, 8, 9, 20, 33}) {
        CAPTURE(order);
        const auto f = random_polys(src, order + 1);
        const auto h = random_polys(src, order + 1);
        const std::span<const MultiPoly> fs(f);
        const std::span<const MultiPoly> hs(h);
        CHECK(kernels::cauchy_product(fs, hs, order) == kernels::cauchy_product_serial(fs, hs, order));
        CHECK(kernels::binomial_convolution(fs, hs, order) == kernels::binomial_convolution_serial(fs, hs, order));
    }
}

TEST_CASE("kernels on rationals")
{
    const Threads threads(3);
    gen::Source src(1);
    std::vector<Rational> f;
    std::vector<Rational> h;
    for (int i = 0; i < 40; ++i) {
        f.push_back(src.rational(50));
        h.push_back(src.rational(50));
    }
    const std::span<const Rational> fs(f);
    const std::span<const Rational> hs(h);
    CHECK(kernels::cauchy_product(fs, hs, 39) == kernels::cauchy_product_serial(fs, hs, 39));
    CHECK(kernels::binomial_convolution(fs, hs, 39) == kernels::binomial_convolution_serial(fs, hs, 39));
}

TEST_CASE("kernel examples")
{
    // (1 + x)(1 + x) = 1 + 2x + x^2
    const std::vector<Rational> one_plus_x{1, 1, 0};
    const std::span<const Rational> s(one_plus_x);
    CHECK(kernels::cauchy_product(s, s, 2) == std::vector<Rational>{1, 2, 1});
    // e^x e^x = e^(2x): all-ones sequences convolve to powers of two.
    const std::vector<Rational> ones(6, Rational(1));
    const std::span<const Rational> o(ones);
    CHECK(kernels::binomial_convolution(o, o, 5) == std::vector<Rational>{1, 2, 4, 8, 16, 32});
    // Output shorter than the inputs.
    CHECK(kernels::cauchy_product(o, o, 2) == std::vector<Rational>{1, 2, 3});
}
