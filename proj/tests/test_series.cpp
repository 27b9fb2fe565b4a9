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
#include "oracle.hpp"
#include "polydaehee/atoms.hpp"

using namespace polydaehee;

namespace {

const MultiPoly g = MultiPoly::variable(Symbol::gamma);

Series rationals(std::vector<Rational> c)
{
    const auto order = c.size() - 1;
    return Series::from_rationals(order, c);
}

// Constant coefficients of a series as Rationals; fails the test on symbols.
std::vector<Rational> scalars(const Series& s)
{
    std::vector<Rational> out;
    for (const auto& c : s.coeffs()) {
        REQUIRE(c.is_constant());
        out.push_back(c.constant_term());
    }
    return out;
}

Series expm1_series(std::size_t order)
{
    std::vector<Rational> c{Rational(0)};
    for (std::size_t n = 1; n <= order; ++n) {
        c.push_back(factorial(n).reciprocal());
    }
    return rationals(c);
}

} // namespace

TEST_CASE("x/(e^x-1) to order 3")
{
    const auto q = series_div(Series::x_pow(1, 4), expm1_series(4));
    CHECK(q.order() == 3);
    CHECK(scalars(q) == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 12), 0});
}

TEST_CASE("extracting log(1+x)/x")
{
    const auto s = atom_build(atoms::log1p_over_x(), 3);
    const auto seq = extract_sequence(s);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == MultiPoly{1});
    CHECK(seq[1] == MultiPoly{Rational(-1, 2)});
    CHECK(seq[2] == MultiPoly{Rational(2, 3)});
    CHECK(seq[3] == MultiPoly{Rational(-3, 2)});
}

TEST_CASE("series construction errors")
{
    CHECK_THROWS_AS(Series::make(3, {MultiPoly{1}}), SeriesError);
    CHECK_THROWS_AS(Series::zero(2).truncated(5), SeriesError);
    CHECK(Series::zero(5).truncated(2).order() == 2);
    CHECK(Series::x_pow(4, 2) == Series::zero(2));
    CHECK(Series::zero(4).valuation() == std::nullopt);
    CHECK(Series::x_pow(3, 5).valuation() == 3);
}

TEST_CASE("division errors name the violated precondition")
{
    CHECK_THROWS_WITH(series_div(Series::x_pow(0, 3), Series::zero(3)), "zero divisor");
    CHECK_THROWS_WITH(series_div(Series::x_pow(0, 3), Series::constant(g, 3)), "non-constant unit");
    CHECK_THROWS_WITH(series_div(Series::x_pow(0, 3), Series::x_pow(1, 3)), "valuation mismatch");
    const std::vector<Rational> outer{0, 1};
    CHECK_THROWS_WITH(series_compose(outer, Series::x_pow(0, 3)), "composition requires zero constant term");
}

TEST_CASE("valuation-aware division shortens the order")
{
    // x^2 (1 + x) / x^2 at order 5 leaves order 3.
    const auto f = rationals({0, 0, 1, 1, 0, 0});
    const auto q = series_div(f, Series::x_pow(2, 5));
    CHECK(q.order() == 3);
    CHECK(scalars(q) == std::vector<Rational>{1, 1, 0, 0});
}

TEST_CASE("product properties on random series")
{
    gen::Source src(3);
    for (int i = 0; i < 60; ++i) {
        const std::size_t order = static_cast<std::size_t>(src.integer(0, 8));
        const auto f = src.series(order);
        const auto h = src.series(order);
        const auto k = src.series(order);
        CHECK(series_mul(f, h) == series_mul(h, f));
        CHECK(series_mul(series_mul(f, h), k) == series_mul(f, series_mul(h, k)));
        CHECK(series_mul(f, h + k) == series_mul(f, h) + series_mul(f, k));
        CHECK(series_mul(f, h) == series_mul_serial(f, h));
    }
}

TEST_CASE("division inverts multiplication")
{
    gen::Source src(5);
    for (int i = 0; i < 60; ++i) {
        const std::size_t order = static_cast<std::size_t>(src.integer(0, 8));
        const auto f = src.series(order);
        const auto u = src.unit_series(order);
        CHECK(series_div(series_mul(f, u), u) == f);
        CHECK(series_mul(series_div(f, u), u) == f);
    }
}

TEST_CASE("valuations add under multiplication")
{
    gen::Source src(9);
    for (int i = 0; i < 60; ++i) {
        const std::size_t order = 10;
        const auto p = static_cast<std::size_t>(src.integer(0, 4));
        const auto q = static_cast<std::size_t>(src.integer(0, 4));
        const auto f = series_mul(Series::x_pow(p, order), src.unit_series(order));
        const auto h = series_mul(Series::x_pow(q, order), src.unit_series(order));
        CHECK(series_mul(f, h).valuation() == p + q);
    }
}

TEST_CASE("composition")
{
    gen::Source src(13);
    const std::vector<Rational> identity{0, 1};
    for (int i = 0; i < 30; ++i) {
        auto s = src.series(6);
        s = s - Series::constant(s[0], 6);
        CHECK(series_compose(identity, s) == s);
    }
    // exp(log(1+x)) = 1 + x
    std::vector<Rational> exp_outer;
    for (std::size_t n = 0; n <= 10; ++n) {
        exp_outer.push_back(factorial(n).reciprocal());
    }
    const auto log1p = atom_build(atoms::log1p(), 10);
    const auto expected = Series::x_pow(0, 10) + Series::x_pow(1, 10);
    CHECK(series_compose(exp_outer, log1p) == expected);
}

TEST_CASE("powers")
{
    gen::Source src(17);
    for (int i = 0; i < 20; ++i) {
        const auto f = src.series(5);
        auto expected = Series::x_pow(0, 5);
        for (std::uint32_t a = 0; a < 5; ++a) {
            CHECK(series_pow(f, a) == expected);
            expected = series_mul(expected, f);
        }
    }
}

TEST_CASE("Li_1(1 - e^-x) is x")
{
    CHECK(polylog_of_one_minus_exp_neg(1, 16) == Series::x_pow(1, 16));
    CHECK(one_minus_exp_neg(16) == Series::x_pow(0, 16) - exp_series(MultiPoly{-1}, 16));
}

TEST_CASE("polylog composition matches the explicit double sum")
{
    for (int k = -3; k <= 4; ++k) {
        CAPTURE(k);
        const auto li = scalars(polylog_of_one_minus_exp_neg(k, 12));
        const auto ref = oracle::polylog_over_x(k, 11);
        CHECK(li[0] == Rational(0));
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(li[n] == ref[n - 1]);
        }
    }
    CHECK(polylog_coefficients(2, 4) == std::vector<Rational>{0, 1, Rational(1, 4), Rational(1, 9)});
    CHECK(polylog_coefficients(-2, 4) == std::vector<Rational>{0, 1, 4, 9});
}

TEST_CASE("scalar atoms against the oracle")
{
    const std::size_t n = 12;
    const std::vector<Rational> lambdas{1, 2, Rational(-3, 2), Rational(1, 3)};
    for (int k = -2; k <= 3; ++k) {
        CAPTURE(k);
        CHECK(scalars(atom_build(atoms::log1p_over_polylog(k), n)) == oracle::log1p_over_polylog(k, n));
        CHECK(scalars(atom_build(atoms::polylog_over_expm1(k), n)) == oracle::polylog_over_expm1(k, n));
        CHECK(scalars(atom_build(atoms::polylog_over_log1p(k), n)) == oracle::polylog_over_log1p(k, n));
        CHECK(scalars(atom_build(atoms::polylog_over_expm1(k, 3), n)) ==
              oracle::power(oracle::polylog_over_expm1(k, n), 3, n));
    }
    for (const auto& lambda : lambdas) {
        CAPTURE(lambda.to_string());
        for (std::uint32_t m = 1; m <= 3; ++m) {
            for (std::uint32_t a = 0; a <= 3; ++a) {
                CHECK(scalars(atom_build(atoms::apostol_bernoulli_core(m, lambda, a), n)) ==
                      oracle::power(oracle::bernoulli_core(m, lambda, n), a, n));
            }
        }
        CHECK(scalars(atom_build(atoms::apostol_euler_core(lambda, 2), n)) ==
              oracle::power(oracle::euler_core(lambda, n), 2, n));
        CHECK(scalars(atom_build(atoms::apostol_genocchi_core(lambda, 2), n)) ==
              oracle::power(oracle::genocchi_core(lambda, n), 2, n));
    }
}

TEST_CASE("atoms come back at exactly the requested order")
{
    for (std::size_t order = 0; order <= 6; ++order) {
        CHECK(atom_build(atoms::log1p_over_polylog(2), order).order() == order);
        CHECK(atom_build(atoms::apostol_bernoulli_core(3, Rational(1), 2), order).order() == order);
        CHECK(atom_build(atoms::one_plus_x_pow(g), order).order() == order);
    }
}

TEST_CASE("symbolic atoms")
{
    const auto s = atom_build(atoms::one_plus_x_pow(g), 3);
    CHECK(s[2] == (g * g - g) * Rational(1, 2));
    const auto shifted = atom_build(atoms::one_plus_x_pow_shifted(g, Rational(1)), 4);
    const auto plain = atom_build(atoms::one_plus_x_pow(g + MultiPoly{1}), 4);
    CHECK(shifted == plain);
    const auto ex = atom_build(atoms::exp_linear(g), 3);
    CHECK(ex[3] == g * g * g * Rational(1, 6));
}

TEST_CASE("atom validation")
{
    CHECK_THROWS_WITH(validate(atoms::apostol_euler_core(Rational(-1), 1)), "lambda must not equal -1");
    CHECK_THROWS_WITH(validate(atoms::apostol_genocchi_core(Rational(-1), 1)), "lambda must not equal -1");
    CHECK_NOTHROW(validate(atoms::apostol_bernoulli_core(1, Rational(-1), 1)));
    CHECK_THROWS_WITH(validate(atoms::apostol_bernoulli_core(0, Rational(2), 1)), "m must be a positive integer");
    CHECK_THROWS_AS(validate(atoms::exp_linear(g * g)), ParameterError);
    CHECK(atom_kind_name(AtomKind::log1p_over_polylog) == "LOG1P_OVER_POLYLOG");
}

TEST_CASE("Bernoulli numbers against the recurrence")
{
    const auto core = scalars(atom_build(atoms::apostol_bernoulli_core(1, Rational(1), 1), 20));
    const auto ref = oracle::bernoulli_numbers(21);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(core[n] * factorial(n) == ref[n]);
    }
}

TEST_CASE("small products and truncation")
{
    const auto e = MultiPoly::variable(Symbol::eta);
    CHECK(series_mul(rationals({1, 1, 0}), rationals({1, -1, 0})) == rationals({1, 0, -1}));
    CHECK(series_mul(Series::x_pow(1, 1), Series::x_pow(1, 1)) == Series::zero(1));
    const auto lin_g = Series::make(2, {MultiPoly{1}, g, MultiPoly{}});
    const auto lin_e = Series::make(2, {MultiPoly{1}, e, MultiPoly{}});
    CHECK(series_mul(lin_g, lin_e) == Series::make(2, {MultiPoly{1}, g + e, g * e}));
    // Mixed orders truncate to the smaller one.
    CHECK(series_mul(rationals({1, 1, 1, 1}), rationals({1, 1})).order() == 1);
    CHECK(series_div(rationals({2, 3, 4}), Series::x_pow(0, 2)) == rationals({2, 3, 4}));
    CHECK(series_pow(rationals({1, 1, 0}), 2) == rationals({1, 2, 1}));
    CHECK(series_pow(Series::x_pow(1, 3), 2) == Series::x_pow(2, 3));
}

TEST_CASE("composition examples")
{
    const std::vector<Rational> geometric{1, 1, 1};
    CHECK(series_compose(geometric, Series::x_pow(1, 2)) == rationals({1, 1, 1}));
    const auto li1 = polylog_coefficients(1, 3);
    CHECK(series_compose(li1, one_minus_exp_neg(2)) == rationals({0, 1, 0}));
    const auto li2 = polylog_coefficients(2, 3);
    CHECK(series_compose(li2, one_minus_exp_neg(2)) == rationals({0, 1, Rational(-1, 4)}));
}

TEST_CASE("atom examples")
{
    CHECK(atom_build(atoms::one_plus_x_pow(g), 2) ==
          Series::make(2, {MultiPoly{1}, g, (g * g - g) * Rational(1, 2)}));
    CHECK(scalars(atom_build(atoms::log1p_over_polylog(2), 1)) == std::vector<Rational>{1, Rational(-1, 4)});
    CHECK(scalars(atom_build(atoms::apostol_bernoulli_core(1, Rational(2), 1), 3)) ==
          std::vector<Rational>{0, 1, -2, 3});
    CHECK(atom_build(atoms::apostol_bernoulli_core(1, Rational(2), 0), 3) == Series::x_pow(0, 3));
    const auto e = MultiPoly::variable(Symbol::eta);
    CHECK(extract_sequence(atom_build(atoms::exp_linear(e), 2)) == std::vector<MultiPoly>{MultiPoly{1}, e, e * e});
    CHECK(extract_sequence(Series::x_pow(0, 3)) ==
          std::vector<MultiPoly>{MultiPoly{1}, MultiPoly{}, MultiPoly{}, MultiPoly{}});
}
