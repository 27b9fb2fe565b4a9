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
#include "polydaehee/render.hpp"

using namespace polydaehee;

namespace {

const MultiPoly g = MultiPoly::variable(Symbol::gamma);
const MultiPoly e = MultiPoly::variable(Symbol::eta);
const MultiPoly w = MultiPoly::variable(Symbol::omega);

Assignment random_point(gen::Source& src)
{
    return {{Symbol::gamma, src.rational()}, {Symbol::eta, src.rational()}, {Symbol::omega, src.rational()}};
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/2").to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0, 5).to_string() == "0");

    CHECK_THROWS_AS(Rational::parse("0.5"), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse(""), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("abc"), ArithmeticError);
    CHECK_THROWS_WITH(Rational::parse("1/0"), "division by zero");
    CHECK_THROWS_WITH(Rational(0).reciprocal(), "division by zero");
}

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(-2, 3) == Rational(-1, 3));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(binom(6, 2) == Rational(15));
    CHECK(binom(3, 5) == Rational(0));
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(10) == Rational(3628800));
    // Exceeds 64 bits.
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("multipoly basics")
{
    const auto sq = (g + MultiPoly{1}).pow(2);
    CHECK(sq == g * g + g * Rational(2) + MultiPoly{1});
    CHECK(sq.is_canonical());
    CHECK(sq.degree(Symbol::gamma) == 2);
    CHECK(sq.coefficient({1, 0, 0}) == Rational(2));
    CHECK((g - g).is_zero());
    CHECK((g - g).size() == 0);
    CHECK(MultiPoly{Rational(3, 4)}.is_constant());
    CHECK(falling_factorial(Symbol::omega, 3) == w * w * w - w * w * Rational(3) + w * Rational(2));
    CHECK(falling_factorial(Symbol::omega, 0) == MultiPoly{1});
    CHECK((g * e).total_degree() == 2);
    CHECK(!(g * e).contains(Symbol::omega));
}

TEST_CASE("multipoly substitution")
{
    const auto p = g * g - g;
    CHECK(p.substitute(Symbol::gamma, g + MultiPoly{1}) == g * g + g);
    CHECK(p.substitute(Symbol::gamma, g + w) == g * g + g * w * Rational(2) + w * w - g - w);
    CHECK(p.substitute(Symbol::eta, MultiPoly{5}) == p);
    CHECK(p.substitute(Symbol::gamma, MultiPoly{}) == MultiPoly{});
}

TEST_CASE("evaluation")
{
    const auto p = g * g - g * Rational(1, 2);
    CHECK(p.evaluate({{Symbol::gamma, Rational(1, 2)}}) == Rational(0));
    CHECK(MultiPoly{7}.evaluate({}) == Rational(7));
    CHECK_THROWS_AS(p.evaluate({{Symbol::eta, Rational(1)}}), EvaluationError);
    CHECK_THROWS_WITH(p.evaluate({}), "missing assignment for symbol 'g'");
    // Symbols that do not occur need no value.
    CHECK((e - e).evaluate({}) == Rational(0));
}

TEST_CASE("rendering")
{
    CHECK(to_text(g * g - MultiPoly{1}) == "g^2 - 1");
    CHECK(to_text(g - MultiPoly{Rational(1, 2)}) == "g - 1/2");
    CHECK(to_text(-g) == "-g");
    CHECK(to_text(MultiPoly{}) == "0");
    CHECK(to_text(g * e * Rational(-3, 2)) == "-3/2*g*e");
    SymbolNames names;
    names.names = {"x", "y", "z"};
    CHECK(to_text(g * w, names) == "x*z");
    CHECK(to_latex(g * g * Rational(1, 2)) == "\\frac{1}{2}\\gamma^{2}");
    CHECK(to_latex(Rational(-3, 4)) == "-\\frac{3}{4}");
}

TEST_CASE("ring axioms on random polynomials")
{
    gen::Source src(20261016);
    for (int i = 0; i < 1000; ++i) {
        const auto p = src.poly();
        const auto q = src.poly();
        const auto r = src.poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(p * MultiPoly{1} == p);
        CHECK((p * q).is_canonical());
        CHECK((p + q).is_canonical());
        if (!p.is_zero() && !q.is_zero()) {
            CHECK(!(p * q).is_zero());
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    gen::Source src(7);
    for (int i = 0; i < 500; ++i) {
        const auto p = src.poly();
        const auto q = src.poly();
        const auto at = random_point(src);
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
    }
}

TEST_CASE("substitution commutes with ring operations and evaluation")
{
    gen::Source src(11);
    for (int i = 0; i < 300; ++i) {
        const auto p = src.poly(3, 3);
        const auto q = src.poly(3, 3);
        const auto shift = g + src.rational();
        CHECK((p * q).substitute(Symbol::gamma, shift) ==
              p.substitute(Symbol::gamma, shift) * q.substitute(Symbol::gamma, shift));
        auto at = random_point(src);
        auto moved = at;
        moved[Symbol::gamma] = shift.evaluate(at);
        CHECK(p.substitute(Symbol::gamma, shift).evaluate(at) == p.evaluate(moved));
    }
}

TEST_CASE("from_terms canonicalizes")
{
    const auto p = MultiPoly::from_terms({{{1, 0, 0}, Rational(1)}, {{1, 0, 0}, Rational(-1)}, {{0, 2, 0}, Rational(3)}});
    CHECK(p == e * e * Rational(3));
    CHECK(p.is_canonical());
    const auto key = MultiPoly::pack({4, 5, 6});
    const auto back = MultiPoly::unpack(key);
    CHECK(back == Exponents{4, 5, 6});
}
