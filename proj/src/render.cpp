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

#include "polydaehee/render.hpp"

#include <algorithm>
#include <functional>

namespace polydaehee {

namespace {

bool display_before(const MultiPoly::Term& a, const MultiPoly::Term& b)
{
    const auto ea = MultiPoly::unpack(a.key);
    const auto eb = MultiPoly::unpack(b.key);
    if (ea.total() != eb.total()) {
        return ea.total() > eb.total();
    }
    // Packed keys order (gamma, eta, omega) lexicographically.
    return a.key > b.key;
}

using MonomialWriter = std::function<std::string(const Exponents&)>;
using CoeffWriter = std::function<std::string(const Rational&)>;

std::string render(const MultiPoly& p, const MonomialWriter& monomial, const CoeffWriter& coeff, const char* times)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : display_order(p)) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const auto e = MultiPoly::unpack(t.key);
        const Rational magnitude = t.coeff.abs();
        if (e.total() == 0) {
            out += coeff(magnitude);
        } else if (magnitude.is_one()) {
            out += monomial(e);
        } else {
            out += coeff(magnitude) + times + monomial(e);
        }
    }
    return out;
}

} // namespace

std::vector<MultiPoly::Term> display_order(const MultiPoly& p)
{
    std::vector<MultiPoly::Term> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), display_before);
    return terms;
}

std::string to_text(const MultiPoly& p, const SymbolNames& names)
{
    const auto monomial = [&](const Exponents& e) {
        std::string s;
        for (const Symbol sym : all_symbols) {
            const auto k = e.of(sym);
            if (k == 0) {
                continue;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += names.of(sym);
            if (k > 1) {
                s += "^" + std::to_string(k);
            }
        }
        return s;
    };
    return render(p, monomial, [](const Rational& r) { return r.to_string(); }, "*");
}

std::string to_latex(const Rational& r)
{
    if (r.is_integer()) {
        return r.to_string();
    }
    const std::string sign = r.sign() < 0 ? "-" : "";
    const Rational m = r.abs();
    return sign + "\\frac{" + m.numerator().get_str() + "}{" + m.denominator().get_str() + "}";
}

std::string to_latex(const MultiPoly& p, const SymbolNames& names)
{
    const auto monomial = [&](const Exponents& e) {
        std::string s;
        for (const Symbol sym : all_symbols) {
            const auto k = e.of(sym);
            if (k == 0) {
                continue;
            }
            s += names.of(sym);
            if (k > 1) {
                s += "^{" + std::to_string(k) + "}";
            }
        }
        return s;
    };
    return render(p, monomial, [](const Rational& r) { return to_latex(r); }, "");
}

} // namespace polydaehee
