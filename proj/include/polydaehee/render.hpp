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

#ifndef POLYDAEHEE_RENDER_HPP
#define POLYDAEHEE_RENDER_HPP

#include <array>
#include <string>
#include <vector>

#include "polydaehee/multipoly.hpp"

namespace polydaehee {

struct SymbolNames {
    std::array<std::string, 3> names{"g", "e", "w"};

    static SymbolNames latex() { return {{"\\gamma", "\\eta", "\\omega"}}; }
    [[nodiscard]] const std::string& of(Symbol s) const { return names[static_cast<std::size_t>(s)]; }
};

/// Display order: descending total degree, then gamma, eta, omega exponents
/// descending. Shared by every emitter so output is byte-stable.
std::vector<MultiPoly::Term> display_order(const MultiPoly& p);

/// Plain text, e.g. "g^2 - 1/2*g*e + 1". The zero polynomial renders as "0".
std::string to_text(const MultiPoly& p, const SymbolNames& names = {});

/// LaTeX body, e.g. "\gamma^{2} - \frac{1}{2}\gamma".
std::string to_latex(const MultiPoly& p, const SymbolNames& names = SymbolNames::latex());

std::string to_latex(const Rational& r);

} // namespace polydaehee

#endif
