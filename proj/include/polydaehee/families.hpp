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

#ifndef POLYDAEHEE_FAMILIES_HPP
#define POLYDAEHEE_FAMILIES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polydaehee/atoms.hpp"
#include "polydaehee/engine_options.hpp"
#include "polydaehee/multipoly.hpp"

namespace polydaehee {

class UnknownFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters shared by every family constructor. Families ignore the
/// fields they do not use (e.g. `k` for the Euler families).
///
/// `gamma` and `eta` are the arguments placed in the (1+x)^. and e^(. x)
/// slots. They default to the bare symbols but may be bound to any linear
/// polynomial, e.g. -gamma or eta - omega, or to a constant.
struct FamilyParams {
    int k = 1;
    std::uint32_t m = 1;
    std::uint32_t a = 1;
    std::uint32_t b = 0;
    Rational lambda{1};
    MultiPoly gamma = MultiPoly::variable(Symbol::gamma);
    MultiPoly eta = MultiPoly::variable(Symbol::eta);
};

struct FamilySpec {
    std::string name;
    std::vector<AtomSpec> atoms;
    FamilyParams params;
};

struct FamilyTable {
    FamilySpec spec;
    std::size_t order = 0;
    std::vector<MultiPoly> members; // P_0 .. P_order
};

struct FamilyInfo {
    std::string_view name;
    std::string_view generating_function;
};

/// Every family the catalog can build, in catalog order.
std::span<const FamilyInfo> family_infos();

/// Accepts snake_case or kebab-case names.
[[nodiscard]] bool is_known_family(std::string_view name);

/// Throws UnknownFamilyError, or ParameterError for an invalid parameter.
FamilySpec make_family(std::string_view name, const FamilyParams& params = {});

/// One spec per catalog entry, instantiated at `params`.
std::vector<FamilySpec> family_catalog(const FamilyParams& params = {});

/// Throws ParameterError for an empty atom list or an invalid atom.
void validate(const FamilySpec& spec);

/// members[n] = n! [x^n] prod(atoms), exact for n = 0..order.
FamilyTable family_build(const FamilySpec& spec, std::size_t order, const EngineOptions& options = {});

/// Value of P_n at a point. Throws std::out_of_range for n > order and
/// EvaluationError for a missing assignment.
Rational family_member_eval(const FamilyTable& table, std::size_t n, const Assignment& at);

} // namespace polydaehee

#endif
