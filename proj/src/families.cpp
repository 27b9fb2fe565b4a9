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

#include "polydaehee/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace polydaehee {

namespace {

using Builder = std::vector<AtomSpec> (*)(const FamilyParams&);

struct CatalogEntry {
    FamilyInfo info;
    Builder atoms;
};

const Rational one{1};

// clang-format off
const std::array catalog{
    CatalogEntry{{"daehee", "(1+x)^g log(1+x)/x"},
        [](const FamilyParams& p) { return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::log1p_over_x()}; }},
    CatalogEntry{{"euler", "e^(g x) 2/(e^x+1)"},
        [](const FamilyParams& p) { return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_euler_core(one, 1)}; }},
    CatalogEntry{{"euler_numbers", "2/(e^x+1)"},
        [](const FamilyParams&) { return std::vector{atoms::apostol_euler_core(one, 1)}; }},
    CatalogEntry{{"bernoulli", "e^(g x) x/(e^x-1)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_bernoulli_core(1, one, 1)};
        }},
    CatalogEntry{{"poly_bernoulli", "e^(g x) Li_k(1-e^-x)/(e^x-1)"},
        [](const FamilyParams& p) { return std::vector{atoms::exp_linear(p.gamma), atoms::polylog_over_expm1(p.k)}; }},
    CatalogEntry{{"poly_bernoulli_higher", "e^(g x) (Li_k(1-e^-x)/(e^x-1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::polylog_over_expm1(p.k, p.a)};
        }},
    CatalogEntry{{"poly_daehee", "(1+x)^g log(1+x)/Li_k(1-e^-x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::log1p_over_polylog(p.k)};
        }},
    CatalogEntry{{"poly_bernoulli_2nd", "(1+x)^g Li_k(1-e^-x)/log(1+x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::polylog_over_log1p(p.k)};
        }},
    CatalogEntry{{"gen_bernoulli_a", "e^(g x) (x/(e^x-1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_bernoulli_core(1, one, p.a)};
        }},
    CatalogEntry{{"gen_euler_a", "e^(g x) (2/(e^x+1))^a"},
        [](const FamilyParams& p) { return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_euler_core(one, p.a)}; }},
    CatalogEntry{{"gen_genocchi_a", "e^(g x) (2x/(e^x+1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_genocchi_core(one, p.a)};
        }},
    CatalogEntry{{"apostol_bernoulli_a", "e^(g x) (x/(lambda e^x-1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_bernoulli_core(1, p.lambda, p.a)};
        }},
    CatalogEntry{{"apostol_euler_a", "e^(g x) (2/(lambda e^x+1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_euler_core(p.lambda, p.a)};
        }},
    CatalogEntry{{"apostol_genocchi_a", "e^(g x) (2x/(lambda e^x+1))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.gamma), atoms::apostol_genocchi_core(p.lambda, p.a)};
        }},
    CatalogEntry{{"gen_apostol_bernoulli_m", "e^(e x) (x^m/(lambda e^x - sum_{l<m} x^l/l!))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::exp_linear(p.eta), atoms::apostol_bernoulli_core(p.m, p.lambda, p.a)};
        }},
    CatalogEntry{{"gabpdp", "(1+x)^g log(1+x)/Li_k(1-e^-x) e^(e x) (x^m/(lambda e^x - sum_{l<m} x^l/l!))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::log1p_over_polylog(p.k),
                               atoms::exp_linear(p.eta), atoms::apostol_bernoulli_core(p.m, p.lambda, p.a)};
        }},
    CatalogEntry{{"bernoulli_based_daehee", "(1+x)^g log(1+x)/x e^(e x) (x^m/(lambda e^x - sum_{l<m} x^l/l!))^a"},
        [](const FamilyParams& p) {
            return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::log1p_over_x(), atoms::exp_linear(p.eta),
                               atoms::apostol_bernoulli_core(p.m, p.lambda, p.a)};
        }},
    CatalogEntry{{"poly_daehee_two_param", "(1+x)^g log(1+x)/Li_k(1-e^-x) e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::one_plus_x_pow(p.gamma), atoms::log1p_over_polylog(p.k),
                               atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_bernoulli_based_poly_daehee", "(x/(lambda e^x-1))^a log(1+x)/Li_k(1-e^-x) (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_bernoulli_core(1, p.lambda, p.a), atoms::log1p_over_polylog(p.k),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_euler_based_poly_daehee", "(2/(lambda e^x+1))^a log(1+x)/Li_k(1-e^-x) (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_euler_core(p.lambda, p.a), atoms::log1p_over_polylog(p.k),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_genocchi_based_poly_daehee", "(2x/(lambda e^x+1))^a log(1+x)/Li_k(1-e^-x) (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_genocchi_core(p.lambda, p.a), atoms::log1p_over_polylog(p.k),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_bernoulli_based_daehee", "(x/(lambda e^x-1))^a log(1+x)/x (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_bernoulli_core(1, p.lambda, p.a), atoms::log1p_over_x(),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_euler_based_daehee", "(2/(lambda e^x+1))^a log(1+x)/x (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_euler_core(p.lambda, p.a), atoms::log1p_over_x(),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
    CatalogEntry{{"apostol_genocchi_based_daehee", "(2x/(lambda e^x+1))^a log(1+x)/x (1+x)^g e^(e x)"},
        [](const FamilyParams& p) {
            return std::vector{atoms::apostol_genocchi_core(p.lambda, p.a), atoms::log1p_over_x(),
                               atoms::one_plus_x_pow(p.gamma), atoms::exp_linear(p.eta)};
        }},
};
// clang-format on

const std::array<FamilyInfo, catalog.size()> infos = [] {
    std::array<FamilyInfo, catalog.size()> out{};
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        out[i] = catalog[i].info;
    }
    return out;
}();

std::string normalize(std::string_view name)
{
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

const CatalogEntry* find_entry(std::string_view name)
{
    const auto key = normalize(name);
    for (const auto& e : catalog) {
        if (e.info.name == key) {
            return &e;
        }
    }
    return nullptr;
}

// Symbolic atoms go last so the bulk of the convolutions run on constants.
bool constant_coefficients(const AtomSpec& atom)
{
    switch (atom.kind) {
    case AtomKind::one_plus_x_pow:
    case AtomKind::one_plus_x_pow_shifted:
    case AtomKind::exp_linear:
        return atom.arg.is_constant();
    default:
        return true;
    }
}

} // namespace

std::span<const FamilyInfo> family_infos() { return infos; }

bool is_known_family(std::string_view name) { return find_entry(name) != nullptr; }

FamilySpec make_family(std::string_view name, const FamilyParams& params)
{
    const auto* entry = find_entry(name);
    if (entry == nullptr) {
        throw UnknownFamilyError("unknown family '" + std::string(name) + "'");
    }
    FamilySpec spec{std::string(entry->info.name), entry->atoms(params), params};
    validate(spec);
    return spec;
}

std::vector<FamilySpec> family_catalog(const FamilyParams& params)
{
    std::vector<FamilySpec> out;
    out.reserve(catalog.size());
    for (const auto& e : catalog) {
        out.push_back({std::string(e.info.name), e.atoms(params), params});
    }
    return out;
}

void validate(const FamilySpec& spec)
{
    if (spec.atoms.empty()) {
        throw ParameterError("family '" + spec.name + "' has no atoms");
    }
    for (const auto& atom : spec.atoms) {
        validate(atom);
    }
}

FamilyTable family_build(const FamilySpec& spec, std::size_t order, const EngineOptions& options)
{
    validate(spec);
    std::vector<const AtomSpec*> ordered;
    for (const auto& atom : spec.atoms) {
        ordered.push_back(&atom);
    }
    std::stable_partition(ordered.begin(), ordered.end(), [](const AtomSpec* a) { return constant_coefficients(*a); });

    Series product = atom_build(*ordered.front(), order, options);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        product = series_mul(product, atom_build(*ordered[i], order, options));
    }
    return FamilyTable{spec, order, extract_sequence(product)};
}

Rational family_member_eval(const FamilyTable& table, std::size_t n, const Assignment& at)
{
    if (n > table.order) {
        throw std::out_of_range("member index " + std::to_string(n) + " exceeds table order " +
                                std::to_string(table.order));
    }
    return table.members[n].evaluate(at);
}

} // namespace polydaehee
