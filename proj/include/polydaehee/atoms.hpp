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

#ifndef POLYDAEHEE_ATOMS_HPP
#define POLYDAEHEE_ATOMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "polydaehee/engine_options.hpp"
#include "polydaehee/series.hpp"

namespace polydaehee {

/// Raised when an atom or family is instantiated outside its parameter domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generating-function factors. Every family is an ordered product of these.
enum class AtomKind {
    one_plus_x_pow,          // (1+x)^s
    one_plus_x_pow_shifted,  // (1+x)^(s + shift)
    exp_linear,              // e^(c x)
    log1p,                   // log(1+x)
    log1p_over_x,            // log(1+x)/x
    log1p_over_polylog,      // log(1+x)/Li_k(1-e^-x)
    polylog_over_expm1,      // Li_k(1-e^-x)/(e^x-1)
    polylog_over_log1p,      // Li_k(1-e^-x)/log(1+x)
    apostol_bernoulli_core,  // (x^m/(lambda e^x - sum_{l<m} x^l/l!))^a
    apostol_euler_core,      // (2/(lambda e^x + 1))^a
    apostol_genocchi_core,   // (2x/(lambda e^x + 1))^a
};

std::string_view atom_kind_name(AtomKind kind);

struct AtomSpec {
    AtomKind kind = AtomKind::log1p;
    /// Argument of the symbolic kinds; must be of total degree <= 1.
    MultiPoly arg;
    Rational shift;
    int k = 1;
    std::uint32_t m = 1;
    Rational lambda{1};
    /// The whole factor is raised to this power (the order a of the cores).
    std::uint32_t power = 1;

    friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

namespace atoms {

AtomSpec one_plus_x_pow(MultiPoly arg);
AtomSpec one_plus_x_pow_shifted(MultiPoly arg, Rational shift);
AtomSpec exp_linear(MultiPoly arg);
AtomSpec log1p();
AtomSpec log1p_over_x();
AtomSpec log1p_over_polylog(int k);
AtomSpec polylog_over_expm1(int k, std::uint32_t power = 1);
AtomSpec polylog_over_log1p(int k);
AtomSpec apostol_bernoulli_core(std::uint32_t m, Rational lambda, std::uint32_t a);
AtomSpec apostol_euler_core(Rational lambda, std::uint32_t a);
AtomSpec apostol_genocchi_core(Rational lambda, std::uint32_t a);

} // namespace atoms

/// Throws ParameterError when the spec is outside its domain.
void validate(const AtomSpec& spec);

/// Extra internal orders the atom consumes through valuation-aware division.
std::size_t guard_orders(const AtomSpec& spec);

/// The atom's closed form as a series of exactly `order`; coefficients 0..order
/// are exact because the atom works at order + guard_orders(spec) internally.
Series atom_build(const AtomSpec& spec, std::size_t order, const EngineOptions& options = {});

/// Outer coefficients of Li_k: [0, 1, 1/2^k, 1/3^k, ...] (m^|k| for k <= 0),
/// `count` entries.
std::vector<Rational> polylog_coefficients(int k, std::size_t count);

/// e^(c x) with c^n/n! coefficients.
Series exp_series(const MultiPoly& c, std::size_t order);

/// 1 - e^(-x).
Series one_minus_exp_neg(std::size_t order);

/// Li_k(1 - e^(-x)); valuation 1 with leading coefficient 1.
Series polylog_of_one_minus_exp_neg(int k, std::size_t order);

} // namespace polydaehee

#endif
