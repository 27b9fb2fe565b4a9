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

#ifndef POLYDAEHEE_IDENTITIES_HPP
#define POLYDAEHEE_IDENTITIES_HPP

// Exact verification of the GABPDP identities. Each verifier builds both
// sides as MultiPoly sequences and compares them member by member; nothing
// is sampled or rounded.
//
// Notation used below: P_n(g, e) is the n-th GABPDP member with parameters
// (k, m, a, lambda); "*" between sequences is the binomial convolution
// (A * B)_n = sum_j C(n, j) A_{n-j} B_j.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polydaehee/engine_options.hpp"
#include "polydaehee/families.hpp"

namespace polydaehee {

struct IdentityParams {
    int k = 1;
    std::uint32_t m = 1;
    std::uint32_t a = 0;
    std::optional<std::uint32_t> b;     // only theorem 3.2
    Rational lambda{1};
    std::size_t order = 0;
    std::optional<std::size_t> split_b; // theorem 3.1: B
    std::optional<std::size_t> split_c; // theorem 3.1: C
};

struct Discrepancy {
    std::size_t n = 0;
    MultiPoly lhs;
    MultiPoly rhs;
};

struct IdentityReport {
    std::string theorem_id;
    IdentityParams params;
    std::optional<Discrepancy> first_fail;
    /// Set when a side could not be built (only reachable with injected faults).
    std::optional<std::string> error;

    [[nodiscard]] bool passed() const { return !first_fail && !error; }
};

/// P = poly_daehee(g) * gen_apostol_bernoulli_m(e).
IdentityReport verify_thm_2_1(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// P_n(g) = (P_{n+1}(g+1) - P_{n+1}(g)) / (n+1) for n < order.
IdentityReport verify_thm_2_2(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// P_n(g+w) = sum_j C(n,j) P_{n-j}(g) (w)_j.
IdentityReport verify_thm_2_3(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// poly-Bernoulli numbers * P = Bernoulli numbers * bernoulli_based_daehee.
IdentityReport verify_thm_2_4(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// gen_apostol_bernoulli_m(e) = poly_bernoulli_2nd(-g) * P.
IdentityReport verify_thm_2_5(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// Two-index implicit summation: for b <= B, c <= C,
/// P_{b+c}(g,e) = sum_{n<=b, q<=c} C(b,n) C(c,q) (e-w)^(n+q) P_{b+c-n-q}(g,w).
IdentityReport verify_thm_3_1(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t split_b,
                              std::size_t split_c, const EngineOptions& options = {});

/// P^{(a+b)}(g, e+w) = P^{(a)}(g, e) * gen_apostol_bernoulli_m^{(b)}(w).
IdentityReport verify_thm_3_2(int k, std::uint32_t m, std::uint32_t a, std::uint32_t b, const Rational& lambda,
                              std::size_t order, const EngineOptions& options = {});

/// P(g, e) = poly_daehee_two_param(g; e-w) * gen_apostol_bernoulli_m^{(a)}(w).
IdentityReport verify_thm_3_3(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// P_n(g, e+1) = sum_j C(n,j) P_{n-j}(g, e).
IdentityReport verify_thm_3_4(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options = {});

/// Reductions of the GABPDP to its ancestors (m = 1 throughout):
///   1: gabpdp = apostol_bernoulli_based_poly_daehee
///   2: (lambda = a = 1) gabpdp = poly_daehee * bernoulli(e)
///   3: (k = 1) gabpdp = bernoulli_based_daehee
///   4: (a = 0, e = 0) gabpdp = poly_daehee
///   5: (k = 1, a = 0, e = 0) gabpdp = daehee
/// Throws std::invalid_argument when the case does not apply to the parameters.
IdentityReport verify_special_case(int which, int k, std::uint32_t a, const Rational& lambda, std::size_t order,
                                   const EngineOptions& options = {});

[[nodiscard]] bool special_case_applies(int which, int k, std::uint32_t m, std::uint32_t a, const Rational& lambda);

/// The substitution route (g -> g+1, g -> g+w, e -> e+1, e -> e+w applied to
/// the members) against rebuilding the family with shifted slots.
IdentityReport cross_check_shift_routes(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda,
                                        std::size_t order, const EngineOptions& options = {});

/// Theorem ids in suite order: 2.1 ... 3.4, then SC1 ... SC5.
std::span<const std::string_view> theorem_ids();

struct SuiteGrid {
    std::vector<int> k;
    std::vector<std::uint32_t> m;
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    std::vector<Rational> lambda;
    std::size_t order = 12;
    /// B = C for theorem 3.1.
    std::size_t split = 6;
    /// Empty means every id in theorem_ids().
    std::vector<std::string> theorems;
};

/// k in {-2..3}, m in {1,2,3}, a in {0,1,2}, b in {0,1},
/// lambda in {1, 2, -3/2, 1/3}; split = min(6, order / 2).
SuiteGrid default_grid(std::size_t order = 12);

/// Runs every selected verifier at every applicable grid point, fanning out
/// over OpenMP threads. Reports are sorted by (theorem, k, m, a, b, lambda).
std::vector<IdentityReport> run_suite(const SuiteGrid& grid, const EngineOptions& options = {});

/// Same reports, computed on the calling thread only.
std::vector<IdentityReport> run_suite_serial(const SuiteGrid& grid, const EngineOptions& options = {});

/// "THM <id> k=<k> m=<m> a=<a> λ=<p/q> N=<N>: PASS|FAIL[ n=<n>]".
std::string format_report(const IdentityReport& report);

/// JSON array, one object per report.
std::string reports_to_json(std::span<const IdentityReport> reports);

} // namespace polydaehee

#endif
