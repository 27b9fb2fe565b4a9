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

#include "polydaehee/identities.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "polydaehee/kernels.hpp"
#include "polydaehee/render.hpp"

namespace polydaehee {

namespace {

using Members = std::vector<MultiPoly>;

const MultiPoly gamma_sym = MultiPoly::variable(Symbol::gamma);
const MultiPoly eta_sym = MultiPoly::variable(Symbol::eta);
const MultiPoly omega_sym = MultiPoly::variable(Symbol::omega);

FamilyParams params_of(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda)
{
    FamilyParams p;
    p.k = k;
    p.m = m;
    p.a = a;
    p.lambda = lambda;
    return p;
}

Members build(std::string_view family, const FamilyParams& params, std::size_t order, const EngineOptions& options)
{
    return family_build(make_family(family, params), order, options).members;
}

Members gabpdp(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
               const EngineOptions& options, const MultiPoly& gamma_slot = gamma_sym,
               const MultiPoly& eta_slot = eta_sym)
{
    auto p = params_of(k, m, a, lambda);
    p.gamma = gamma_slot;
    p.eta = eta_slot;
    return build("gabpdp", p, order, options);
}

Members binomial_product(const Members& lhs, const Members& rhs, std::size_t order)
{
    return kernels::binomial_convolution<MultiPoly>(lhs, rhs, order);
}

std::optional<Discrepancy> first_mismatch(const Members& lhs, const Members& rhs, std::size_t count)
{
    for (std::size_t n = 0; n < count; ++n) {
        if (lhs[n] != rhs[n]) {
            return Discrepancy{n, lhs[n], rhs[n]};
        }
    }
    return std::nullopt;
}

IdentityReport report(std::string id, int k, std::uint32_t m, std::uint32_t a, const Rational& lambda,
                      std::size_t order, std::optional<Discrepancy> fail)
{
    IdentityParams params;
    params.k = k;
    params.m = m;
    params.a = a;
    params.lambda = lambda;
    params.order = order;
    return {std::move(id), params, std::move(fail), std::nullopt};
}

} // namespace

IdentityReport verify_thm_2_1(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto lhs = gabpdp(k, m, a, lambda, order, options);
    const auto daehee = build("poly_daehee", params_of(k, m, a, lambda), order, options);
    const auto bernoulli = build("gen_apostol_bernoulli_m", params_of(k, m, a, lambda), order, options);
    const auto rhs = binomial_product(daehee, bernoulli, order);
    return report("2.1", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport verify_thm_2_2(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto p = gabpdp(k, m, a, lambda, order, options);
    const MultiPoly shifted = gamma_sym + MultiPoly{1};
    std::optional<Discrepancy> fail;
    for (std::size_t n = 0; n < order && !fail; ++n) {
        const auto& next = p[n + 1];
        const MultiPoly rhs =
            (next.substitute(Symbol::gamma, shifted) - next) * Rational{static_cast<std::int64_t>(n + 1)}.reciprocal();
        if (p[n] != rhs) {
            fail = Discrepancy{n, p[n], rhs};
        }
    }
    return report("2.2", k, m, a, lambda, order, std::move(fail));
}

IdentityReport verify_thm_2_3(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto p = gabpdp(k, m, a, lambda, order, options);
    Members lhs;
    Members falling;
    for (std::size_t n = 0; n <= order; ++n) {
        lhs.push_back(p[n].substitute(Symbol::gamma, gamma_sym + omega_sym));
        falling.push_back(falling_factorial(Symbol::omega, static_cast<std::uint32_t>(n)));
    }
    const auto rhs = binomial_product(p, falling, order);
    return report("2.3", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport verify_thm_2_4(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    auto numbers = params_of(k, m, a, lambda);
    numbers.gamma = MultiPoly{};
    const auto poly_bernoulli = build("poly_bernoulli", numbers, order, options);
    const auto bernoulli = build("bernoulli", numbers, order, options);
    const auto p = gabpdp(k, m, a, lambda, order, options);
    const auto daehee = build("bernoulli_based_daehee", params_of(k, m, a, lambda), order, options);
    const auto lhs = binomial_product(poly_bernoulli, p, order);
    const auto rhs = binomial_product(bernoulli, daehee, order);
    return report("2.4", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport verify_thm_2_5(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto lhs = build("gen_apostol_bernoulli_m", params_of(k, m, a, lambda), order, options);
    auto second_kind = params_of(k, m, a, lambda);
    second_kind.gamma = -gamma_sym;
    const auto b2 = build("poly_bernoulli_2nd", second_kind, order, options);
    const auto p = gabpdp(k, m, a, lambda, order, options);
    const auto rhs = binomial_product(b2, p, order);
    return report("2.5", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport verify_thm_3_1(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t split_b,
                              std::size_t split_c, const EngineOptions& options)
{
    const std::size_t order = split_b + split_c;
    const auto p_eta = gabpdp(k, m, a, lambda, order, options);
    const auto p_omega = gabpdp(k, m, a, lambda, order, options, gamma_sym, omega_sym);

    // (e - w)^s P_r(g, w) for s + r <= order, shared by every (b, c).
    const MultiPoly diff = eta_sym - omega_sym;
    std::vector<MultiPoly> diff_pow{MultiPoly{1}};
    for (std::size_t s = 1; s <= order; ++s) {
        diff_pow.push_back(diff_pow.back() * diff);
    }
    std::vector<std::vector<MultiPoly>> shifted(order + 1);
    for (std::size_t s = 0; s <= order; ++s) {
        for (std::size_t r = 0; r + s <= order; ++r) {
            shifted[s].push_back(diff_pow[s] * p_omega[r]);
        }
    }

    std::optional<Discrepancy> fail;
    for (std::size_t b = 0; b <= split_b && !fail; ++b) {
        for (std::size_t c = 0; c <= split_c && !fail; ++c) {
            // Collect the double sum by s = n + q before touching polynomials.
            std::vector<Rational> weight(b + c + 1);
            for (std::size_t n = 0; n <= b; ++n) {
                for (std::size_t q = 0; q <= c; ++q) {
                    weight[n + q] += binom(b, n) * binom(c, q);
                }
            }
            MultiPoly rhs;
            for (std::size_t s = 0; s <= b + c; ++s) {
                rhs += shifted[s][b + c - s] * weight[s];
            }
            if (p_eta[b + c] != rhs) {
                fail = Discrepancy{b + c, p_eta[b + c], rhs};
            }
        }
    }
    auto r = report("3.1", k, m, a, lambda, order, std::move(fail));
    r.params.split_b = split_b;
    r.params.split_c = split_c;
    return r;
}

IdentityReport verify_thm_3_2(int k, std::uint32_t m, std::uint32_t a, std::uint32_t b, const Rational& lambda,
                              std::size_t order, const EngineOptions& options)
{
    const auto lhs = gabpdp(k, m, a + b, lambda, order, options, gamma_sym, eta_sym + omega_sym);
    const auto p = gabpdp(k, m, a, lambda, order, options);
    auto core = params_of(k, m, b, lambda);
    core.eta = omega_sym;
    const auto bernoulli = build("gen_apostol_bernoulli_m", core, order, options);
    const auto rhs = binomial_product(p, bernoulli, order);
    auto r = report("3.2", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
    r.params.b = b;
    return r;
}

IdentityReport verify_thm_3_3(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto lhs = gabpdp(k, m, a, lambda, order, options);
    auto two_param = params_of(k, m, a, lambda);
    two_param.eta = eta_sym - omega_sym;
    const auto daehee = build("poly_daehee_two_param", two_param, order, options);
    auto core = params_of(k, m, a, lambda);
    core.eta = omega_sym;
    const auto bernoulli = build("gen_apostol_bernoulli_m", core, order, options);
    const auto rhs = binomial_product(daehee, bernoulli, order);
    return report("3.3", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport verify_thm_3_4(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda, std::size_t order,
                              const EngineOptions& options)
{
    const auto p = gabpdp(k, m, a, lambda, order, options);
    Members lhs;
    for (const auto& member : p) {
        lhs.push_back(member.substitute(Symbol::eta, eta_sym + MultiPoly{1}));
    }
    const Members ones(order + 1, MultiPoly{1});
    const auto rhs = binomial_product(p, ones, order);
    return report("3.4", k, m, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

bool special_case_applies(int which, int k, std::uint32_t m, std::uint32_t a, const Rational& lambda)
{
    if (m != 1) {
        return false;
    }
    switch (which) {
    case 1:
        return true;
    case 2:
        return lambda.is_one() && a == 1;
    case 3:
        return k == 1;
    case 4:
        return a == 0;
    case 5:
        return k == 1 && a == 0;
    default:
        return false;
    }
}

IdentityReport verify_special_case(int which, int k, std::uint32_t a, const Rational& lambda, std::size_t order,
                                   const EngineOptions& options)
{
    if (!special_case_applies(which, k, 1, a, lambda)) {
        throw std::invalid_argument("special case " + std::to_string(which) + " does not apply to k=" +
                                    std::to_string(k) + " a=" + std::to_string(a) + " lambda=" + lambda.to_string());
    }
    const auto params = params_of(k, 1, a, lambda);
    Members lhs;
    Members rhs;
    switch (which) {
    case 1:
        lhs = gabpdp(k, 1, a, lambda, order, options);
        rhs = build("apostol_bernoulli_based_poly_daehee", params, order, options);
        break;
    case 2: {
        lhs = gabpdp(k, 1, a, lambda, order, options);
        auto in_eta = params;
        in_eta.gamma = eta_sym;
        rhs = binomial_product(build("poly_daehee", params, order, options), build("bernoulli", in_eta, order, options),
                               order);
        break;
    }
    case 3:
        lhs = gabpdp(k, 1, a, lambda, order, options);
        rhs = build("bernoulli_based_daehee", params, order, options);
        break;
    case 4:
        lhs = gabpdp(k, 1, a, lambda, order, options, gamma_sym, MultiPoly{});
        rhs = build("poly_daehee", params, order, options);
        break;
    case 5:
        lhs = gabpdp(k, 1, a, lambda, order, options, gamma_sym, MultiPoly{});
        rhs = build("daehee", params, order, options);
        break;
    }
    return report("SC" + std::to_string(which), k, 1, a, lambda, order, first_mismatch(lhs, rhs, order + 1));
}

IdentityReport cross_check_shift_routes(int k, std::uint32_t m, std::uint32_t a, const Rational& lambda,
                                        std::size_t order, const EngineOptions& options)
{
    const auto p = gabpdp(k, m, a, lambda, order, options);

    // g -> g+1 through the dedicated shifted atom rather than a bound slot.
    auto shifted_spec = make_family("gabpdp", params_of(k, m, a, lambda));
    shifted_spec.atoms.front() = atoms::one_plus_x_pow_shifted(gamma_sym, Rational{1});

    const std::array routes{
        std::tuple{Symbol::gamma, gamma_sym + MultiPoly{1}, family_build(shifted_spec, order, options).members},
        std::tuple{Symbol::gamma, gamma_sym + omega_sym,
                   gabpdp(k, m, a, lambda, order, options, gamma_sym + omega_sym, eta_sym)},
        std::tuple{Symbol::eta, eta_sym + MultiPoly{1},
                   gabpdp(k, m, a, lambda, order, options, gamma_sym, eta_sym + MultiPoly{1})},
        std::tuple{Symbol::eta, eta_sym + omega_sym,
                   gabpdp(k, m, a, lambda, order, options, gamma_sym, eta_sym + omega_sym)},
    };
    std::optional<Discrepancy> fail;
    for (const auto& [symbol, replacement, rebuilt] : routes) {
        for (std::size_t n = 0; n <= order && !fail; ++n) {
            const auto substituted = p[n].substitute(symbol, replacement);
            if (substituted != rebuilt[n]) {
                fail = Discrepancy{n, substituted, rebuilt[n]};
            }
        }
    }
    return report("XS", k, m, a, lambda, order, std::move(fail));
}

std::span<const std::string_view> theorem_ids()
{
    static constexpr std::array<std::string_view, 14> ids{"2.1", "2.2", "2.3", "2.4", "2.5", "3.1", "3.2",
                                                          "3.3", "3.4", "SC1", "SC2", "SC3", "SC4", "SC5"};
    return ids;
}

SuiteGrid default_grid(std::size_t order)
{
    SuiteGrid grid;
    grid.k = {-2, -1, 0, 1, 2, 3};
    grid.m = {1, 2, 3};
    grid.a = {0, 1, 2};
    grid.b = {0, 1};
    grid.lambda = {Rational{1}, Rational{2}, Rational{-3, 2}, Rational{1, 3}};
    grid.order = order;
    grid.split = std::min<std::size_t>(6, order / 2);
    return grid;
}

namespace {

struct Task {
    std::size_t theorem;
    int k;
    std::uint32_t m;
    std::uint32_t a;
    std::uint32_t b;
    Rational lambda;
};

template <class T>
std::vector<T> sorted_unique(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Task> enumerate_tasks(const SuiteGrid& grid)
{
    const auto ids = theorem_ids();
    std::vector<std::size_t> selected;
    if (grid.theorems.empty()) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            selected.push_back(i);
        }
    } else {
        for (const auto& t : grid.theorems) {
            const auto it = std::find(ids.begin(), ids.end(), t);
            if (it == ids.end()) {
                throw std::invalid_argument("unknown theorem id '" + t + "'");
            }
            selected.push_back(static_cast<std::size_t>(it - ids.begin()));
        }
        selected = sorted_unique(std::move(selected));
    }

    const auto ks = sorted_unique(grid.k);
    const auto ms = sorted_unique(grid.m);
    const auto as = sorted_unique(grid.a);
    const auto bs = sorted_unique(grid.b);
    const auto lambdas = sorted_unique(grid.lambda);

    std::vector<Task> tasks;
    for (const auto t : selected) {
        const auto id = ids[t];
        for (const int k : ks) {
            for (const auto m : ms) {
                for (const auto a : as) {
                    for (const auto& lambda : lambdas) {
                        if (id.starts_with("SC") && !special_case_applies(id.back() - '0', k, m, a, lambda)) {
                            continue;
                        }
                        if (id == "3.2") {
                            for (const auto b : bs) {
                                tasks.push_back({t, k, m, a, b, lambda});
                            }
                        } else {
                            tasks.push_back({t, k, m, a, 0, lambda});
                        }
                    }
                }
            }
        }
    }
    return tasks;
}

IdentityReport run_task(const Task& task, const SuiteGrid& grid, const EngineOptions& options)
{
    const auto id = theorem_ids()[task.theorem];
    const auto n = grid.order;
    try {
        if (id == "2.1") {
            return verify_thm_2_1(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "2.2") {
            return verify_thm_2_2(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "2.3") {
            return verify_thm_2_3(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "2.4") {
            return verify_thm_2_4(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "2.5") {
            return verify_thm_2_5(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "3.1") {
            return verify_thm_3_1(task.k, task.m, task.a, task.lambda, grid.split, grid.split, options);
        }
        if (id == "3.2") {
            return verify_thm_3_2(task.k, task.m, task.a, task.b, task.lambda, n, options);
        }
        if (id == "3.3") {
            return verify_thm_3_3(task.k, task.m, task.a, task.lambda, n, options);
        }
        if (id == "3.4") {
            return verify_thm_3_4(task.k, task.m, task.a, task.lambda, n, options);
        }
        return verify_special_case(id.back() - '0', task.k, task.a, task.lambda, n, options);
    } catch (const std::exception& e) {
        auto r = report(std::string(id), task.k, task.m, task.a, task.lambda, n, std::nullopt);
        if (id == "3.2") {
            r.params.b = task.b;
        }
        r.error = e.what();
        return r;
    }
}

auto sort_key(const IdentityReport& r)
{
    const auto ids = theorem_ids();
    const auto pos = std::find(ids.begin(), ids.end(), r.theorem_id) - ids.begin();
    return std::tuple{pos, r.params.k, r.params.m, r.params.a, r.params.b.value_or(0), std::cref(r.params.lambda)};
}

void sort_reports(std::vector<IdentityReport>& reports)
{
    std::sort(reports.begin(), reports.end(),
              [](const IdentityReport& x, const IdentityReport& y) { return sort_key(x) < sort_key(y); });
}

} // namespace

std::vector<IdentityReport> run_suite(const SuiteGrid& grid, const EngineOptions& options)
{
    const auto tasks = enumerate_tasks(grid);
    std::vector<IdentityReport> reports(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        reports[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)], grid, options);
    }
    sort_reports(reports);
    return reports;
}

std::vector<IdentityReport> run_suite_serial(const SuiteGrid& grid, const EngineOptions& options)
{
    std::vector<IdentityReport> reports;
    for (const auto& task : enumerate_tasks(grid)) {
        reports.push_back(run_task(task, grid, options));
    }
    sort_reports(reports);
    return reports;
}

std::string format_report(const IdentityReport& r)
{
    std::string line = "THM " + r.theorem_id + " k=" + std::to_string(r.params.k) + " m=" + std::to_string(r.params.m) +
                       " a=" + std::to_string(r.params.a);
    if (r.params.b) {
        line += " b=" + std::to_string(*r.params.b);
    }
    line += " λ=" + r.params.lambda.to_string() + " N=" + std::to_string(r.params.order);
    if (r.params.split_b && r.params.split_c) {
        line += " B=" + std::to_string(*r.params.split_b) + " C=" + std::to_string(*r.params.split_c);
    }
    if (r.passed()) {
        return line + ": PASS";
    }
    line += ": FAIL";
    if (r.first_fail) {
        line += " n=" + std::to_string(r.first_fail->n);
    }
    if (r.error) {
        line += " (" + *r.error + ")";
    }
    return line;
}

std::string reports_to_json(std::span<const IdentityReport> reports)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json params;
        params["k"] = r.params.k;
        params["m"] = r.params.m;
        params["a"] = r.params.a;
        if (r.params.b) {
            params["b"] = *r.params.b;
        }
        params["lambda"] = r.params.lambda.to_string();
        params["order"] = r.params.order;
        if (r.params.split_b && r.params.split_c) {
            params["B"] = *r.params.split_b;
            params["C"] = *r.params.split_c;
        }
        nlohmann::ordered_json entry;
        entry["theorem"] = r.theorem_id;
        entry["params"] = params;
        entry["status"] = r.passed() ? "pass" : "fail";
        if (r.first_fail) {
            entry["first_fail"] = {{"n", r.first_fail->n},
                                   {"lhs", to_text(r.first_fail->lhs)},
                                   {"rhs", to_text(r.first_fail->rhs)}};
        }
        if (r.error) {
            entry["error"] = *r.error;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

} // namespace polydaehee
