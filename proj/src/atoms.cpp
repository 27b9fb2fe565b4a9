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

#include "polydaehee/atoms.hpp"

namespace polydaehee {

namespace {

Rational inverse_factorial(std::size_t n) { return factorial(n).reciprocal(); }

Series rational_series(std::size_t order, auto&& coefficient)
{
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs.emplace_back(coefficient(n));
    }
    return Series::make(order, std::move(coeffs));
}

Series binomial_series(const MultiPoly& exponent, std::size_t order, bool off_by_one)
{
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(order + 1);
    MultiPoly falling = off_by_one ? exponent : MultiPoly{1};
    std::int64_t next = off_by_one ? 1 : 0;
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs.push_back(falling * inverse_factorial(n));
        falling *= exponent - MultiPoly{next++};
    }
    return Series::make(order, std::move(coeffs));
}

Series log1p_series(std::size_t order, bool flip_sign)
{
    return rational_series(order, [&](std::size_t n) {
        if (n == 0) {
            return Rational{0};
        }
        Rational c{(n % 2 == 1) ? 1 : -1, static_cast<std::int64_t>(n)};
        if (flip_sign && n == 2) {
            c = -c;
        }
        return c;
    });
}

Series expm1_series(std::size_t order)
{
    return rational_series(order, [](std::size_t n) { return n == 0 ? Rational{0} : inverse_factorial(n); });
}

// The unpowered factor at internal order `order`; its own order is
// order - guard_orders(spec).
Series base_factor(const AtomSpec& spec, std::size_t order, const EngineOptions& options)
{
    switch (spec.kind) {
    case AtomKind::one_plus_x_pow:
        return binomial_series(spec.arg, order, options.fault == Fault::falling_factorial_off_by_one);
    case AtomKind::one_plus_x_pow_shifted:
        return binomial_series(spec.arg + MultiPoly{spec.shift}, order,
                               options.fault == Fault::falling_factorial_off_by_one);
    case AtomKind::exp_linear:
        return exp_series(spec.arg, order);
    case AtomKind::log1p:
        return log1p_series(order, options.fault == Fault::log1p_sign_flip);
    case AtomKind::log1p_over_x:
        return rational_series(order, [](std::size_t n) {
            return Rational{(n % 2 == 0) ? 1 : -1, static_cast<std::int64_t>(n + 1)};
        });
    case AtomKind::log1p_over_polylog:
        return series_div(base_factor(atoms::log1p(), order, options), polylog_of_one_minus_exp_neg(spec.k, order));
    case AtomKind::polylog_over_expm1:
        return series_div(polylog_of_one_minus_exp_neg(spec.k, order), expm1_series(order));
    case AtomKind::polylog_over_log1p:
        return series_div(polylog_of_one_minus_exp_neg(spec.k, order), base_factor(atoms::log1p(), order, options));
    case AtomKind::apostol_bernoulli_core: {
        const Series denominator = rational_series(order, [&](std::size_t n) {
            Rational c = spec.lambda * inverse_factorial(n);
            if (n < spec.m) {
                c -= inverse_factorial(n);
            }
            return c;
        });
        return series_div(Series::x_pow(spec.m, order), denominator);
    }
    case AtomKind::apostol_euler_core:
    case AtomKind::apostol_genocchi_core: {
        const Series denominator = rational_series(order, [&](std::size_t n) {
            Rational c = spec.lambda * inverse_factorial(n);
            if (n == 0) {
                c += Rational{1};
            }
            return c;
        });
        const std::size_t shift = spec.kind == AtomKind::apostol_genocchi_core ? 1 : 0;
        return series_div(Series::x_pow(shift, order) * Rational{2}, denominator);
    }
    }
    throw ParameterError("unknown atom kind");
}

} // namespace

std::string_view atom_kind_name(AtomKind kind)
{
    switch (kind) {
    case AtomKind::one_plus_x_pow:
        return "ONE_PLUS_X_POW_SYM";
    case AtomKind::one_plus_x_pow_shifted:
        return "ONE_PLUS_X_POW_SYM_SHIFTED";
    case AtomKind::exp_linear:
        return "EXP_LINEAR";
    case AtomKind::log1p:
        return "LOG1P";
    case AtomKind::log1p_over_x:
        return "LOG1P_OVER_X";
    case AtomKind::log1p_over_polylog:
        return "LOG1P_OVER_POLYLOG";
    case AtomKind::polylog_over_expm1:
        return "POLYLOG_OVER_EXPM1";
    case AtomKind::polylog_over_log1p:
        return "POLYLOG_OVER_LOG1P";
    case AtomKind::apostol_bernoulli_core:
        return "APOSTOL_BERNOULLI_CORE";
    case AtomKind::apostol_euler_core:
        return "APOSTOL_EULER_CORE";
    case AtomKind::apostol_genocchi_core:
        return "APOSTOL_GENOCCHI_CORE";
    }
    return "?";
}

namespace atoms {

AtomSpec one_plus_x_pow(MultiPoly arg) { return {.kind = AtomKind::one_plus_x_pow, .arg = std::move(arg)}; }

AtomSpec one_plus_x_pow_shifted(MultiPoly arg, Rational shift)
{
    return {.kind = AtomKind::one_plus_x_pow_shifted, .arg = std::move(arg), .shift = std::move(shift)};
}

AtomSpec exp_linear(MultiPoly arg) { return {.kind = AtomKind::exp_linear, .arg = std::move(arg)}; }

AtomSpec log1p() { return {.kind = AtomKind::log1p}; }

AtomSpec log1p_over_x() { return {.kind = AtomKind::log1p_over_x}; }

AtomSpec log1p_over_polylog(int k) { return {.kind = AtomKind::log1p_over_polylog, .k = k}; }

AtomSpec polylog_over_expm1(int k, std::uint32_t power)
{
    return {.kind = AtomKind::polylog_over_expm1, .k = k, .power = power};
}

AtomSpec polylog_over_log1p(int k) { return {.kind = AtomKind::polylog_over_log1p, .k = k}; }

AtomSpec apostol_bernoulli_core(std::uint32_t m, Rational lambda, std::uint32_t a)
{
    return {.kind = AtomKind::apostol_bernoulli_core, .m = m, .lambda = std::move(lambda), .power = a};
}

AtomSpec apostol_euler_core(Rational lambda, std::uint32_t a)
{
    return {.kind = AtomKind::apostol_euler_core, .lambda = std::move(lambda), .power = a};
}

AtomSpec apostol_genocchi_core(Rational lambda, std::uint32_t a)
{
    return {.kind = AtomKind::apostol_genocchi_core, .lambda = std::move(lambda), .power = a};
}

} // namespace atoms

void validate(const AtomSpec& spec)
{
    switch (spec.kind) {
    case AtomKind::one_plus_x_pow:
    case AtomKind::one_plus_x_pow_shifted:
    case AtomKind::exp_linear:
        if (spec.arg.total_degree() > 1) {
            throw ParameterError(std::string(atom_kind_name(spec.kind)) + " argument must be linear");
        }
        break;
    case AtomKind::apostol_bernoulli_core:
        if (spec.m == 0) {
            throw ParameterError("m must be a positive integer");
        }
        break;
    case AtomKind::apostol_euler_core:
    case AtomKind::apostol_genocchi_core:
        if (spec.lambda == Rational{-1}) {
            throw ParameterError("lambda must not equal -1");
        }
        break;
    default:
        break;
    }
}

std::size_t guard_orders(const AtomSpec& spec)
{
    switch (spec.kind) {
    case AtomKind::log1p_over_polylog:
    case AtomKind::polylog_over_expm1:
    case AtomKind::polylog_over_log1p:
        return 1;
    case AtomKind::apostol_bernoulli_core:
        return spec.lambda.is_one() ? spec.m : 0;
    default:
        return 0;
    }
}

Series atom_build(const AtomSpec& spec, std::size_t order, const EngineOptions& options)
{
    validate(spec);
    if (spec.power == 0) {
        return Series::constant(MultiPoly{1}, order);
    }
    const bool guarded = options.fault != Fault::dropped_guard_order;
    Series factor = base_factor(spec, order + (guarded ? guard_orders(spec) : 0), options);
    if (factor.order() < order) {
        factor = factor.zero_padded(order);
    }
    factor = factor.truncated(order);
    return spec.power == 1 ? factor : series_pow(factor, spec.power);
}

std::vector<Rational> polylog_coefficients(int k, std::size_t count)
{
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(j == 0 ? Rational{0} : Rational{static_cast<std::int64_t>(j)}.pow(-k));
    }
    return out;
}

Series exp_series(const MultiPoly& c, std::size_t order)
{
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(order + 1);
    MultiPoly power{1};
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs.push_back(power * inverse_factorial(n));
        power *= c;
    }
    return Series::make(order, std::move(coeffs));
}

Series one_minus_exp_neg(std::size_t order)
{
    return rational_series(order, [](std::size_t n) {
        if (n == 0) {
            return Rational{0};
        }
        return n % 2 == 1 ? inverse_factorial(n) : -inverse_factorial(n);
    });
}

Series polylog_of_one_minus_exp_neg(int k, std::size_t order)
{
    const auto outer = polylog_coefficients(k, order + 1);
    return series_compose(outer, one_minus_exp_neg(order));
}

} // namespace polydaehee
