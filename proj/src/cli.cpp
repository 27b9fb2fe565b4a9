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

#include "polydaehee/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydaehee/identities.hpp"
#include "polydaehee/render.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydaehee {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FamilyOptions {
    std::string family;
    int k = 1;
    std::uint32_t m = 1;
    std::uint32_t a = 1;
    std::uint32_t b = 0;
    std::string lambda = "1";
};

void add_family_options(CLI::App& cmd, FamilyOptions& opts)
{
    cmd.add_option("--family", opts.family, "Family name from the catalog")->required();
    cmd.add_option("--k", opts.k, "Polylogarithm index");
    cmd.add_option("--m", opts.m, "Bernoulli core order parameter (m >= 1)");
    cmd.add_option("--a", opts.a, "Core power");
    cmd.add_option("--b", opts.b, "Second core power");
    cmd.add_option("--lambda", opts.lambda, "Apostol parameter as p/q");
}

FamilyParams family_params(const FamilyOptions& opts)
{
    FamilyParams p;
    p.k = opts.k;
    p.m = opts.m;
    p.a = opts.a;
    p.b = opts.b;
    p.lambda = Rational::parse(opts.lambda);
    return p;
}

void check_order(std::size_t order)
{
    if (order > max_cli_order) {
        throw UsageError("order must not exceed " + std::to_string(max_cli_order));
    }
}

TableFormat parse_format(const std::string& name)
{
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "json") {
        return TableFormat::json;
    }
    if (name == "latex") {
        return TableFormat::latex;
    }
    return TableFormat::text;
}

void cap_threads()
{
#ifdef _OPENMP
    if (const char* env = std::getenv("POLYDAEHEE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            omp_set_num_threads(std::min(n, omp_get_max_threads()));
        }
    }
#endif
}

std::string cmd_table(const FamilyOptions& fam, std::size_t order, const std::string& format,
                      const std::optional<std::string>& gamma, const std::optional<std::string>& eta)
{
    check_order(order);
    auto params = family_params(fam);
    if (gamma) {
        params.gamma = Rational::parse(*gamma);
    }
    if (eta) {
        params.eta = Rational::parse(*eta);
    }
    const auto table = family_build(make_family(fam.family, params), order);
    return render_table(table, parse_format(format));
}

std::string cmd_eval(const FamilyOptions& fam, std::size_t n, const std::optional<std::string>& gamma,
                     const std::optional<std::string>& eta, const std::optional<std::string>& omega)
{
    check_order(n);
    Assignment at;
    if (gamma) {
        at[Symbol::gamma] = Rational::parse(*gamma);
    }
    if (eta) {
        at[Symbol::eta] = Rational::parse(*eta);
    }
    if (omega) {
        at[Symbol::omega] = Rational::parse(*omega);
    }
    const auto table = family_build(make_family(fam.family, family_params(fam)), n);
    return family_member_eval(table, n, at).to_string() + "\n";
}

struct VerifyOptions {
    std::size_t order = 12;
    std::optional<std::size_t> split;
    std::vector<std::string> theorems;
    std::vector<int> k;
    std::vector<std::uint32_t> m;
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    std::vector<std::string> lambda;
    std::string family;
    std::string format = "text";
};

// Returns the exit status; the report goes to `text`.
int cmd_verify(const VerifyOptions& opts, std::string& text)
{
    check_order(opts.order);
    auto grid = default_grid(opts.order);
    if (opts.split) {
        if (2 * *opts.split > opts.order) {
            throw UsageError("split must not exceed order / 2");
        }
        grid.split = *opts.split;
    }
    if (!opts.k.empty()) {
        grid.k = opts.k;
    }
    if (!opts.m.empty()) {
        grid.m = opts.m;
    }
    if (!opts.a.empty()) {
        grid.a = opts.a;
    }
    if (!opts.b.empty()) {
        grid.b = opts.b;
    }
    if (!opts.lambda.empty()) {
        grid.lambda.clear();
        for (const auto& s : opts.lambda) {
            grid.lambda.push_back(Rational::parse(s));
        }
    }
    const auto ids = theorem_ids();
    for (const auto& t : opts.theorems) {
        if (std::find(ids.begin(), ids.end(), t) == ids.end()) {
            throw UsageError("unknown theorem id '" + t + "'");
        }
    }
    grid.theorems = opts.theorems;

    if (!opts.family.empty()) {
        for (const int k : grid.k) {
            for (const auto m : grid.m) {
                for (const auto a : grid.a) {
                    for (const auto& lambda : grid.lambda) {
                        FamilyParams p;
                        p.k = k;
                        p.m = m;
                        p.a = a;
                        p.lambda = lambda;
                        make_family(opts.family, p);
                    }
                }
            }
        }
    }

    const auto reports = run_suite(grid);
    if (reports.empty()) {
        throw UsageError("the requested grid selects no applicable theorem instances");
    }
    const auto passed =
        static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }));

    if (opts.format == "json") {
        ordered_json doc;
        doc["passed"] = passed;
        doc["total"] = reports.size();
        doc["reports"] = ordered_json::parse(reports_to_json(reports));
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << format_report(r) << '\n';
        }
        os << "PASSED " << passed << '/' << reports.size() << '\n';
        text = os.str();
    }
    return passed == reports.size() ? exit_ok : exit_failed;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + path + "'");
    }
    file << text;
}

} // namespace

std::string render_table(const FamilyTable& table, TableFormat format)
{
    std::ostringstream os;
    switch (format) {
    case TableFormat::text:
        for (std::size_t n = 0; n < table.members.size(); ++n) {
            os << "P_" << n << " = " << to_text(table.members[n]) << '\n';
        }
        break;
    case TableFormat::csv:
        for (std::size_t n = 0; n < table.members.size(); ++n) {
            os << n << ',' << to_text(table.members[n]) << '\n';
        }
        break;
    case TableFormat::latex:
        for (std::size_t n = 0; n < table.members.size(); ++n) {
            os << "\\(P_{" << n << "} = " << to_latex(table.members[n]) << "\\)\n";
        }
        break;
    case TableFormat::json: {
        const auto& p = table.spec.params;
        ordered_json doc;
        doc["family"] = table.spec.name;
        doc["params"] = {{"k", p.k}, {"m", p.m}, {"a", p.a}, {"lambda", p.lambda.to_string()}};
        doc["order"] = table.order;
        auto members = ordered_json::array();
        for (std::size_t n = 0; n < table.members.size(); ++n) {
            auto terms = ordered_json::array();
            for (const auto& t : display_order(table.members[n])) {
                const auto e = MultiPoly::unpack(t.key);
                terms.push_back({{"e_gamma", e.gamma},
                                 {"e_eta", e.eta},
                                 {"e_omega", e.omega},
                                 {"coeff", t.coeff.to_string()}});
            }
            members.push_back({{"n", n}, {"terms", std::move(terms)}});
        }
        doc["members"] = std::move(members);
        os << doc.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

std::vector<MultiPoly> members_from_json(std::string_view json)
{
    const auto doc = nlohmann::json::parse(json);
    std::vector<MultiPoly> members;
    for (const auto& member : doc.at("members")) {
        if (member.at("n").get<std::size_t>() != members.size()) {
            throw std::invalid_argument("table members out of order");
        }
        std::vector<std::pair<Exponents, Rational>> terms;
        for (const auto& t : member.at("terms")) {
            terms.emplace_back(Exponents{t.at("e_gamma").get<std::uint32_t>(), t.at("e_eta").get<std::uint32_t>(),
                                         t.at("e_omega").get<std::uint32_t>()},
                               Rational::parse(t.at("coeff").get<std::string>()));
        }
        members.push_back(MultiPoly::from_terms(std::move(terms)));
    }
    return members;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tables and identity checks for Apostol-Bernoulli poly-Daehee polynomials", "polydaehee"};
    app.require_subcommand(1);

    FamilyOptions table_fam;
    std::size_t table_order = 10;
    std::string table_format = "text";
    std::string table_output;
    std::optional<std::string> table_gamma;
    std::optional<std::string> table_eta;
    auto* table = app.add_subcommand("table", "Print P_0 .. P_order of a family");
    add_family_options(*table, table_fam);
    table->add_option("--order", table_order, "Highest member index (at most 64)");
    table->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    table->add_option("--output", table_output, "Write to a file instead of stdout");
    table->add_option("--gamma", table_gamma, "Bind the gamma slot to a rational");
    table->add_option("--eta", table_eta, "Bind the eta slot to a rational");

    FamilyOptions eval_fam;
    std::size_t eval_n = 0;
    std::optional<std::string> eval_gamma;
    std::optional<std::string> eval_eta;
    std::optional<std::string> eval_omega;
    std::string eval_output;
    auto* eval = app.add_subcommand("eval", "Evaluate P_n at a point");
    add_family_options(*eval, eval_fam);
    eval->add_option("--n", eval_n, "Member index")->required();
    eval->add_option("--gamma", eval_gamma);
    eval->add_option("--eta", eval_eta);
    eval->add_option("--omega", eval_omega);
    eval->add_option("--output", eval_output);

    VerifyOptions vopts;
    std::string verify_output;
    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--order", vopts.order, "Table order N (at most 64)");
    verify->add_option("--split", vopts.split, "B = C for the implicit summation identity");
    verify->add_option("--theorem", vopts.theorems, "Restrict to these ids (2.1 .. 3.4, SC1 .. SC5)");
    verify->add_option("--k", vopts.k);
    verify->add_option("--m", vopts.m);
    verify->add_option("--a", vopts.a);
    verify->add_option("--b", vopts.b);
    verify->add_option("--lambda", vopts.lambda);
    verify->add_option("--family", vopts.family, "Validate the grid parameters against this family");
    verify->add_option("--format", vopts.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", verify_output);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    cap_threads();
    try {
        if (table->parsed()) {
            emit(cmd_table(table_fam, table_order, table_format, table_gamma, table_eta), table_output, out);
            return exit_ok;
        }
        if (eval->parsed()) {
            emit(cmd_eval(eval_fam, eval_n, eval_gamma, eval_eta, eval_omega), eval_output, out);
            return exit_ok;
        }
        std::string text;
        const int status = cmd_verify(vopts, text);
        emit(text, verify_output, out);
        return status;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    }
}

} // namespace polydaehee
