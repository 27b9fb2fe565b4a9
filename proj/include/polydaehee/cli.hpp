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

#ifndef POLYDAEHEE_CLI_HPP
#define POLYDAEHEE_CLI_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polydaehee/families.hpp"

namespace polydaehee {

enum class TableFormat { text, csv, json, latex };

/// Exit statuses shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::size_t max_cli_order = 64;

/// Entry point behind the `polydaehee` binary. `args` excludes the program
/// name. Everything meant for stdout goes to `out` (or to --output), and
/// diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string render_table(const FamilyTable& table, TableFormat format);

/// Inverse of the JSON table format: members in index order.
std::vector<MultiPoly> members_from_json(std::string_view json);

} // namespace polydaehee

#endif
