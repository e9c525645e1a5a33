/*
   Copyright 2026 The drinfeld-lab Authors

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

#ifndef DRINFELD_CLI_HPP
#define DRINFELD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace drinfeld {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Jsonl, Csv, Pretty };

OutputFormat parse_output_format(const std::string& name);

/// A subcommand result: a summary object and an optional list of uniform rows.
struct Report {
    std::string command;
    Json summary = Json::object();
    std::vector<Json> rows;
};

/// json: one document (rows under "rows"); jsonl/csv: one record per row, or the summary when there are no rows.
std::string render(const Report& report, OutputFormat format);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

/// Runs the command line; returns the process exit status (0 ok, 2 precondition, 3 resource, 1 contract).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drinfeld

#endif
