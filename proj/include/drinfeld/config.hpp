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

#ifndef DRINFELD_CONFIG_HPP
#define DRINFELD_CONFIG_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/polyx.hpp"

namespace drinfeld {

/// Value of a `key = value` line: integer, string, or array of either.
using ConfigValue = std::variant<long long, std::string, std::vector<long long>, std::vector<std::string>>;
using ConfigDoc = std::map<std::string, ConfigValue>;

/// Flat TOML subset: comments, integers, quoted strings, arrays (may span lines).
ConfigDoc parse_config(std::string_view text);
std::string read_text_file(const std::string& path);

FieldPtr field_from_config(const ConfigDoc& doc);
DrinfeldModule module_from_config(const ConfigDoc& doc);
/// Path to a module file, or the shorthand carlitz(q=Q).
DrinfeldModule load_module(const std::string& spec);

/// `minpoly` entry of a point document.
APolyX point_from_config(const ConfigDoc& doc, const FieldPtr& field);
/// Path to a point file, or an inline polynomial in X and T.
APolyX load_point(const std::string& spec, const FieldPtr& field);

}  // namespace drinfeld

#endif
