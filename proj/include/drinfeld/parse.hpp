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

#ifndef DRINFELD_PARSE_HPP
#define DRINFELD_PARSE_HPP

#include <string_view>

#include "drinfeld/polyx.hpp"

namespace drinfeld {

// Grammar: sums and differences of products of factors; a factor is a
// decimal constant in [0, p), T, X, u (extension generator), or a
// parenthesized expression, optionally raised to ^k. Division is allowed by
// X-free expressions only. Errors carry the character position.

APoly parse_apoly(std::string_view text, const FieldPtr& field);
RationalFn parse_rational_fn(std::string_view text, const FieldPtr& field);
/// Polynomial in X with coefficients in A.
APolyX parse_apolyx(std::string_view text, const FieldPtr& field);
KPolyX parse_kpolyx(std::string_view text, const FieldPtr& field);
/// Element of F_q written with u.
Fq parse_fq(std::string_view text, const FieldPtr& field);

}  // namespace drinfeld

#endif
