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

#ifndef DRINFELD_ERRORS_HPP
#define DRINFELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinfeld {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (bad input, hypothesis violated).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Malformed polynomial or config text; `position` is a 0-based byte offset.
class ParseError : public PreconditionError {
   public:
    ParseError(const std::string& what, std::size_t position)
        : PreconditionError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// A coefficient is not integral (or not a unit where required) at a place.
class BadReductionError : public PreconditionError {
   public:
    explicit BadReductionError(const std::string& place)
        : PreconditionError("bad reduction at " + place), place_(place) {}
    const std::string& place() const noexcept { return place_; }

   private:
    std::string place_;
};

/// A configured ceiling (Sylvester size, enumeration size, degree) would be exceeded.
class ResourceLimitError : public Error {
   public:
    using Error::Error;
};

/// An internal invariant failed. Never expected; signals a bug or a falsified lemma instance.
class ContractViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace drinfeld

#endif
