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

#ifndef DRINFELD_DEGREE_HPP
#define DRINFELD_DEGREE_HPP

#include <climits>
#include <compare>
#include <string>

namespace drinfeld {

/// Polynomial degree with a dedicated -infinity value for the zero polynomial.
class Degree {
   public:
    constexpr Degree() noexcept : value_(kMinusInfinity) {}
    constexpr explicit Degree(long long value) noexcept : value_(value) {}

    static constexpr Degree minus_infinity() noexcept { return Degree(); }

    constexpr bool is_minus_infinity() const noexcept { return value_ == kMinusInfinity; }
    /// Integer value; callers must check is_minus_infinity() first.
    constexpr long long value() const noexcept { return value_; }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.is_minus_infinity() || b.is_minus_infinity()) return Degree();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr auto operator<=>(Degree a, Degree b) noexcept = default;
    friend constexpr bool operator==(Degree a, long long b) noexcept { return a.value_ == b && b != kMinusInfinity; }

    std::string to_string() const { return is_minus_infinity() ? "-inf" : std::to_string(value_); }

   private:
    static constexpr long long kMinusInfinity = LLONG_MIN;
    long long value_;
};

constexpr Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

}  // namespace drinfeld

#endif
