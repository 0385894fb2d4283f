/*
 * Copyright 2026 The zdg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus       : Error { using Error::Error; };
struct UnsupportedOrder       : Error { using Error::Error; };
struct DivisionByZero         : Error { using Error::Error; };
struct NotIdempotent          : Error { using Error::Error; };
struct NotNilpotent           : Error { using Error::Error; };
struct NotZeroDivisor         : Error { using Error::Error; };
struct SizeMismatch           : Error { using Error::Error; };
struct EmptySubgraph          : Error { using Error::Error; };
struct DimensionTooLarge      : Error { using Error::Error; };
struct ReduciblePolynomial    : Error { using Error::Error; };
struct NonSymmetric           : Error { using Error::Error; };
struct OutOfDomain            : Error { using Error::Error; };
struct UnresolvedFactor       : Error { using Error::Error; };
struct NotRegular             : Error { using Error::Error; };
struct IndexOutOfRange        : Error { using Error::Error; };

} // namespace zdg
