/*
 *   Copyright 2026 The semiring-lab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
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

namespace semiring_lab {

/// Base class for all semiring-lab exceptions.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, duplicate element names, table entries that
/// are not declared names, unknown builtin, unparsable term text.
class format_error : public error {
public:
  using error::error;
};

/// More than 64 elements requested (subsets must fit one machine word).
class capacity_error : public error {
public:
  using error::error;
};

/// A term mentions the constant 1 but the target semiring has no unit.
class signature_error : public error {
public:
  using error::error;
};

/// Numeric arguments outside the carrier a1*N x a2*N.
class carrier_error : public error {
public:
  using error::error;
};

/// A cross-check that a proved theorem guarantees has failed; indicates a
/// bug in this library, never a property of the input algebra.
class internal_error : public error {
public:
  using error::error;
};

} // namespace semiring_lab
