// Copyright 2026 The symdetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMDETECT_ERRORS_H
#define SYMDETECT_ERRORS_H

#include <stdexcept>
#include <string>

namespace symdetect {

/// An internal identity failed (e.g. an exact division left a remainder).
/// Always indicates a bug, never bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The request exceeds a hard size cap of the implementation.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A floating point stage lost too much precision to round back to integers.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A measured or recovered label does not appear in the relevant lookup table.
struct DetectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symdetect

#endif  // SYMDETECT_ERRORS_H
