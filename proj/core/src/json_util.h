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

#ifndef SYMDETECT_SRC_JSON_UTIL_H
#define SYMDETECT_SRC_JSON_UTIL_H

#include <cstdint>
#include <limits>

#include "json.hpp"
#include "symdetect/numeric.h"

namespace symdetect::internal {

using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
inline Json json_int(const BigInt &x) {
    if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min()) {
        return Json(x.convert_to<std::int64_t>());
    }
    return Json(x.str());
}

inline std::string csv_quote(const std::string &s) { return "\"" + s + "\""; }

}  // namespace symdetect::internal

#endif  // SYMDETECT_SRC_JSON_UTIL_H
