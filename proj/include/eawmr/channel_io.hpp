// Copyright 2026 The eawmr Authors
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

#ifndef EAWMR_CHANNEL_IO_HPP_
#define EAWMR_CHANNEL_IO_HPP_

#include <string>

#include "eawmr/channels.hpp"

namespace eawmr {

/// 17 significant digits; round-trips any finite double exactly.
std::string format_full_precision(double x);

/// Channel interchange format:
///   {"dim": n, "ops": [[[re,im], ...], ...]}
/// with each operator a row-major list of [re,im] pairs. The writer emits
/// full double precision.
std::string channel_to_json(const KrausChannel& ch);

/// Parse the interchange format. Throws std::invalid_argument on
/// malformed input and InvariantViolation when the operators fail the
/// trace-preservation check.
KrausChannel channel_from_json(const std::string& text);

KrausChannel load_channel(const std::string& path);
void save_channel(const KrausChannel& ch, const std::string& path);

}  // namespace eawmr

#endif  // EAWMR_CHANNEL_IO_HPP_
