// Copyright 2026 The densecode Authors
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

#pragma once

// Command-line front end. `dispatch` is the whole program minus argv[0];
// tools/main.cpp forwards to it.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "densecode/encoding.hpp"
#include "densecode/protocol.hpp"

namespace densecode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Seed used when --seed is omitted.
inline constexpr std::uint64_t kDefaultSeed = 0;

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Accepts "3", "psi3", "phi3" or "bell3". Throws std::invalid_argument.
int parse_basis_index(std::string_view text);

std::string to_json(const TrialReport& report);
TrialReport trial_report_from_json(std::string_view text);

std::string to_json(const ReachabilityMatrix& matrix);
ReachabilityMatrix reachability_matrix_from_json(std::string_view text);

}  // namespace densecode::cli
