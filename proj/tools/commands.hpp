/*
 * Copyright 2026 The linc authors
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

#include <cstdint>
#include <iosfwd>
#include <string>

namespace linc::cli {

// One parsed invocation. Defaults match the CLI defaults.
struct RunConfig {
  std::string command;        // pfaffian | deglocus | even-fiber | gauss-dim |
                              // odd-realize | odd-fiber | verify
  std::string field = "Q";    // "Q" or "Fp:<prime>"
  int n = 0;                  // 0 = unset (taken from the input where possible)
  std::uint64_t seed = 1;
  int trials = 20;
  std::string suite = "all";  // verify only: algebra | even | odd | all
  std::string input_path;     // JSON input file, where the command takes one
  std::string format = "text";  // "json" | "text"
  std::string output_path;    // optional: also write the JSON certificate here
};

// Exit codes: 0 = certificate produced and every check passed; 1 = certificate
// produced with at least one failed check; 2 = usage or input error (no
// certificate). Identical (command, inputs, seed) produce byte-identical JSON.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace linc::cli
