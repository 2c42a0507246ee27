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

#include <stdexcept>
#include <string>

namespace linc {

// Kinds of genericity failure. Constructions in this library assume their
// inputs are in general position in a precise sense (simple Pfaffian roots,
// spanning configurations, coprime forms, ...). When an input violates one
// of these open conditions the construction raises a genericity_error with
// the matching kind: it is an expected, reportable outcome on special
// inputs, not an internal bug (internal bugs throw logic_error).
enum class genericity {
  repeated_root,          // Pfaffian has a multiple root
  roots_outside_field,    // Pfaffian does not split over the base field
  excess_corank,          // corank > 2 at a root (second-type member)
  base_points,            // sub-Pfaffians share a common root
  submaximal_rank,        // all sub-Pfaffians vanish identically
  degenerate_pencil,      // Pfaffian form is identically zero
  degenerate_configuration, // lines fail to be distinct and spanning
  not_spanning,           // forms fail to span their coefficient space
  field_too_small,        // not enough field elements for the request
  no_generic_element      // retry budget exhausted while sampling
};

inline const char* to_string(genericity k) {
  switch (k) {
    case genericity::repeated_root:            return "repeated_root";
    case genericity::roots_outside_field:      return "roots_outside_field";
    case genericity::excess_corank:            return "excess_corank";
    case genericity::base_points:              return "base_points";
    case genericity::submaximal_rank:          return "submaximal_rank";
    case genericity::degenerate_pencil:        return "degenerate_pencil";
    case genericity::degenerate_configuration: return "degenerate_configuration";
    case genericity::not_spanning:             return "not_spanning";
    case genericity::field_too_small:          return "field_too_small";
    case genericity::no_generic_element:       return "no_generic_element";
  }
  return "unknown";
}

class genericity_error : public std::runtime_error {
 public:
  genericity_error(genericity kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  genericity kind() const noexcept { return kind_; }

 private:
  genericity kind_;
};

}  // namespace linc
