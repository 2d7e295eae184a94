// Copyright 2026 The sball Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBALL_ERROR_HPP_
#define SBALL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sball {

// Failure categories surfaced by the library. Each maps to one documented
// degeneracy or precondition of an operation.
enum class ErrorKind {
  kDegenerateArc,         // arc endpoints equal or antipodal
  kIdenticalCircles,      // two boundary circles coincide
  kEmptyBody,             // ball intersection has empty interior
  kNoEnclosingHemisphere, // no pole with positive support margin
  kDegenerateBoundary,    // boundary structure could not be assembled
  kDegenerateLune,        // lune poles equal or antipodal
  kNotSupporting,         // pole does not support the body
  kDiameterExceeded,      // point set wider than the requested delta
  kSeedDiameterExceeded,  // completion seed wider than delta
  kSeedOutsideCap,        // completion seed escapes the working cap
  kEqualEndpoints,        // piece-of-circle endpoints coincide
  kNotOnCircle,           // piece endpoint not at distance delta from center
  kDegeneratePiece,       // piece direction field ill-defined
  kEndpointsOutsideBody,  // containment check endpoints not in body
  kEvenK,                 // Reuleaux generator needs odd k >= 3
  kDeltaOutOfRange,       // delta outside (0, pi/2)
  kSamplingStalled,       // rejection sampler exhausted its retry budget
  kBackHemisphere,        // point behind the projection plane
  kInvalidArgument,       // malformed input value
  kIoError,               // file could not be read or written
  kFormatError,           // file contents violate the declared format
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sball

#endif  // SBALL_ERROR_HPP_
