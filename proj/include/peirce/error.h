// Copyright 2026 The Peirce Authors
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

#ifndef PEIRCE_ERROR_H_
#define PEIRCE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peirce {

enum class ErrorKind {
  // Input shape and format.
  kShapeMismatch,
  kUnreduced,
  kFormat,
  // Ring axioms.
  kNonAssociative,
  kOrderViolation,
  kUnitFailure,
  // Element and idempotent preconditions.
  kAmbientMismatch,
  kNotIdempotent,
  kNotSemicentral,
  kNotSemicentralReduced,
  // Triangular structure.
  kInvalidSequence,
  kPreconditionViolated,
  kTooManyBlocks,
  kStructureViolation,
  // Morphisms.
  kNotBijective,
  kNotIsomorphism,
  kInconsistentQuadruple,
  kLocationMismatch,
  kInadmissiblePermutation,
  // Resource guards.
  kCapExceeded,
};

std::string_view ErrorKindName(ErrorKind kind);

// The single exception type thrown by the library. `where` carries the
// indices named by the failure (e.g. the offending generator triple for
// kNonAssociative or the recursion level for kInconsistentQuadruple).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> where = {})
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        message_(message),
        where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix that what() carries.
  const std::string& message() const { return message_; }
  const std::vector<std::size_t>& where() const { return where_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::vector<std::size_t> where_;
};

}  // namespace peirce

#endif  // PEIRCE_ERROR_H_
