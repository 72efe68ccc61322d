/*
 * Copyright 2026 the isomon authors
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

#ifndef ISOMON_ERRORS_HPP
#define ISOMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isomon {

/// Base class for every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

struct NotInjectiveError : Error {
  using Error::Error;
};

struct MismatchedGroundSetError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct EmptyDomainSetError : Error {
  using Error::Error;
};

struct UnsupportedNError : Error {
  using Error::Error;
};

struct UnboundLetterError : Error {
  using Error::Error;
};

struct NotInMonoidError : Error {
  using Error::Error;
};

struct LimitExceededError : Error {
  using Error::Error;
};

struct SpecInvalidError : Error {
  using Error::Error;
};

struct ConsequenceNotCertifiedError : Error {
  using Error::Error;
};

struct NoDefiningRelationError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

struct IoFailureError : Error {
  using Error::Error;
};

}  // namespace isomon

#endif  // ISOMON_ERRORS_HPP
