/**
 * Copyright 2026 The aaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
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
#include <utility>

namespace aaug {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an argument or a value invariant does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A file exists but its contents do not follow the expected layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Reading or writing the filesystem failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A tabular input (CSV, JSON) violates its schema. Maps to a usage/config
// failure at the command line.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Raised by composite recipes; carries the name of the failing transform.
class TransformError : public Error {
 public:
  TransformError(std::string transform, const std::string& cause)
      : Error(cause.starts_with(transform + ":") ? cause : transform + ": " + cause),
        transform_(std::move(transform)) {}

  const std::string& transform() const { return transform_; }

 private:
  std::string transform_;
};

}  // namespace aaug
