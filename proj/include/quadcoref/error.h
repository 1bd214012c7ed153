//
// Copyright 2026 The quadcoref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef QUADCOREF_ERROR_H_
#define QUADCOREF_ERROR_H_

#include <stdexcept>
#include <string>

namespace quadcoref {

// Bad input: malformed files, violated preconditions on user data. The CLI
// maps these to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& message)
      : std::runtime_error(message) {}
};

// A broken internal invariant. The CLI maps these to exit code 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace quadcoref

#endif  // QUADCOREF_ERROR_H_
