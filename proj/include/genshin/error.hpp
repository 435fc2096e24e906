// Copyright 2026 The Genshin Authors
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

#ifndef GENSHIN_ERROR_HPP_
#define GENSHIN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace genshin {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration problems: bad flag values, malformed config files,
// unknown enum names. The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Authentication rejected by a remote endpoint. Never retried.
class AuthError : public Error {
 public:
  using Error::Error;
};

// Network or server failure that persisted through the retry budget.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace genshin

#endif  // GENSHIN_ERROR_HPP_
