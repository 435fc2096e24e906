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

// Internal helpers shared by the HTTP-backed clients. Not installed.

#ifndef GENSHIN_SRC_HTTP_UTIL_HPP_
#define GENSHIN_SRC_HTTP_UTIL_HPP_

#include <chrono>
#include <string>
#include <thread>

#include "genshin/error.hpp"

namespace genshin::internal {

struct UrlParts {
  std::string origin;       // scheme://host[:port], consumable by httplib
  std::string path_prefix;  // leading path, "" or "/x/y" (no trailing slash)
};

inline UrlParts split_url(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("URL must start with http:// or https://: \"" +
                      base_url + "\"");
  }
  const auto path_start = base_url.find('/', scheme_end + 3);
  UrlParts parts;
  if (path_start == std::string::npos) {
    parts.origin = base_url;
  } else {
    parts.origin = base_url.substr(0, path_start);
    parts.path_prefix = base_url.substr(path_start);
  }
  while (!parts.path_prefix.empty() && parts.path_prefix.back() == '/') {
    parts.path_prefix.pop_back();
  }
  return parts;
}

// Statuses worth retrying: timeouts, throttling and server-side failures.
inline bool retryable_status(int code) {
  return code == 408 || code == 429 || code >= 500;
}

inline void backoff_sleep(int base_ms, int attempt) {
  const int delay = base_ms * (1 << attempt);
  std::this_thread::sleep_for(std::chrono::milliseconds(delay));
}

}  // namespace genshin::internal

#endif  // GENSHIN_SRC_HTTP_UTIL_HPP_
