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

#include "genshin/parallel.hpp"

#include <omp.h>

#include <algorithm>

namespace genshin {

int effective_threads(int requested, int backend_limit) {
  int threads = requested > 0 ? requested : omp_get_max_threads();
  if (backend_limit > 0) threads = std::min(threads, backend_limit);
  return std::max(threads, 1);
}

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

bool interrupted() { return interrupt_flag().load(std::memory_order_relaxed); }

}  // namespace genshin
