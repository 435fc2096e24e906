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

#ifndef GENSHIN_PARALLEL_HPP_
#define GENSHIN_PARALLEL_HPP_

#include <atomic>

namespace genshin {

// Resolves the thread count for a parallel kernel. `requested` is the user
// setting (0 = use all hardware threads) and `backend_limit` is an upper
// bound imposed by a backend such as a remote classifier (0 = unbounded).
int effective_threads(int requested, int backend_limit = 0);

// Cooperative interrupt flag, set by the CLI's SIGINT handler. Long loops
// poll this and stop early so partial artifacts can still be flushed.
std::atomic<bool>& interrupt_flag();
bool interrupted();

}  // namespace genshin

#endif  // GENSHIN_PARALLEL_HPP_
