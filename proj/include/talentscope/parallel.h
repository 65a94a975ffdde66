// Copyright 2026 The Talentscope Authors
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
#ifndef TALENTSCOPE_PARALLEL_H_
#define TALENTSCOPE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace talentscope {

// Environment variable capping the number of worker threads.
inline constexpr char kThreadsEnvVar[] = "TALENTSCOPE_THREADS";

// min(hardware concurrency, $TALENTSCOPE_THREADS), at least 1.
std::size_t worker_count();

// Calls body(i) for every i in [0, n). Iterations must write disjoint state.
// Runs inline when only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace talentscope

#endif  // TALENTSCOPE_PARALLEL_H_
