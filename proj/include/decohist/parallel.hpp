// Copyright 2026 The decohist Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace decohist {

// Worker count: DECOHIST_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for every i in [0, n), spread over worker_count() threads in
// contiguous chunks. body must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace decohist
