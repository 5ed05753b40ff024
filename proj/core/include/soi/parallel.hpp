// Copyright 2026 The SOI Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace soi {

/// Worker cap: SOI_THREADS if set to a positive integer, else hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on up to
/// `workers` threads (0 = worker_count()). Exceptions thrown by any chunk are
/// rethrown on the calling thread after all workers join; the one from the
/// lowest chunk wins.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body,
                     unsigned workers = 0);

}  // namespace soi
