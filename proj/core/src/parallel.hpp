/**************************************************************************
 * parallel.hpp
 *
 * Copyright 2026 The ooalfsr Authors
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
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ooalfsr::detail {

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
/// one thread per chunk. Small ranges run inline.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn, std::size_t min_chunk = 4096) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunks = std::min(hw, std::max<std::size_t>(1, n / min_chunk));
    if (chunks <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t step = (n + chunks - 1) / chunks;
    for (std::size_t b = step; b < n; b += step) pool.emplace_back([&fn, b, step, n] { fn(b, std::min(n, b + step)); });
    fn(std::size_t{0}, std::min(n, step));
    for (auto& th : pool) th.join();
}

}  // namespace ooalfsr::detail
