// SPDX-License-Identifier: Apache-2.0
//
// squintlib - beam squint simulation for mutually coupled wideband arrays
// Copyright (C) 2026 squintlib contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SQUINTLIB_PARALLEL_HPP
#define SQUINTLIB_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace squint
{

// Runs fn(i) for i in [0, n) on up to `threads` worker threads using a static
// block partition. Each index owns its own output slot in the caller, so the
// results (and therefore all downstream reductions done in index order) do
// not depend on the thread count. The first exception thrown by any worker
// is rethrown on the calling thread.
template <typename Fn> void parallel_for(std::size_t n, int threads, Fn &&fn)
{
    if (n == 0)
        return;

    std::size_t n_workers = threads > 1 ? static_cast<std::size_t>(threads) : 1;
    if (n_workers > n)
        n_workers = n;

    if (n_workers == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(n_workers);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);

    for (std::size_t t = 0; t < n_workers; ++t)
    {
        std::size_t lo = n * t / n_workers;
        std::size_t hi = n * (t + 1) / n_workers;
        pool.emplace_back([&, lo, hi, t]() {
            try
            {
                for (std::size_t i = lo; i < hi; ++i)
                    fn(i);
            }
            catch (...)
            {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &worker : pool)
        worker.join();

    for (auto &err : errors)
        if (err)
            std::rethrow_exception(err);
}

// Thread-count resolution: a positive CLI value wins, otherwise the
// SQUINTSIM_THREADS environment variable, otherwise the hardware concurrency.
int resolve_thread_count(int cli_value);

} // namespace squint

#endif
