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

#include <cstdlib>
#include <string>

#include "squintlib/parallel.hpp"

namespace squint
{

int resolve_thread_count(int cli_value)
{
    if (cli_value > 0)
        return cli_value;

    if (const char *env = std::getenv("SQUINTSIM_THREADS"))
    {
        try
        {
            int n = std::stoi(env);
            if (n > 0)
                return n;
        }
        catch (...)
        {
            // fall through to hardware count on malformed values
        }
    }

    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace squint
