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

#ifndef SQUINTLIB_ERRORS_HPP
#define SQUINTLIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace squint
{

// Bad physical inputs or violated preconditions (non-positive frequency,
// zero separation, out-of-range angle, ...). Maps to CLI exit code 2.
class domain_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Unreadable, unparsable or inconsistent scenario configuration.
// Maps to CLI exit code 2.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Numerical breakdown at runtime: singular linear systems, quadrature that
// fails to converge, covariance matrices that lose positive semidefiniteness
// beyond tolerance. Maps to CLI exit code 3.
class numerical_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace squint

#endif
