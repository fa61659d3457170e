// SPDX-License-Identifier: Apache-2.0
//
// fdrelay: achievable rates and degrees of freedom of half- and full-duplex MIMO relaying
// Copyright (C) 2026 The fdrelay authors
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

#ifndef FDRELAY_ERRORS_HPP
#define FDRELAY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdrelay
{
    // Malformed or out-of-range configuration input. `key` is empty when the
    // problem is not tied to a single key, `line` is 0 when unknown.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &message, std::string key = {}, std::size_t line = 0)
            : std::runtime_error(message), key_(std::move(key)), line_(line) {}

        const std::string &key() const noexcept { return key_; }
        std::size_t line() const noexcept { return line_; }

    private:
        std::string key_;
        std::size_t line_;
    };

    // An optimizer failed to converge within its iteration cap.
    class NumericalFailure : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
