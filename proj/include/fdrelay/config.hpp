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

#ifndef FDRELAY_CONFIG_HPP
#define FDRELAY_CONFIG_HPP

// Scenario files are plain "key = value" lines. '#' starts a comment. Every key
// below is required except mc_samples and mc_seed; unknown or repeated keys
// are errors.
//
//   n_s n_r n_d                    antenna counts
//   p_s_db p_r_db                  source power, relay power budget (dB re 1 W)
//   noise_r_db noise_d_db          noise power at relay / destination (dB)
//   pathloss_sr_db pathloss_rd_db  composite K d^gamma per hop (dB)
//   si_lambda si_beta_db si_mu_db  residual self-interference model
//   mc_samples mc_seed             Monte Carlo settings (default 10000, 0)

#include "errors.hpp"
#include "scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace fdrelay
{
    inline constexpr std::array<std::string_view, 12> required_config_keys{
        "n_s", "n_r", "n_d", "p_s_db", "p_r_db", "noise_r_db", "noise_d_db",
        "pathloss_sr_db", "pathloss_rd_db", "si_lambda", "si_beta_db", "si_mu_db"};

    namespace detail
    {
        inline std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline std::string where(const std::string &source, std::size_t line)
        {
            return source + ":" + std::to_string(line) + ": ";
        }

        template <typename Int>
        Int parse_integer(std::string_view text, const std::string &key, const std::string &source, std::size_t line)
        {
            Int v{};
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw ConfigError(where(source, line) + key + ": expected an integer, got '" + std::string(text) + "'", key, line);
            return v;
        }

        inline double parse_real(std::string_view text, const std::string &key, const std::string &source, std::size_t line)
        {
            double v{};
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
                throw ConfigError(where(source, line) + key + ": expected a finite number, got '" + std::string(text) + "'", key, line);
            return v;
        }
    }

    // Parse a scenario from text; `source` names the origin in diagnostics.
    inline Scenario parse_config_text(std::string_view text, const std::string &source = "<config>")
    {
        struct Entry
        {
            std::string value;
            std::size_t line;
        };
        std::map<std::string, Entry, std::less<>> entries;

        std::size_t line_no = 0;
        std::istringstream in{std::string(text)};
        for (std::string raw; std::getline(in, raw);)
        {
            ++line_no;
            std::string_view line = raw;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(detail::where(source, line_no) + "expected 'key = value'", {}, line_no);
            const std::string key(detail::trim(line.substr(0, eq)));
            const std::string value(detail::trim(line.substr(eq + 1)));

            const bool known = key == "mc_samples" || key == "mc_seed" ||
                               std::find(required_config_keys.begin(), required_config_keys.end(), key) != required_config_keys.end();
            if (!known)
                throw ConfigError(detail::where(source, line_no) + "unknown key '" + key + "'", key, line_no);
            if (entries.contains(key))
                throw ConfigError(detail::where(source, line_no) + "duplicate key '" + key + "'", key, line_no);
            entries.emplace(key, Entry{value, line_no});
        }

        for (std::string_view key : required_config_keys)
            if (!entries.contains(key))
                throw ConfigError(source + ": missing required key '" + std::string(key) + "'", std::string(key), 0);

        auto real = [&](const char *key)
        {
            const Entry &e = entries.find(key)->second;
            return detail::parse_real(e.value, key, source, e.line);
        };
        auto count = [&](const char *key)
        {
            const Entry &e = entries.find(key)->second;
            const int v = detail::parse_integer<int>(e.value, key, source, e.line);
            if (v < 1)
                throw ConfigError(detail::where(source, e.line) + key + ": must be >= 1", key, e.line);
            return v;
        };

        Scenario s;
        s.n_s = count("n_s");
        s.n_r = count("n_r");
        s.n_d = count("n_d");
        s.p_s_db = real("p_s_db");
        s.p_r_db = real("p_r_db");
        s.noise_r_db = real("noise_r_db");
        s.noise_d_db = real("noise_d_db");
        s.pathloss_sr_db = real("pathloss_sr_db");
        s.pathloss_rd_db = real("pathloss_rd_db");
        s.si.lambda = real("si_lambda");
        s.si.beta_db = real("si_beta_db");
        s.si.mu_db = real("si_mu_db");

        if (!(s.si.lambda >= 0.0 && s.si.lambda <= 1.0))
        {
            const std::size_t l = entries.find("si_lambda")->second.line;
            throw ConfigError(detail::where(source, l) + "si_lambda: must satisfy λ ∈ [0,1]", "si_lambda", l);
        }
        if (auto it = entries.find("mc_samples"); it != entries.end())
        {
            const auto n = detail::parse_integer<std::int64_t>(it->second.value, "mc_samples", source, it->second.line);
            if (n < 1)
                throw ConfigError(detail::where(source, it->second.line) + "mc_samples: must be >= 1", "mc_samples", it->second.line);
            s.mc.n_samples = static_cast<std::size_t>(n);
        }
        if (auto it = entries.find("mc_seed"); it != entries.end())
            s.mc.seed = detail::parse_integer<std::uint64_t>(it->second.value, "mc_seed", source, it->second.line);

        s.validate();
        return s;
    }

    inline Scenario parse_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config_text(buf.str(), path);
    }
}

#endif
