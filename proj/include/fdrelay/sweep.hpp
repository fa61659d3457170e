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

#ifndef FDRELAY_SWEEP_HPP
#define FDRELAY_SWEEP_HPP

#include "csv.hpp"
#include "errors.hpp"
#include "full_duplex.hpp"
#include "half_duplex.hpp"
#include "mimo_rate.hpp"
#include "scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace fdrelay
{
    enum class SweepAxis
    {
        PsDb,
        PrDb,
        Lambda,
        Nr
    };

    enum class RelayMode
    {
        Hd,
        FdAc,
        FdRc
    };

    inline std::string_view to_string(SweepAxis axis)
    {
        switch (axis)
        {
        case SweepAxis::PsDb:
            return "p_s_db";
        case SweepAxis::PrDb:
            return "p_r_db";
        case SweepAxis::Lambda:
            return "lambda";
        case SweepAxis::Nr:
            return "n_r";
        }
        return "?";
    }

    inline std::string_view to_string(RelayMode mode)
    {
        switch (mode)
        {
        case RelayMode::Hd:
            return "hd";
        case RelayMode::FdAc:
            return "fd_ac";
        case RelayMode::FdRc:
            return "fd_rc";
        }
        return "?";
    }

    inline SweepAxis parse_axis(std::string_view name)
    {
        for (auto a : {SweepAxis::PsDb, SweepAxis::PrDb, SweepAxis::Lambda, SweepAxis::Nr})
            if (name == to_string(a))
                return a;
        throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "' (expected p_s_db, p_r_db, lambda or n_r)");
    }

    // Accepts "hd", "fd_ac"/"fd-ac", "fd_rc"/"fd-rc".
    inline RelayMode parse_mode(std::string_view name)
    {
        std::string n(name);
        std::replace(n.begin(), n.end(), '-', '_');
        for (auto m : {RelayMode::Hd, RelayMode::FdAc, RelayMode::FdRc})
            if (n == to_string(m))
                return m;
        throw std::invalid_argument("unknown relay mode '" + std::string(name) + "' (expected hd, fd-ac or fd-rc)");
    }

    inline DuplexKind duplex_kind(RelayMode mode)
    {
        return mode == RelayMode::FdRc ? DuplexKind::RfChainConserved : DuplexKind::AntennaConserved;
    }

    struct SweepSpec
    {
        SweepAxis axis = SweepAxis::PrDb;
        double from = 0.0;
        double to = 0.0;
        double step = 1.0;
        std::vector<RelayMode> modes{RelayMode::Hd};

        void validate() const
        {
            if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step))
                throw std::invalid_argument("sweep bounds must be finite");
            if (from > to)
                throw std::invalid_argument("sweep requires from <= to");
            if (!(step > 0.0))
                throw std::invalid_argument("sweep requires step > 0");
            if (modes.empty())
                throw std::invalid_argument("sweep requires at least one mode");
            if (axis == SweepAxis::Nr && (from != std::floor(from) || step != std::floor(step)))
                throw std::invalid_argument("n_r sweep requires integer from and step");
        }

        std::vector<double> values() const
        {
            validate();
            const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
            std::vector<double> out(count);
            for (std::size_t k = 0; k < count; ++k)
                out[k] = from + static_cast<double>(k) * step;
            return out;
        }
    };

    inline Scenario with_axis_value(Scenario s, SweepAxis axis, double value)
    {
        switch (axis)
        {
        case SweepAxis::PsDb:
            s.p_s_db = value;
            break;
        case SweepAxis::PrDb:
            s.p_r_db = value;
            break;
        case SweepAxis::Lambda:
            s.si.lambda = value;
            break;
        case SweepAxis::Nr:
            s.n_r = static_cast<int>(std::lround(value));
            break;
        }
        s.validate();
        return s;
    }

    namespace detail
    {
        // Runs body(i) for i in [0, n) on up to `threads` workers. The first
        // exception (lowest index) is rethrown after all workers finish.
        template <typename Body>
        void parallel_for(std::size_t n, unsigned threads, Body &&body)
        {
            std::vector<std::exception_ptr> errors(n);
            auto run = [&](std::size_t i)
            {
                try
                {
                    body(i);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            };
            threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
            if (threads == 1)
                for (std::size_t i = 0; i < n; ++i)
                    run(i);
            else
            {
                std::atomic<std::size_t> next{0};
                std::vector<std::jthread> workers;
                for (unsigned w = 0; w < threads; ++w)
                    workers.emplace_back([&]
                                         {
                        for (std::size_t i; (i = next.fetch_add(1)) < n;)
                            run(i); });
            }
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }
    }

    inline std::vector<std::string> sweep_header(const SweepSpec &spec)
    {
        std::vector<std::string> header{std::string(to_string(spec.axis))};
        for (RelayMode m : spec.modes)
        {
            const std::string p(to_string(m));
            header.push_back(p + "_rate");
            header.push_back(p + "_std_err");
            if (m == RelayMode::Hd)
                header.push_back(p + "_tau");
            else
            {
                header.push_back(p + "_r");
                header.push_back(p + "_p_tilde_w");
            }
        }
        return header;
    }

    // Optimized rate of every requested mode at each axis value. All points share
    // one cache store (same seed, same draws), so neighbouring points differ only
    // through the swept parameter.
    inline CsvDataset run_sweep(const Scenario &base, const SweepSpec &spec, unsigned threads = 1,
                                double tol = default_rate_tolerance)
    {
        base.validate();
        const std::vector<double> xs = spec.values();
        const CacheStore caches(base.mc);

        CsvDataset out;
        out.header = sweep_header(spec);
        std::vector<std::vector<CsvDataset::Cell>> rows(xs.size());

        detail::parallel_for(xs.size(), threads, [&](std::size_t i)
                             {
            const double x = xs[i];
            const std::string at = std::string(to_string(spec.axis)) + " = " + format_number(x) + ": ";
            try
            {
                const Scenario s = with_axis_value(base, spec.axis, x);
                std::vector<CsvDataset::Cell> row{x};
                for (RelayMode m : spec.modes)
                {
                    if (m == RelayMode::Hd)
                    {
                        const HdOperatingPoint hd = optimize_tau(s, caches, tol);
                        row.insert(row.end(), {hd.rate.mean_bits, hd.rate.std_err, hd.tau});
                    }
                    else
                    {
                        const FdOperatingPoint fd = optimize_fd(s, duplex_kind(m), caches, tol);
                        row.insert(row.end(), {fd.rate.mean_bits, fd.rate.std_err, double(fd.r), fd.p_tilde_w});
                    }
                }
                rows[i] = std::move(row);
            }
            catch (const NumericalFailure &e)
            {
                throw NumericalFailure(at + e.what());
            }
            catch (const std::invalid_argument &e)
            {
                throw std::invalid_argument(at + e.what());
            } });

        for (auto &row : rows)
            out.add_row(std::move(row));
        return out;
    }
}

#endif
