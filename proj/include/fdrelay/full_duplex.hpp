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

#ifndef FDRELAY_FULL_DUPLEX_HPP
#define FDRELAY_FULL_DUPLEX_HPP

#include "detail/bisection.hpp"
#include "half_duplex.hpp"
#include "mimo_rate.hpp"
#include "scenario.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdrelay
{
    // How a full-duplex relay is budgeted against its half-duplex counterpart.
    //  AntennaConserved: r receive + (n_r - r) transmit antennas.
    //  RfChainConserved: 2 n_r RF chains; each receive antenna takes a down- and
    //  an up-converter (analog cancellation), leaving 2 (n_r - r) transmitters.
    enum class DuplexKind
    {
        AntennaConserved,
        RfChainConserved
    };

    inline std::string_view to_string(DuplexKind kind)
    {
        return kind == DuplexKind::AntennaConserved ? "ac" : "rc";
    }

    inline constexpr double relay_power_bracket_ratio = 1e-4;

    inline int transmit_antennas(DuplexKind kind, int n_r, int r)
    {
        if (r < 1 || r > n_r - 1)
            throw std::invalid_argument("receive antenna count r = " + std::to_string(r) +
                                        " violates 0 < r < N_R = " + std::to_string(n_r));
        return kind == DuplexKind::AntennaConserved ? n_r - r : 2 * (n_r - r);
    }

    // Full-time hop rates with r receive antennas and relay power p_tilde_w.
    inline LinkRates fd_link_rates(const Scenario &s, DuplexKind kind, int r, double p_tilde_w,
                                   const CacheStore &caches)
    {
        const int t = transmit_antennas(kind, s.n_r, r);
        if (!(p_tilde_w > 0.0) || p_tilde_w > s.p_r_w() * (1.0 + power_budget_rel_tol))
            throw std::invalid_argument("fd_link_rates: relay power must lie in (0, P_R]");
        const auto h = caches.get(r, s.n_s);
        const auto g = caches.get(s.n_d, t);
        return {ergodic_rate(*h, sinr_relay(s, p_tilde_w) / s.n_s),
                ergodic_rate(*g, snr_dest(s, p_tilde_w) / t)};
    }

    struct PowerControlPoint
    {
        double p_tilde_w = 0.0;
        LinkRates rates;
        bool budget_limited = false;

        const RateEstimate &rate() const { return rates.end_to_end(); }
    };

    // Relay power control for a fixed antenna split. Raising the power only
    // lowers R_SR (more residual interference) and raises R_RD, so either the
    // budget binds or the two rates are equalized by log-domain bisection.
    inline PowerControlPoint optimize_relay_power(const Scenario &s, DuplexKind kind, int r, const CacheStore &caches,
                                                  double tol = default_rate_tolerance)
    {
        if (!(tol > 0.0))
            throw std::invalid_argument("optimize_relay_power: tolerance must be positive");
        const double budget = s.p_r_w();
        const LinkRates at_budget = fd_link_rates(s, kind, r, budget, caches);
        if (at_budget.source_relay.mean_bits >= at_budget.relay_destination.mean_bits - tol)
            return {budget, at_budget, true};

        // R_SR - R_RD decreases in power; bisect on its negation.
        auto residual = [&](double p)
        {
            const LinkRates lr = fd_link_rates(s, kind, r, p, caches);
            return lr.relay_destination.mean_bits - lr.source_relay.mean_bits;
        };
        const double lo = relay_power_bracket_ratio * budget;
        double p = lo;
        if (residual(lo) < 0.0)
            p = detail::bisect_increasing(residual, lo, budget, tol, detail::geometric_mid, "optimize_relay_power");
        const LinkRates at_p = fd_link_rates(s, kind, r, p, caches);
        // equal end-to-end rates resolve to the larger power (flat R_SR when lambda = 1)
        if (at_budget.end_to_end().mean_bits >= at_p.end_to_end().mean_bits)
            return {budget, at_budget, true};
        return {p, at_p, false};
    }

    struct FdOperatingPoint
    {
        DuplexKind kind = DuplexKind::AntennaConserved;
        int r = 1;
        int t = 1;
        double p_tilde_w = 0.0;
        RateEstimate rate;
        RateEstimate r_sr;
        RateEstimate r_rd;
    };

    namespace detail
    {
        inline void require_full_duplex_capable(const Scenario &s)
        {
            if (s.n_r < 2)
                throw std::invalid_argument("full-duplex relaying needs N_R >= 2 so that 0 < r < N_R has a solution (N_R = " +
                                            std::to_string(s.n_r) + ")");
        }

        template <typename EvalR>
        FdOperatingPoint best_over_receive_split(const Scenario &s, DuplexKind kind, EvalR &&eval)
        {
            require_full_duplex_capable(s);
            FdOperatingPoint best;
            bool have = false;
            for (int r = 1; r <= s.n_r - 1; ++r)
            {
                const PowerControlPoint pc = eval(r);
                if (!have || pc.rate().mean_bits > best.rate.mean_bits)
                {
                    best = {kind, r, transmit_antennas(kind, s.n_r, r), pc.p_tilde_w, pc.rate(),
                            pc.rates.source_relay, pc.rates.relay_destination};
                    have = true;
                }
            }
            return best;
        }
    }

    // Max over the receive/transmit split and relay power of min(R_SR, R_RD).
    // Every split is tried; ties keep the smaller r.
    inline FdOperatingPoint optimize_fd(const Scenario &s, DuplexKind kind, const CacheStore &caches,
                                        double tol = default_rate_tolerance)
    {
        return detail::best_over_receive_split(s, kind, [&](int r)
                                               { return optimize_relay_power(s, kind, r, caches, tol); });
    }

    // Same split search with the relay always at full power (no power control).
    inline FdOperatingPoint fd_at_full_power(const Scenario &s, DuplexKind kind, const CacheStore &caches)
    {
        return detail::best_over_receive_split(s, kind, [&](int r)
                                               {
            const LinkRates lr = fd_link_rates(s, kind, r, s.p_r_w(), caches);
            return PowerControlPoint{s.p_r_w(), lr, true}; });
    }
}

#endif
