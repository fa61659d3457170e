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

#ifndef FDRELAY_HALF_DUPLEX_HPP
#define FDRELAY_HALF_DUPLEX_HPP

#include "detail/bisection.hpp"
#include "mimo_rate.hpp"
#include "scenario.hpp"

#include <stdexcept>

namespace fdrelay
{
    inline constexpr double default_rate_tolerance = 1e-6; // bits
    inline constexpr double tau_min = 1e-4;
    inline constexpr double tau_max = 1.0 - 1e-4;

    struct LinkRates
    {
        RateEstimate source_relay;
        RateEstimate relay_destination;

        const RateEstimate &end_to_end() const { return min_rate(source_relay, relay_destination); }
    };

    struct HdOperatingPoint
    {
        double tau = 0.5;
        RateEstimate rate;
        RateEstimate r_sr;
        RateEstimate r_rd;
    };

    // Half-duplex hop rates when the relay listens for a fraction tau of the time.
    // Both transmitters burst their power over the time they are active.
    inline LinkRates hd_link_rates(const Scenario &s, double tau, const CacheStore &caches)
    {
        if (!(tau > 0.0 && tau < 1.0))
            throw std::invalid_argument("hd_link_rates: tau must lie in (0, 1)");
        const auto h = caches.get(s.n_r, s.n_s);
        const auto g = caches.get(s.n_d, s.n_r);
        const double coef_sr = snr_relay(s) / (tau * s.n_s);
        const double coef_rd = snr_dest(s, s.p_r_w()) / ((1.0 - tau) * s.n_r);
        return {ergodic_rate(*h, coef_sr).scaled(tau), ergodic_rate(*g, coef_rd).scaled(1.0 - tau)};
    }

    // Max over tau of min(R_SR, R_RD). R_SR rises and R_RD falls in tau on a fixed
    // cache, so the optimum is their crossing, located by bisection.
    inline HdOperatingPoint optimize_tau(const Scenario &s, const CacheStore &caches,
                                         double tol = default_rate_tolerance)
    {
        if (!(tol > 0.0))
            throw std::invalid_argument("optimize_tau: tolerance must be positive");
        auto residual = [&](double tau)
        {
            const LinkRates r = hd_link_rates(s, tau, caches);
            return r.source_relay.mean_bits - r.relay_destination.mean_bits;
        };

        double tau = 0.0;
        if (residual(tau_min) >= 0.0)
            tau = tau_min;
        else if (residual(tau_max) <= 0.0)
            tau = tau_max;
        else
            tau = detail::bisect_increasing(residual, tau_min, tau_max, tol, detail::arithmetic_mid, "optimize_tau");

        const LinkRates r = hd_link_rates(s, tau, caches);
        return {tau, r.end_to_end(), r.source_relay, r.relay_destination};
    }
}

#endif
